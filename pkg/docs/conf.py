# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
import re
sys.path.insert(0, os.path.abspath('../'))


def get_property(prop, project):
    result = re.search(r'{}\s*=\s*[\'"]([^\'"]*)[\'"]'.format(prop),
                       open(os.path.join(os.path.abspath('../'), project, '__init__.py')).read())
    return result.group(1)


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.imgmath',
              'sphinx.ext.githubpages',
              'sphinx.ext.inheritance_diagram']

inheritance_graph_attrs = dict(rankdir="TB", ratio='compress')

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'sqreflex'
copyright = u'2026, sqreflex developers'
author = u'sqreflex developers'
description = u'Square-reflexive polynomials and quadratic forms over F_q(X) in pure Python'

version = get_property('__version__', 'sqreflex')
release = version

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output -------------------------------------------------

html_theme = 'default'
html_theme_options = {}
html_static_path = ['_static']
html_copy_source = False
html_show_sourcelink = False
htmlhelp_basename = 'sqreflexdoc'

# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'sqreflex.tex', u'sqreflex Documentation', author, 'manual'),
]

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'sqreflex', u'sqreflex Documentation', [author], 1)
]
