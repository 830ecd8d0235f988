""" Square-reflexive polynomials, tame symbols and isotropy of quadratic forms over F_q(X) in pure Python

.. moduleauthor:: sqreflex developers

"""

# Library version
__version__ = "1.0.0"

# Author and licence
__author__ = "sqreflex developers"
__license__ = "MIT"

# Support for "from sqreflex import *"
# @see: https://stackoverflow.com/a/41895257
# @see: https://stackoverflow.com/a/35710527
__all__ = [
    'cli',
    'config',
    'corpus',
    'exceptions',
    'exchange',
    'gf',
    'hyperell',
    'linalg',
    'places',
    'polyring',
    'qforms',
    'quotalg',
    'sqref',
    'transfer'
]
