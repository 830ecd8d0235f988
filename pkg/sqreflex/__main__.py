"""
.. module:: __main__
    :platform: Unix, Windows
    :synopsis: Entry point for ``python -m sqreflex``

.. moduleauthor:: sqreflex developers

"""

from .cli import main

if __name__ == '__main__':
    main()
