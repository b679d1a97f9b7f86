"""
V-Order Toolkit Application Package

String comparison, factorization and suffix sorting in V-order, exposed as
a command line and as Model Context Protocol tools.
"""

__version__ = "1.0.0"
__author__ = "V-Order Toolkit Contributors"
