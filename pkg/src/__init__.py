"""
lamina: combinatorial models of polynomial Julia sets from external rays.
"""

__version__ = "0.2.0"
__author__ = "kjunghoan"
