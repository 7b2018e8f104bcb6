"""Exact character tables and Kronecker / induced multiplicities of finite groups."""

__version__ = "0.1.0"
