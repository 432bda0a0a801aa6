"""Displacement calculus - exact partition difficulty engine and toolkit."""

__version__ = "0.1.0"
