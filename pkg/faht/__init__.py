# faht/__init__.py
"""Fairness-aware Hoeffding trees for discriminated data streams."""

__version__ = "0.1.0"
