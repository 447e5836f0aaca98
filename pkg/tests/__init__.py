# tests/__init__.py
"""Test suite for faht-stream."""
