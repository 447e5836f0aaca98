# faht/utils/__init__.py
