"""Command-line entry points, run as ``python -m rigidcheck.scripts.<name>``."""
