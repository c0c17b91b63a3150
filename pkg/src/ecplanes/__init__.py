"""Legitimate colorings of projective planes, entropy-compression runners and
the Dyck-word / generating-function counting behind them."""

__version__ = "0.1.0"
