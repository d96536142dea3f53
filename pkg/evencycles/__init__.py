"""Certificate-producing search for disjoint cycles of consecutive even lengths."""

__version__ = "0.1.0"
