"""sabar - exact persistent-homology barcodes of finite and semi-algebraic filtrations."""

__version__ = "0.1.0"
