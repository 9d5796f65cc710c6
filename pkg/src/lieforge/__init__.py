"""lieforge: exact computations in free Lie rings and braid automorphism groups."""

__version__ = "0.1.0"
