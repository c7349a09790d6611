"""Twist eigenvalues of cuspidal local systems, by exact computation."""

__version__ = "0.1.0"
