"""Exact verification engine for Fibonacci-harmonic summation identities."""

__version__ = "0.1.0"
