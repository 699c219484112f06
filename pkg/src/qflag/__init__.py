"""Exact computations on quantum flag manifolds and the quantized interval."""
from .scalar import ONE, ZERO, ScalarQ, qpow

__version__ = "0.1.0"
__all__ = ["ONE", "ZERO", "ScalarQ", "qpow"]
