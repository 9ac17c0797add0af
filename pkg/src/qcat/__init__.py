"""Finite, decidable quasi-category computations with explicit witnesses."""

__version__ = "0.1.0"
