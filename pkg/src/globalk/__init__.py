"""Finite-window computations for global algebraic K-theory at the level of components."""

__version__ = "0.1.0"
