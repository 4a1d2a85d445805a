"""Exact modular-representation-theory toolkit for desk-scale finite groups."""

from .gf import FieldCtx, FieldError

__all__ = ["FieldCtx", "FieldError"]

__version__ = "0.1.0"
