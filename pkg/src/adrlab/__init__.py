"""Exact tools for ADR algebras: quiver presentations, module theory and
quasihereditary structure checks over Q and prime fields."""

from .fields import Field
from .linalg import Matrix

__all__ = ["Field", "Matrix"]

__version__ = "0.1.0"
