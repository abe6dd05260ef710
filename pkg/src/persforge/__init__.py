"""persforge: indecomposable one-parameter extensions of persistence modules.

The package builds, for a finite n-dimensional persistence module given over
an exact field, an (n+1)-dimensional indecomposable module containing it as a
hyperplane restriction, and machine-checks the structural claims (layer
equality, endomorphism dimension, viability of the interval homs used by the
layer maps) on fixtures and randomized instances.
"""

from .exactfield import GF2, GF5, QQ, Field, Matrix

__all__ = ["Field", "Matrix", "GF2", "GF5", "QQ"]
__version__ = "0.1.0"
