"""Very stable and even very stable fixed points of the GL(n) Higgs moduli space.

Exact combinatorics of even minuscule weights, divisor-level classification
of type (1,...,1) fixed points, Weyl-group degree data of homogeneous spaces,
and graded-dimension checks of the equivariant-cohomology models of the
Hitchin map.
"""

from .errors import DomainError, InvariantBreach, ResourceCapError

__version__ = "0.1.0"

__all__ = ["DomainError", "InvariantBreach", "ResourceCapError", "__version__"]
