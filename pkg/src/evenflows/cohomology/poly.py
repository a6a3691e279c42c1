"""Sparse multivariate polynomials over Q on graded variables."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import DomainError

Monomial = tuple[int, ...]


class MultiPoly:
    """Polynomial in named variables with positive integer degrees.

    ``terms`` maps exponent vectors (aligned with ``names``) to nonzero
    Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("names", "degrees", "terms")

    def __init__(self, names: Sequence[str], degrees: Sequence[int], terms: Mapping[Monomial, object] = ()):
        if len(names) != len(degrees):
            raise DomainError("each variable needs exactly one degree")
        if any(d < 1 for d in degrees):
            raise DomainError("variable degrees must be positive")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        clean = {}
        for mono, coef in dict(terms).items():
            if len(mono) != len(self.names):
                raise DomainError(f"exponent vector {mono} has the wrong length")
            coef = Fraction(coef)
            if coef:
                clean[tuple(mono)] = clean.get(tuple(mono), 0) + coef
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def variable(cls, names, degrees, name: str) -> "MultiPoly":
        i = list(names).index(name)
        mono = tuple(int(j == i) for j in range(len(names)))
        return cls(names, degrees, {mono: 1})

    @classmethod
    def constant(cls, names, degrees, value) -> "MultiPoly":
        return cls(names, degrees, {(0,) * len(names): value})

    def _like(self, terms) -> "MultiPoly":
        return MultiPoly(self.names, self.degrees, terms)

    def _check(self, other: "MultiPoly") -> None:
        if self.names != other.names or self.degrees != other.degrees:
            raise DomainError("polynomials live in different rings")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._like(out)

    def __neg__(self) -> "MultiPoly":
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self._like({m: c * Fraction(other) for m, c in self.terms.items()})
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None if zero or inhomogeneous."""
        degs = {self.monomial_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def kill(self, names: Iterable[str]) -> "MultiPoly":
        """Substitute 0 for the given variables and drop them from the ring."""
        dead = set(names)
        keep = [i for i, nm in enumerate(self.names) if nm not in dead]
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if any(m[i] for i, nm in enumerate(self.names) if nm in dead):
                continue
            mono = tuple(m[i] for i in keep)
            out[mono] = out.get(mono, 0) + c
        return MultiPoly([self.names[i] for i in keep], [self.degrees[i] for i in keep], out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                nm if e == 1 else f"{nm}^{e}" for nm, e in zip(self.names, m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def monomials_of_degree(degrees: Sequence[int], d: int) -> list[Monomial]:
    """All exponent vectors of weighted degree d, in degree-lex order (descending lex)."""
    out: list[Monomial] = []
    r = len(degrees)

    def rec(i: int, left: int, prefix: list[int]):
        if i == r:
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(left // degrees[i], -1, -1):
            prefix.append(e)
            rec(i + 1, left - e * degrees[i], prefix)
            prefix.pop()

    if d >= 0:
        rec(0, d, [])
    return out


def count_monomials(degrees: Sequence[int], d: int) -> int:
    ways = [1] + [0] * d
    for deg in degrees:
        for total in range(deg, d + 1):
            ways[total] += ways[total - deg]
    return ways[d] if d >= 0 else 0
