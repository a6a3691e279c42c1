"""Graded ring presentations and their graded dimensions."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import DomainError, ResourceCapError
from .poly import MultiPoly, count_monomials, monomials_of_degree
from .series import HilbertSeries

DEFAULT_MONOMIAL_CAP = 20000
CAP_ENV = "EVENFLOWS_MONOMIAL_CAP"


def monomial_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_MONOMIAL_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"{CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class GradedPresentation:
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    relations: tuple[MultiPoly, ...] = ()
    base_generators: frozenset[str] = field(default_factory=frozenset)
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "base_generators", frozenset(self.base_generators))
        if len(set(self.names)) != len(self.names):
            raise DomainError("generator names must be distinct")
        if not self.base_generators <= set(self.names):
            raise DomainError("base generators must be generators")
        for r in self.relations:
            if r.names != self.names or r.degrees != self.degrees:
                raise DomainError("relation lives in a different ring")
            if r.is_zero() or not r.is_homogeneous():
                raise DomainError(f"relation {r!r} is zero or not homogeneous")

    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(r.homogeneous_degree() for r in self.relations)

    def generator(self, name: str) -> MultiPoly:
        return MultiPoly.variable(self.names, self.degrees, name)


def grassmannian_presentation(n: int, k: int) -> GradedPresentation:
    """Equivariant cohomology of Gr_k(C^n) as a quotient of C[e, f, c].

    Relations are the coefficients of t^{n-1}, ..., t^0 in
    (t^k + e_1 t^{k-1} + ... + e_k)(t^{n-k} + f_1 t^{n-k-1} + ...) - (t^n + c_1 t^{n-1} + ...).
    """
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got n={n}, k={k}")
    names = (
        [f"e{i}" for i in range(1, k + 1)]
        + [f"f{j}" for j in range(1, n - k + 1)]
        + [f"c{l}" for l in range(1, n + 1)]
    )
    degrees = list(range(1, k + 1)) + list(range(1, n - k + 1)) + list(range(1, n + 1))

    def coeff(prefix: str, i: int, top: int) -> MultiPoly:
        if i == 0:
            return MultiPoly.constant(names, degrees, 1)
        if i > top:
            return MultiPoly(names, degrees)
        return MultiPoly.variable(names, degrees, f"{prefix}{i}")

    relations = []
    for j in range(1, n + 1):
        rel = -coeff("c", j, n)
        for a in range(0, j + 1):
            rel = rel + coeff("e", a, k) * coeff("f", j - a, n - k)
        relations.append(rel)
    return GradedPresentation(
        names, degrees, relations,
        base_generators={f"c{l}" for l in range(1, n + 1)},
        label=f"H_GL{n}(Gr_{k}(C^{n}))",
    )


def theta_coinvariant(
    pres: GradedPresentation, anti_invariant: Callable[[str, int], bool] | None = None
) -> GradedPresentation:
    """Quotient by the anti-invariant generators (odd degree by default)."""
    if anti_invariant is None:
        anti_invariant = lambda name, deg: deg % 2 == 1  # noqa: E731
    dead = [nm for nm, d in zip(pres.names, pres.degrees) if anti_invariant(nm, d)]
    if not dead:
        return pres
    keep = [(nm, d) for nm, d in zip(pres.names, pres.degrees) if nm not in dead]
    relations = [r.kill(dead) for r in pres.relations]
    return GradedPresentation(
        [nm for nm, _ in keep],
        [d for _, d in keep],
        [r for r in relations if not r.is_zero()],
        base_generators=pres.base_generators - set(dead),
        label=f"{pres.label}_theta" if pres.label else "",
    )


def hilbert_series_ci(pres: GradedPresentation) -> HilbertSeries:
    """Series assuming the relations form a regular sequence."""
    return HilbertSeries(pres.relation_degrees(), pres.degrees)


def _rank(rows: list[dict[int, Fraction]]) -> int:
    # sparse elimination over Q; each pivot row is normalised with leading entry 1
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = {col: val * inv for col, val in row.items()}
                break
            factor = row[lead]
            for col, val in piv.items():
                new = row.get(col, 0) - factor * val
                if new:
                    row[col] = new
                else:
                    row.pop(col, None)
    return len(pivots)


def graded_dims_oracle(pres: GradedPresentation, max_degree: int, cap: int | None = None) -> list[int]:
    """dim_Q (R / I)_d for d = 0..max_degree by exact linear algebra.

    In each degree d the ideal is spanned by monomial multiples m * r of the
    relations; the dimension is (#monomials of degree d) - rank of that span.
    """
    if max_degree < 0:
        raise DomainError("max_degree must be nonnegative")
    cap = monomial_cap() if cap is None else cap
    rel_degrees = pres.relation_degrees()
    dims = []
    for d in range(max_degree + 1):
        count = count_monomials(pres.degrees, d)
        if count > cap:
            raise ResourceCapError(f"{count} monomials in degree {d} exceeds the cap of {cap}")
        basis = monomials_of_degree(pres.degrees, d)
        column = {m: i for i, m in enumerate(basis)}
        rows = []
        for rel, rd in zip(pres.relations, rel_degrees):
            if rd > d:
                continue
            for mult in monomials_of_degree(pres.degrees, d - rd):
                row = {}
                for mono, c in rel.terms.items():
                    row[column[tuple(a + b for a, b in zip(mono, mult))]] = c
                rows.append(row)
        dims.append(len(basis) - _rank(rows))
    return dims


def free_presentation(degrees: Sequence[int], prefix: str = "x") -> GradedPresentation:
    names = [f"{prefix}{i}" for i in range(1, len(degrees) + 1)]
    return GradedPresentation(names, degrees)
