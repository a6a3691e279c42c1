"""Invariant degrees of Weyl groups and Poincare polynomials of G/H.

Degrees use the half grading (H^2 has degree 1), so GL(n) has degrees
1..n and the involution (-1)^deg on cohomology is q -> -q.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError

KINDS = ("GL", "SL", "SO_odd", "SO_even", "Sp", "Spin_odd", "Spin_even", "U1", "F4", "E6", "Product")

_EXCEPTIONAL = {"F4": (2, 6, 8, 12), "E6": (2, 5, 6, 8, 9, 12)}


@dataclass(frozen=True)
class GroupSpec:
    """A compact/reductive group, identified by its Weyl degree data.

    ``n`` is the subscript as usually written: GL(n), SL(n), Sp(n) of rank n,
    SO(N) and Spin(N) of matrix size N.
    """

    kind: str
    n: int = 0
    factors: tuple["GroupSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unsupported group kind {self.kind!r}")
        if self.kind in ("GL", "SL", "Sp") and self.n < 1:
            raise DomainError(f"{self.kind} needs a positive rank parameter")
        if self.kind.startswith(("SO", "Spin")):
            if self.n < 2:
                raise DomainError(f"{self.kind}({self.n}) is not supported")
            if (self.n % 2 == 1) != self.kind.endswith("odd"):
                raise DomainError(f"{self.kind} with N={self.n} has the wrong parity")

    def __str__(self) -> str:
        if self.kind == "Product":
            return "x".join(str(f) for f in self.factors)
        if self.kind in ("U1", "F4", "E6"):
            return self.kind
        return f"{self.kind.split('_')[0]}{self.n}"

    @property
    def rank(self) -> int:
        if self.kind == "Product":
            return sum(f.rank for f in self.factors)
        if self.kind == "SL":
            return self.n - 1
        if self.kind.startswith(("SO", "Spin")):
            return self.n // 2
        if self.kind == "U1":
            return 1
        if self.kind in _EXCEPTIONAL:
            return len(_EXCEPTIONAL[self.kind])
        return self.n


def GL(n: int) -> GroupSpec:
    return GroupSpec("GL", n)


def SL(n: int) -> GroupSpec:
    return GroupSpec("SL", n)


def SO(N: int) -> GroupSpec:
    return GroupSpec("SO_odd" if N % 2 else "SO_even", N)


def Spin(N: int) -> GroupSpec:
    return GroupSpec("Spin_odd" if N % 2 else "Spin_even", N)


def Sp(n: int) -> GroupSpec:
    return GroupSpec("Sp", n)


def U1() -> GroupSpec:
    return GroupSpec("U1")


def F4() -> GroupSpec:
    return GroupSpec("F4")


def E6() -> GroupSpec:
    return GroupSpec("E6")


def Product(*factors: GroupSpec) -> GroupSpec:
    return GroupSpec("Product", factors=tuple(factors))


@dataclass(frozen=True)
class HomogeneousPair:
    ambient: GroupSpec
    subgroup: GroupSpec

    def __str__(self) -> str:
        return f"{self.ambient}/{self.subgroup}"


def invariant_degrees(g: GroupSpec) -> tuple[int, ...]:
    """Degrees of the fundamental invariants of the Weyl group.

    For SO(2m)/Spin(2m) the Pfaffian degree m is listed last; products
    concatenate their factors' lists.
    """
    kind, n = g.kind, g.n
    if kind == "Product":
        return tuple(d for f in g.factors for d in invariant_degrees(f))
    if kind == "GL":
        return tuple(range(1, n + 1))
    if kind == "SL":
        return tuple(range(2, n + 1))
    if kind in ("SO_odd", "Spin_odd"):
        return tuple(range(2, n, 2))
    if kind == "Sp":
        return tuple(range(2, 2 * n + 1, 2))
    if kind in ("SO_even", "Spin_even"):
        m = n // 2
        return tuple(range(2, 2 * m - 1, 2)) + (m,)
    if kind == "U1":
        return (1,)
    return _EXCEPTIONAL[kind]


def weyl_order(g: GroupSpec) -> int:
    return math.prod(invariant_degrees(g))


def pfaffian_degrees(g: GroupSpec) -> tuple[int, ...]:
    """Degrees of the Pfaffian-type generators (one per even orthogonal factor)."""
    if g.kind == "Product":
        return tuple(d for f in g.factors for d in pfaffian_degrees(f))
    if g.kind in ("SO_even", "Spin_even"):
        return (g.n // 2,)
    if g.kind == "U1":
        # U(1) = SO(2); its generator is the SO(2) Pfaffian
        return (1,)
    return ()


_FACTOR = re.compile(r"^(GL|SL|SO|Spin|Sp|U)(\d+)$")


def parse_group(text: str) -> GroupSpec:
    parts = [p.strip() for p in text.strip().split("x")]
    if not all(parts):
        raise DomainError(f"malformed group {text!r}")
    factors = [_parse_factor(p) for p in parts]
    return factors[0] if len(factors) == 1 else Product(*factors)


def _parse_factor(text: str) -> GroupSpec:
    if text in _EXCEPTIONAL:
        return GroupSpec(text)
    match = _FACTOR.match(text)
    if not match:
        raise DomainError(f"unknown group {text!r}")
    name, num = match.group(1), int(match.group(2))
    if name == "U":
        if num != 1:
            raise DomainError("only U1 is supported")
        return U1()
    return {"GL": GL, "SL": SL, "SO": SO, "Spin": Spin, "Sp": Sp}[name](num)


def parse_pair(text: str) -> HomogeneousPair:
    """Parse 'GL4/GL2xGL2', 'E6/Spin10xU1', ..."""
    if text.count("/") != 1:
        raise DomainError(f"pair must look like G/H, got {text!r}")
    g, h = text.split("/")
    return HomogeneousPair(parse_group(g), parse_group(h))


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(f"{coef}{mono}")
        return " + ".join(terms) or "0"


def _mul_factor(poly: list[int], d: int, sign: int) -> list[int]:
    out = poly + [0] * d
    for i, c in enumerate(poly):
        out[i + d] -= sign * c
    return out


def _div_factor(poly: list[int], d: int, sign: int) -> list[int] | None:
    # exact division by (1 - sign*q^d); None if not exact
    if len(poly) <= d:
        return None if any(poly) else []
    quot = [0] * (len(poly) - d)
    for i in range(len(quot)):
        quot[i] = poly[i] + (sign * quot[i - d] if i >= d else 0)
    if _mul_factor(quot, d, sign) != poly:
        return None
    return quot


def product_quotient(num: Iterable[tuple[int, int]], den: Iterable[tuple[int, int]]) -> IntPolynomial:
    """Exact quotient prod(1 - s q^d) / prod(1 - s q^d) over (d, s) factor lists.

    Raises DomainError if the quotient is not a polynomial.
    """
    poly = [1]
    for d, s in num:
        poly = _mul_factor(poly, d, s)
    for d, s in den:
        nxt = _div_factor(poly, d, s)
        if nxt is None:
            raise DomainError("quotient of degree products is not a polynomial")
        poly = nxt
    return IntPolynomial(tuple(poly))


def degree_quotient(num_degrees: Sequence[int], den_degrees: Sequence[int]) -> IntPolynomial:
    return product_quotient(((d, 1) for d in num_degrees), ((d, 1) for d in den_degrees))


def _check_pair(pair: HomogeneousPair) -> None:
    if pair.ambient.rank != pair.subgroup.rank:
        raise DomainError(
            f"{pair} is not an equal-rank pair ({pair.ambient.rank} vs {pair.subgroup.rank})"
        )


def poincare_polynomial(pair: HomogeneousPair) -> IntPolynomial:
    _check_pair(pair)
    poly = degree_quotient(invariant_degrees(pair.ambient), invariant_degrees(pair.subgroup))
    if any(c < 0 for c in poly.coefficients):
        raise DomainError(f"{pair} has a Poincare polynomial with negative coefficients")
    return poly


def euler_characteristic(pair: HomogeneousPair) -> int:
    return poincare_polynomial(pair)(1)


def signature(pair: HomogeneousPair) -> int:
    """Trace of (-1)^deg on H*(G/H): the Poincare polynomial at q = -1."""
    return poincare_polynomial(pair)(-1)


def weyl_ratio(pair: HomogeneousPair) -> int:
    _check_pair(pair)
    a, b = weyl_order(pair.ambient), weyl_order(pair.subgroup)
    if a % b:
        raise DomainError(f"|W_H| does not divide |W_G| for {pair}")
    return a // b


def closed_form_weyl_order(g: GroupSpec) -> int:
    """|W| from the textbook formulas, independent of the degree tables."""
    kind, n = g.kind, g.n
    if kind == "Product":
        return math.prod(closed_form_weyl_order(f) for f in g.factors)
    if kind in ("GL", "SL"):
        return math.factorial(n)
    if kind in ("SO_odd", "Spin_odd"):
        m = n // 2
        return 2**m * math.factorial(m)
    if kind == "Sp":
        return 2**n * math.factorial(n)
    if kind in ("SO_even", "Spin_even"):
        m = n // 2
        return 2 ** (m - 1) * math.factorial(m)
    if kind == "U1":
        return 1
    return {"F4": 1152, "E6": 51840}[kind]


def _self_validate() -> None:
    groups = [F4(), E6(), U1()]
    for r in range(1, 13):
        groups += [GL(r), SL(r + 1), SO(2 * r + 1), Spin(2 * r + 1), Sp(r)]
        groups += [SO(2 * r), Spin(2 * r)]
    for g in groups:
        if weyl_order(g) != closed_form_weyl_order(g):
            raise AssertionError(f"degree table for {g} is inconsistent")


_self_validate()
