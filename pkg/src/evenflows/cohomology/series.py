"""Hilbert series of the form prod(1 - q^a) / prod(1 - q^b)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from ..errors import DomainError
from ..weyl import IntPolynomial, degree_quotient


def _divisors(d: int) -> list[int]:
    return [e for e in range(1, d + 1) if d % e == 0]


@dataclass(frozen=True, eq=False)
class HilbertSeries:
    """Numerator factors (1 - q^a) over denominator factors (1 - q^b).

    Stored in canonical form: exponent multisets sorted, matching factors
    cancelled.  Equality is equality of rational functions, decided through
    the cyclotomic factorisation 1 - q^d = -prod_{e | d} Phi_e(q) up to sign.
    """

    numerator_exponents: tuple[int, ...] = ()
    denominator_exponents: tuple[int, ...] = ()

    def __post_init__(self):
        num, den = Counter(self.numerator_exponents), Counter(self.denominator_exponents)
        if any(d < 1 for d in num.elements()) or any(d < 1 for d in den.elements()):
            raise DomainError("factor exponents must be positive")
        common = num & den
        num, den = num - common, den - common
        object.__setattr__(self, "numerator_exponents", tuple(sorted(num.elements())))
        object.__setattr__(self, "denominator_exponents", tuple(sorted(den.elements())))

    @classmethod
    def free(cls, degrees: Iterable[int]) -> "HilbertSeries":
        """Series of a polynomial ring on generators of the given degrees."""
        return cls((), tuple(degrees))

    def cyclotomic_profile(self) -> dict[int, int]:
        prof: Counter = Counter()
        for d in self.numerator_exponents:
            for e in _divisors(d):
                prof[e] += 1
        for d in self.denominator_exponents:
            for e in _divisors(d):
                prof[e] -= 1
        return {e: v for e, v in sorted(prof.items()) if v}

    def _sign(self) -> int:
        # each factor 1 - q^d equals -prod Phi_e; track the overall sign
        return (-1) ** ((len(self.numerator_exponents) + len(self.denominator_exponents)) % 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.cyclotomic_profile() == other.cyclotomic_profile() and self._sign() == other._sign()

    def __hash__(self) -> int:
        return hash((tuple(self.cyclotomic_profile().items()), self._sign()))

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(
            self.numerator_exponents + other.numerator_exponents,
            self.denominator_exponents + other.denominator_exponents,
        )

    def __truediv__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(
            self.numerator_exponents + other.denominator_exponents,
            self.denominator_exponents + other.numerator_exponents,
        )

    def coefficients(self, max_degree: int) -> list[int]:
        """Power-series coefficients up to and including q^max_degree."""
        coeffs = [1] + [0] * max_degree
        for a in self.numerator_exponents:
            for i in range(max_degree, a - 1, -1):
                coeffs[i] -= coeffs[i - a]
        for b in self.denominator_exponents:
            for i in range(b, max_degree + 1):
                coeffs[i] += coeffs[i - b]
        return coeffs

    def as_polynomial(self) -> IntPolynomial:
        """The series as a polynomial; DomainError if it is not one."""
        return degree_quotient(self.numerator_exponents, self.denominator_exponents)

    def rank(self) -> int:
        return self.as_polynomial()(1)

    def to_json(self) -> dict:
        return {"num": list(self.numerator_exponents), "den": list(self.denominator_exponents)}

    def __str__(self) -> str:
        def prod(exps):
            return "".join(f"(1-q^{d})" for d in exps) or "1"

        if not self.denominator_exponents:
            return prod(self.numerator_exponents)
        return f"{prod(self.numerator_exponents)}/{prod(self.denominator_exponents)}"
