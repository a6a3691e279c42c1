"""Coinvariant algebras of equivariant cohomology of cominuscule flag varieties.

Each case pairs a Hermitian symmetric space G/H, with an involution acting
on the Weyl-invariant generators by signs, against a compact symmetric
space G'/H' whose equivariant cohomology should be the coinvariant algebra.
Equality is certified at the level of Hilbert series, plus rank, signature
and (where an explicit presentation exists) exact graded dimensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .. import weyl
from ..errors import DomainError
from ..weyl import GL, SL, SO, E6, F4, Sp, Spin, U1, GroupSpec, Product
from .presentation import (
    GradedPresentation,
    grassmannian_presentation,
    graded_dims_oracle,
    hilbert_series_ci,
    theta_coinvariant,
)
from .series import HilbertSeries

CASES = ("quaternionic", "sphere", "cayley", "real_grassmannian", "so4n")

_ARITY = {"quaternionic": 2, "sphere": 1, "cayley": 0, "real_grassmannian": 2, "so4n": 1}


@dataclass(frozen=True)
class DiagramCase:
    case: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.case not in CASES:
            raise DomainError(f"unknown diagram case {self.case!r}; expected one of {CASES}")
        if len(self.params) != _ARITY[self.case]:
            raise DomainError(f"{self.case} takes {_ARITY[self.case]} parameter(s), got {self.params}")
        p = self.params
        if self.case == "quaternionic" and not 0 < p[1] < p[0]:
            raise DomainError(f"quaternionic(n,k) needs 0 < k < n, got {p}")
        if self.case in ("sphere", "so4n") and p[0] < 1:
            raise DomainError(f"{self.case}(n) needs n >= 1")
        if self.case == "real_grassmannian" and not 1 <= p[1] <= p[0]:
            raise DomainError(f"real_grassmannian(n,k) needs 1 <= k <= n, got {p}")

    def __str__(self) -> str:
        return f"{self.case}({','.join(map(str, self.params))})" if self.params else self.case


@dataclass(frozen=True)
class _Setup:
    ambient: GroupSpec
    subgroup: GroupSpec
    anti_ambient: tuple[int, ...]     # degrees of anti-invariant generators
    anti_subgroup: tuple[int, ...]
    compact_ambient: tuple[int, ...]  # degree data of G'
    compact_subgroup: tuple[int, ...]  # degree data of H'
    compact_label: str
    status: str
    presentation: GradedPresentation | None = None


def _odd(degrees: Sequence[int]) -> tuple[int, ...]:
    return tuple(d for d in degrees if d % 2)


def _minus(degrees: Sequence[int], removed: Sequence[int]) -> tuple[int, ...]:
    left = Counter(degrees)
    left.subtract(removed)
    if any(v < 0 for v in left.values()):
        raise DomainError("anti-invariant degrees are not a sub-multiset of the generators")
    return tuple(sorted(left.elements()))


def _setup(case: DiagramCase) -> _Setup:
    p = case.params
    if case.case == "quaternionic":
        n, k = p
        g, h = GL(2 * n), Product(GL(2 * k), GL(2 * n - 2 * k))
        ig, ih = weyl.invariant_degrees(g), weyl.invariant_degrees(h)
        cg, ch = Sp(n), Product(Sp(k), Sp(n - k))
        return _Setup(
            g, h, _odd(ig), _odd(ih),
            weyl.invariant_degrees(cg), weyl.invariant_degrees(ch),
            f"Sp{n}/Sp{k}xSp{n - k}", "proved",
            theta_coinvariant(grassmannian_presentation(2 * n, 2 * k)),
        )
    if case.case == "sphere":
        (n,) = p
        g, h = SO(4 * n + 2), Product(SO(2), SO(4 * n))
        cg, ch = SO(4 * n + 1), SO(4 * n)
        return _Setup(
            g, h, _odd(weyl.invariant_degrees(g)), _odd(weyl.invariant_degrees(h)),
            weyl.invariant_degrees(cg), weyl.invariant_degrees(ch),
            f"SO{4 * n + 1}/SO{4 * n}", "proved",
        )
    if case.case == "cayley":
        g, h = E6(), Product(Spin(10), U1())
        cg, ch = F4(), Spin(9)
        return _Setup(
            g, h, _odd(weyl.invariant_degrees(g)), _odd(weyl.invariant_degrees(h)),
            weyl.invariant_degrees(cg), weyl.invariant_degrees(ch),
            "F4/Spin9", "proved",
        )
    if case.case == "real_grassmannian":
        n, k = p
        g = SL(2 * n + 1)
        h = Product(SL(2 * k), SL(2 * n + 1 - 2 * k), U1())
        # H*_{SO(2n+1)}(Gr_2k(R^{2n+1})): doubled-degree invariants of S_k x S_{n-k}
        sub = tuple(range(2, 2 * k + 1, 2)) + tuple(range(2, 2 * (n - k) + 1, 2))
        return _Setup(
            g, h, _odd(weyl.invariant_degrees(g)), _odd(weyl.invariant_degrees(h)),
            weyl.invariant_degrees(SO(2 * n + 1)), sub,
            f"SO{2 * n + 1}-equivariant Gr_{2 * k}(R^{2 * n + 1})", "conjectural",
            theta_coinvariant(grassmannian_presentation(2 * n + 1, 2 * k)),
        )
    (n,) = p
    g, h = SO(4 * n), Product(SO(2), SO(4 * n - 2))
    cg, ch = SO(4 * n - 1), SO(4 * n - 2)
    # the involution negates the Pfaffian of SO(4n) and, on H, the SO(2) generator
    return _Setup(
        g, h, weyl.pfaffian_degrees(g), weyl.pfaffian_degrees(SO(2)),
        weyl.invariant_degrees(cg), weyl.invariant_degrees(ch),
        f"SO{4 * n - 1}/SO{4 * n - 2}", "expected",
    )


def _invariant_parts(setup: _Setup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g_plus = _minus(weyl.invariant_degrees(setup.ambient), setup.anti_ambient)
    h_plus = _minus(weyl.invariant_degrees(setup.subgroup), setup.anti_subgroup)
    return g_plus, h_plus


def ambient_pair(case: DiagramCase) -> weyl.HomogeneousPair:
    s = _setup(case)
    return weyl.HomogeneousPair(s.ambient, s.subgroup)


def compact_side_series(case: DiagramCase) -> HilbertSeries:
    """H*_{G'}(G'/H') = H*_{H'} as a graded vector space."""
    return HilbertSeries.free(_setup(case).compact_subgroup)


def compact_base_series(case: DiagramCase) -> HilbertSeries:
    return HilbertSeries.free(_setup(case).compact_ambient)


def coinvariant_side_series(case: DiagramCase) -> HilbertSeries:
    """Coinvariant algebra of H*_G(G/H): kill the anti-invariant generators of H*_H."""
    return HilbertSeries.free(_invariant_parts(_setup(case))[1])


def coinvariant_base_series(case: DiagramCase) -> HilbertSeries:
    return HilbertSeries.free(_invariant_parts(_setup(case))[0])


def twisted_signature(case: DiagramCase) -> int:
    """Trace of the involution on H*(G/H) (Lefschetz number)."""
    s = _setup(case)
    def signed(degrees, anti):
        anti_left = Counter(anti)
        out = []
        for d in degrees:
            if anti_left[d] > 0:
                anti_left[d] -= 1
                out.append((d, -1))
            else:
                out.append((d, 1))
        return out

    poly = weyl.product_quotient(
        signed(weyl.invariant_degrees(s.ambient), s.anti_ambient),
        signed(weyl.invariant_degrees(s.subgroup), s.anti_subgroup),
    )
    return poly(1)


def verify_diagram(case: DiagramCase, oracle_degree: int = 10, cap: int | None = None) -> dict:
    s = _setup(case)
    coinv = coinvariant_side_series(case)
    compact = compact_side_series(case)
    rank = (coinv / coinvariant_base_series(case)).rank()
    compact_euler = (compact / compact_base_series(case)).rank()
    pair = weyl.HomogeneousPair(s.ambient, s.subgroup)
    sig = twisted_signature(case)

    checks = {
        "series_equal": coinv == compact,
        "base_equal": coinvariant_base_series(case) == compact_base_series(case),
        "rank_equals_compact_euler": rank == compact_euler,
        "signature_equals_rank": sig == rank,
    }
    if s.anti_ambient == _odd(weyl.invariant_degrees(s.ambient)) and s.anti_subgroup == _odd(
        weyl.invariant_degrees(s.subgroup)
    ):
        checks["signature_matches_weyl"] = sig == weyl.signature(pair)
    oracle_to = 0
    if s.presentation is not None and oracle_degree > 0:
        checks["presentation_series"] = hilbert_series_ci(s.presentation) == coinv
        dims = graded_dims_oracle(s.presentation, oracle_degree, cap)
        checks["oracle_dims"] = dims == coinv.coefficients(oracle_degree)
        oracle_to = oracle_degree
    return {
        "case": case.case,
        "params": list(case.params),
        "status": s.status,
        "ambient": str(pair),
        "compact": s.compact_label,
        "coinvariant_series": coinv.to_json(),
        "compact_series": compact.to_json(),
        "equal": checks["series_equal"],
        "rank": rank,
        "signature": sig,
        "ambient_euler": weyl.euler_characteristic(pair),
        "oracle_checked_to_degree": oracle_to,
        "checks": checks,
        "ok": all(checks.values()),
    }


def default_cases() -> list[DiagramCase]:
    cases = [DiagramCase("quaternionic", (n, k)) for n in range(2, 5) for k in range(1, n)]
    cases += [DiagramCase("sphere", (n,)) for n in range(1, 4)]
    cases.append(DiagramCase("cayley"))
    cases += [DiagramCase("real_grassmannian", (n, k)) for n in range(1, 5) for k in range(1, n + 1)]
    cases += [DiagramCase("so4n", (n,)) for n in range(1, 4)]
    return cases
