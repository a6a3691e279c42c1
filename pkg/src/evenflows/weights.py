"""Type A weight and root combinatorics for GL(n).

Weights are integer vectors in the fundamental-weight basis
omega_1, ..., omega_n; the omega_n coefficient (the determinant) is free.
Positive roots are intervals of simple roots; the even order only admits
intervals of even length (roots of even height).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import DomainError

WeightVector = tuple[int, ...]
LiftedVector = tuple[int, ...]
SimpleRootVector = tuple[int, ...]


class RootIndex(NamedTuple):
    """Positive root alpha_{k,p}: height k, starting at simple root p."""

    k: int
    p: int

    def check(self, n: int) -> None:
        if not (1 <= self.k <= n - 1 and 1 <= self.p <= n - self.k):
            raise DomainError(f"no positive root ({self.k},{self.p}) in rank {n}")


@dataclass(frozen=True)
class DominantWeight:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) < 2:
            raise DomainError("rank must be at least 2")
        if any(c < 0 for c in coords[:-1]):
            raise DomainError(f"weight {coords} is not dominant")

    @classmethod
    def of(cls, *coords: int) -> "DominantWeight":
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        """1-based coordinate lambda_i."""
        return self.coords[i - 1]

    def __sub__(self, other: "DominantWeight") -> WeightVector:
        _same_rank(self, other)
        return tuple(a - b for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def fundamental_weight(k: int, n: int) -> DominantWeight:
    if not 1 <= k <= n:
        raise DomainError(f"omega_{k} does not exist in rank {n}")
    return DominantWeight(tuple(int(i == k) for i in range(1, n + 1)))


def _same_rank(a: DominantWeight, b: DominantWeight) -> None:
    if a.n != b.n:
        raise DomainError(f"rank mismatch: {a.n} vs {b.n}")


def _interval_vector(idx: RootIndex, n: int) -> list[int]:
    # positions 0..n; position 0 is the auxiliary omega_0
    x = [0] * (n + 1)
    k, p = idx
    x[p - 1] -= 1
    x[p] += 1
    x[p + k - 1] += 1
    x[p + k] -= 1
    return x


def root_weight_coords(idx: RootIndex, n: int) -> WeightVector:
    idx = RootIndex(*idx)
    idx.check(n)
    return tuple(_interval_vector(idx, n)[1:])


def lifted_root_coords(idx: RootIndex, n: int) -> LiftedVector:
    idx = RootIndex(*idx)
    idx.check(n)
    return tuple(_interval_vector(idx, n))


def positive_roots(n: int) -> list[RootIndex]:
    return [RootIndex(k, p) for k in range(1, n) for p in range(1, n - k + 1)]


def even_positive_roots(n: int) -> list[RootIndex]:
    return [r for r in positive_roots(n) if r.k % 2 == 0]


def from_simple_root_coords(m: Sequence[int]) -> WeightVector:
    """omega-coordinates of sum m_i alpha_i (Cartan relations)."""
    n = len(m) + 1
    ext = [0, *m, 0]
    x = [2 * ext[i] - ext[i - 1] - ext[i + 1] for i in range(1, n)]
    x.append(-ext[n - 1])
    return tuple(x)


def to_simple_root_coords(x: Sequence[int]) -> SimpleRootVector | None:
    """Inverse of from_simple_root_coords; None when x is off the root lattice."""
    n = len(x)
    if n < 2:
        raise DomainError("rank must be at least 2")
    m = [0] * (n + 1)  # m[0] = m[n] = 0 sentinels
    m[n - 1] = -x[n - 1]
    for i in range(n - 1, 1, -1):
        m[i - 1] = 2 * m[i] - m[i + 1] - x[i - 1]
    if x[0] != 2 * m[1] - m[2]:
        return None
    return tuple(m[1:n])


def _cone_step(states: frozenset, cur: int) -> frozenset:
    """Advance the interval DP to a position covered by cur intervals.

    A state (odd, even) counts the intervals open at the previous position
    by the parity of their length so far; only even ones may close there.
    """
    out = set()
    for odd, even in states:
        for close in range(even + 1):
            opened = cur - odd - (even - close)
            if opened >= 0:
                # continuing intervals grow by one, swapping parity
                out.add((even - close + opened, odd))
    return frozenset(out)


def _cone_closed(states: frozenset) -> bool:
    return any(odd == 0 for odd, _ in states)


def in_even_root_cone(m: Sequence[int]) -> bool:
    """Is m (simple-root coordinates) a nonnegative sum of even-height roots?"""
    if any(v < 0 for v in m):
        return False
    states = frozenset({(0, 0)})
    for v in m:
        states = _cone_step(states, v)
        if not states:
            return False
    return _cone_closed(states)


def in_root_cone(m: Sequence[int]) -> bool:
    return all(v >= 0 for v in m)


def even_leq(mu: DominantWeight, lam: DominantWeight) -> bool:
    """mu <=_2 lam, i.e. lam - mu is a nonnegative sum of even positive roots."""
    m = to_simple_root_coords(lam - mu)
    return m is not None and in_even_root_cone(m)


def leq(mu: DominantWeight, lam: DominantWeight) -> bool:
    """The usual dominance order (all root heights allowed)."""
    m = to_simple_root_coords(lam - mu)
    return m is not None and in_root_cone(m)


def _check_dominant(lam) -> DominantWeight:
    if not isinstance(lam, DominantWeight):
        lam = DominantWeight(tuple(lam))
    return lam


def is_even_minuscule(lam: DominantWeight | Sequence[int]) -> bool:
    lam = _check_dominant(lam)
    return even_descent_witness(lam) is None


def is_minuscule(lam: DominantWeight | Sequence[int]) -> bool:
    lam = _check_dominant(lam)
    return sum(lam.coords[:-1]) <= 1


def even_descent_witness(lam: DominantWeight) -> list[RootIndex] | None:
    """Even roots whose sum lowers lam to a dominant weight, or None if minimal.

    Two mechanisms exist: nonzero coordinates at positions of different
    parity (one root of even height spanning them), or mass at least 2 in
    positions 2..n-2 (two overlapping roots of equal even height).
    """
    lam = _check_dominant(lam)
    n = lam.n
    support = [i for i in range(1, n) if lam[i] > 0]
    for a, i in enumerate(support):
        for j in support[a + 1:]:
            if (j - i) % 2:
                return [RootIndex(j - i + 1, i)]
    middle = [i for i in range(2, n - 1) for _ in range(min(lam[i], 2))]
    if len(middle) >= 2:
        i, j = middle[0], middle[1]
        h = j - i + 2
        return [RootIndex(h, i - 1), RootIndex(h, i)]
    return None


def apply_roots(lam: DominantWeight, roots: Sequence[RootIndex]) -> WeightVector:
    """lam minus the sum of the given roots, in omega-coordinates."""
    x = list(lam.coords)
    for r in roots:
        for i, v in enumerate(root_weight_coords(r, lam.n)):
            x[i] -= v
    return tuple(x)


def default_oracle_bound(lam: DominantWeight) -> int:
    return lam.n * sum(lam.coords[:-1]) + 2


@lru_cache(maxsize=None)
def _inverse_cartan_caps(lam_head: tuple[int, ...]) -> tuple[int, ...]:
    # Dominance of lam - x forces x_j <= lam_j for j < n; the inverse Cartan
    # matrix of A_{n-1} has positive entries min(i,j)(n-max(i,j))/n.
    n = len(lam_head) + 1
    caps = []
    for i in range(1, n):
        total = sum(min(i, j) * (n - max(i, j)) * lam_head[j - 1] for j in range(1, n))
        caps.append(total // n)
    return tuple(caps)


def is_even_minuscule_oracle(lam: DominantWeight | Sequence[int], bound: int | None = None) -> bool:
    """Exhaustive minimality check over simple-root vectors m in {0..bound}^(n-1).

    Independent of the closed-form criterion: lam is declared non-minimal iff
    some nonzero m in the even root cone leaves lam - x(m) dominant.  The
    search is a depth-first sweep with pruning that only discards branches
    which cannot satisfy those two conditions.
    """
    return even_minuscule_oracle_witness(lam, bound) is None


def even_minuscule_oracle_witness(lam, bound: int | None = None) -> SimpleRootVector | None:
    lam = _check_dominant(lam)
    if bound is None:
        bound = default_oracle_bound(lam)
    if bound < 1:
        raise DomainError("oracle bound must be at least 1")
    n = lam.n
    head = lam.coords[:-1]
    caps = [min(bound, c) for c in _inverse_cartan_caps(head)]
    r = n - 1
    m = [0] * (r + 2)  # 1-based with zero sentinels at 0 and r+1

    def fits(i: int) -> bool:
        # dominance of lam - x at position i, once m[i-1], m[i], m[i+1] are fixed
        return 2 * m[i] - m[i - 1] - m[i + 1] <= head[i - 1]

    def search(i: int, states: frozenset) -> bool:
        if i > r:
            return _cone_closed(states) and fits(r) and any(m[1:r + 1])
        for v in range(caps[i - 1] + 1):
            m[i] = v
            if i >= 2 and not fits(i - 1):
                continue
            nxt = _cone_step(states, v)
            if nxt and search(i + 1, nxt):
                return True
        m[i] = 0
        return False

    if search(1, frozenset({(0, 0)})):
        return tuple(m[1:r + 1])
    return None


def check_lifted_lemma(xt: Sequence[int]) -> list[str]:
    """Return the lifted-lattice properties violated by a nonzero xt (empty if none)."""
    n = len(xt) - 1
    bad = []
    if xt[0] > 0 or xt[n] > 0:
        bad.append("end coordinates positive")
    if sum(xt) != 0 or sum(xt[0::2]) != 0 or sum(xt[1::2]) != 0:
        bad.append("nonzero total or parity sums")
    if sum(xt[2:n - 1]) < 0:
        bad.append("negative middle sum")
    nonzero = [v for v in xt if v]
    if not nonzero or nonzero[0] >= 0 or nonzero[-1] >= 0:
        bad.append("first or last nonzero coordinate not negative")
    return bad
