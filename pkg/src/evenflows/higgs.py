"""Divisor-level model of type (1,...,1) fixed points of the Higgs moduli space.

A fixed point is a tuple (delta_0; delta_1, ..., delta_{n-1}) of divisors on
an abstract curve: delta_0 fixes the first line bundle, delta_i (i >= 1) is
the zero divisor of the i-th Higgs field component.  Points are opaque
labels; only coincidences and multiplicities matter.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import weyl
from .errors import DomainError, InvariantBreach
from .weights import DominantWeight, is_even_minuscule, is_minuscule


class Divisor(Mapping[str, int]):
    """Finite formal sum of labelled points; zero multiplicities are dropped."""

    __slots__ = ("_support",)

    def __init__(self, support: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = support.items() if isinstance(support, Mapping) else support
        clean: dict[str, int] = {}
        for pt, mult in items:
            if not isinstance(pt, str) or not pt:
                raise DomainError(f"point labels must be nonempty strings, got {pt!r}")
            if isinstance(mult, bool) or not isinstance(mult, int):
                raise DomainError(f"multiplicity at {pt!r} must be an integer")
            clean[pt] = clean.get(pt, 0) + mult
        self._support = {pt: clean[pt] for pt in sorted(clean) if clean[pt]}

    @classmethod
    def point(cls, pt: str, mult: int = 1) -> "Divisor":
        return cls({pt: mult})

    def __getitem__(self, pt: str) -> int:
        return self._support.get(pt, 0)

    def __iter__(self):
        return iter(self._support)

    def __len__(self) -> int:
        return len(self._support)

    def __contains__(self, pt) -> bool:
        return pt in self._support

    def __eq__(self, other) -> bool:
        if isinstance(other, Divisor):
            return self._support == other._support
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._support.items()))

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self._support.items()) + list(other._support.items()))

    def __repr__(self) -> str:
        if not self._support:
            return "0"
        return " + ".join(f"{m}*{pt}" for pt, m in self._support.items())

    @property
    def degree(self) -> int:
        return sum(self._support.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._support.values())

    def is_reduced(self) -> bool:
        return all(m == 1 for m in self._support.values())

    def to_json(self) -> dict[str, int]:
        return dict(self._support)


@dataclass(frozen=True)
class DivisorTuple:
    delta0: Divisor
    middle: tuple[Divisor, ...]

    def __post_init__(self):
        object.__setattr__(self, "middle", tuple(self.middle))
        for i, d in enumerate(self.middle, start=1):
            if not d.is_effective():
                raise DomainError(f"delta_{i} = {d!r} is not effective")

    @classmethod
    def zero(cls, n: int) -> "DivisorTuple":
        if n < 1:
            raise DomainError("rank must be positive")
        return cls(Divisor(), (Divisor(),) * (n - 1))

    @classmethod
    def build(cls, n: int, delta0: Mapping[str, int] | None = None, **middle: Mapping[str, int]) -> "DivisorTuple":
        """Convenience constructor: build(4, d1={"c": 1}, d3={"c": 1})."""
        ds = [Divisor() for _ in range(n - 1)]
        for key, supp in middle.items():
            i = int(key.lstrip("d"))
            if not 1 <= i <= n - 1:
                raise DomainError(f"no delta_{i} in rank {n}")
            ds[i - 1] = Divisor(supp)
        return cls(Divisor(delta0 or {}), tuple(ds))

    @property
    def n(self) -> int:
        return len(self.middle) + 1

    def delta(self, i: int) -> Divisor:
        return self.delta0 if i == 0 else self.middle[i - 1]

    def points(self) -> list[str]:
        pts = set(self.delta0)
        for d in self.middle:
            pts.update(d)
        return sorted(pts)

    def middle_points(self) -> list[str]:
        return sorted({pt for d in self.middle for pt in d})

    def column(self, pt: str) -> list[int]:
        """[delta_1(pt), ..., delta_{n-1}(pt)]."""
        return [d[pt] for d in self.middle]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta0": self.delta0.to_json(),
            "middle": [d.to_json() for d in self.middle],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DivisorTuple":
        try:
            n = data["n"]
            middle = data.get("middle", [])
            delta0 = data.get("delta0", {})
        except (TypeError, KeyError) as exc:
            raise DomainError(f"malformed divisor tuple: {exc}") from None
        if not isinstance(n, int) or n < 1:
            raise DomainError("'n' must be a positive integer")
        if not isinstance(middle, list) or len(middle) != n - 1:
            raise DomainError(f"'middle' must list exactly n-1 = {n - 1} divisors")
        if not isinstance(delta0, Mapping) or not all(isinstance(m, Mapping) for m in middle):
            raise DomainError("divisors must be JSON objects mapping points to multiplicities")
        return cls(Divisor(delta0), tuple(Divisor(m) for m in middle))


@dataclass(frozen=True)
class WeightMap:
    n: int
    assignments: Mapping[str, DominantWeight]

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("weight maps need rank at least 2")
        clean = {}
        for pt in sorted(self.assignments):
            w = self.assignments[pt]
            if not isinstance(w, DominantWeight):
                w = DominantWeight(tuple(w))
            if w.n != self.n:
                raise DomainError(f"weight at {pt!r} has rank {w.n}, expected {self.n}")
            if not w.is_zero():
                clean[pt] = w
        object.__setattr__(self, "assignments", clean)

    def __getitem__(self, pt: str) -> DominantWeight:
        return self.assignments.get(pt) or DominantWeight((0,) * self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightMap):
            return self.n == other.n and dict(self.assignments) == dict(other.assignments)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.assignments.items())))

    def to_json(self) -> dict:
        return {"n": self.n, "mu": {pt: list(w.coords) for pt, w in self.assignments.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "WeightMap":
        try:
            n, mu = data["n"], data["mu"]
        except (TypeError, KeyError) as exc:
            raise DomainError(f"malformed weight map: {exc}") from None
        if not isinstance(n, int) or not isinstance(mu, Mapping):
            raise DomainError("weight map needs integer 'n' and object 'mu'")
        for pt, coords in mu.items():
            if not isinstance(coords, list) or not all(isinstance(c, int) for c in coords):
                raise DomainError(f"weight at {pt!r} must be a list of integers")
        return cls(n, {pt: DominantWeight(tuple(c)) for pt, c in mu.items()})


def mu_from_delta(delta: DivisorTuple) -> WeightMap:
    if delta.n < 2:
        raise DomainError("weight maps need rank at least 2")
    return WeightMap(
        delta.n,
        {pt: DominantWeight((*delta.column(pt), delta.delta0[pt])) for pt in delta.points()},
    )


def delta_from_mu(mu: WeightMap) -> DivisorTuple:
    n = mu.n
    delta0 = Divisor({pt: w[n] for pt, w in mu.assignments.items()})
    middle = tuple(
        Divisor({pt: w[i] for pt, w in mu.assignments.items()}) for i in range(1, n)
    )
    return DivisorTuple(delta0, middle)


def line_bundle_degrees(
    delta: DivisorTuple, deg_L0: int = 0, genus: int = 2, convention: str = "cumulative"
) -> list[int]:
    """Degrees of L_0, ..., L_{n-1} in E = L_0 + ... + L_{n-1}.

    With b_i: L_{i-1} -> L_i K vanishing on delta_i, deg L_i is
    deg L_0 + deg(delta_1 + ... + delta_i) - i(2g - 2) ("cumulative").
    The "literal" convention stops the divisor sum at delta_{i-1}.
    """
    if genus < 2:
        raise DomainError("genus must be at least 2")
    if convention not in ("cumulative", "literal"):
        raise DomainError(f"unknown convention {convention!r}")
    canonical = 2 * genus - 2
    shift = 0 if convention == "cumulative" else 1
    degrees = []
    for i in range(delta.n):
        upto = max(i - shift, 0)
        degrees.append(deg_L0 + sum(delta.middle[j].degree for j in range(upto)) - i * canonical)
    return degrees


def is_very_stable(delta: DivisorTuple) -> bool:
    total = Divisor()
    for d in delta.middle:
        total = total + d
    return total.is_reduced()


class Witness(NamedTuple):
    kind: str
    point: str
    indices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "point": self.point, "indices": list(self.indices)}


@dataclass(frozen=True)
class ClassificationReport:
    very_stable: bool
    even_very_stable: bool
    witnesses: tuple[Witness, ...] = ()

    def to_json(self) -> dict:
        return {
            "very_stable": self.very_stable,
            "even_very_stable": self.even_very_stable,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def even_wobbly_witnesses(delta: DivisorTuple) -> list[Witness]:
    n = delta.n
    found = []
    for pt in delta.middle_points():
        col = delta.column(pt)  # col[i-1] = delta_i(pt)
        zeros = [i for i in range(1, n) if col[i - 1] > 0]
        for a, i in enumerate(zeros):
            for j in zeros[a + 1:]:
                if (j - i) % 2:
                    found.append(Witness("odd-parity-pair", pt, (i, j)))
        inner = [i for i in range(2, n - 1) if col[i - 1] > 0]
        if sum(col[i - 1] for i in inner) >= 2:
            found.append(Witness("middle-multiple-zero", pt, (inner[0], inner[-1])))
        for i in inner:
            if col[i - 1] >= 2:
                found.append(Witness("adjacent-repeat", pt, (i,)))
    found.sort(key=lambda w: (w.point, w.indices, w.kind))
    return found


def classify(delta: DivisorTuple) -> ClassificationReport:
    """Very stable iff delta_1 + ... + delta_{n-1} is reduced; even very stable iff
    no point is a common zero of b_i, b_j with j - i odd and b_{n-2}...b_2 has
    no multiple zero."""
    witnesses = even_wobbly_witnesses(delta)
    return ClassificationReport(is_very_stable(delta), not witnesses, tuple(witnesses))


def classify_via_weights(delta: DivisorTuple) -> bool:
    if delta.n < 2:
        return True
    mu = mu_from_delta(delta)
    return all(is_even_minuscule(w) for w in mu.assignments.values())


def very_stable_via_weights(delta: DivisorTuple) -> bool:
    if delta.n < 2:
        return True
    mu = mu_from_delta(delta)
    return all(is_minuscule(w) for w in mu.assignments.values())


class HeckeStep(NamedTuple):
    """Elementary modification at ``point``: raise delta_index by one there.

    Index n twists delta_0 instead; ``power=-1`` (only for index n) undoes one
    such twist, which is needed for negative omega_n coefficients.
    """

    point: str
    index: int
    power: int = 1


def hecke_path(mu: WeightMap) -> list[HeckeStep]:
    n = mu.n
    steps = []
    for pt, w in mu.assignments.items():
        for k in range(1, n):
            steps += [HeckeStep(pt, k)] * w[k]
        steps += [HeckeStep(pt, n, 1 if w[n] > 0 else -1)] * abs(w[n])
    return steps


def apply_hecke(delta: DivisorTuple, step: HeckeStep | Sequence) -> DivisorTuple:
    step = HeckeStep(*step)
    n = delta.n
    if not 1 <= step.index <= n:
        raise DomainError(f"Hecke index {step.index} outside 1..{n}")
    if step.power not in (1, -1) or (step.power == -1 and step.index != n):
        raise DomainError("only the determinant twist (index n) can be inverted")
    bump = Divisor.point(step.point, step.power)
    if step.index == n:
        return DivisorTuple(delta.delta0 + bump, delta.middle)
    middle = list(delta.middle)
    middle[step.index - 1] = middle[step.index - 1] + bump
    return DivisorTuple(delta.delta0, tuple(middle))


def replay_hecke(n: int, steps: Iterable[HeckeStep]) -> DivisorTuple:
    delta = DivisorTuple.zero(n)
    for step in steps:
        delta = apply_hecke(delta, step)
    return delta


def hitchin_multiplicity(n: int, k: int) -> int:
    """Degree of the Hitchin map on the upward flow of omega_k at one point."""
    if not 0 < k < n:
        raise DomainError(f"need 0 < k < n, got n={n}, k={k}")
    pair = weyl.HomogeneousPair(weyl.GL(n), weyl.Product(weyl.GL(k), weyl.GL(n - k)))
    return weyl.weyl_ratio(pair)


def even_hitchin_multiplicity(n2: int, k2: int) -> int:
    """Degree on the even upward flow of omega_{k2} in rank n2, both even.

    Computed as the signature of Gr_{k2}(C^{n2}) and checked against the
    Euler characteristic of the quaternionic Grassmannian.
    """
    if n2 % 2 or k2 % 2:
        raise DomainError(f"rank and index must be even, got n={n2}, k={k2}")
    if not 0 < k2 < n2:
        raise DomainError(f"need 0 < k < n, got n={n2}, k={k2}")
    pair = weyl.HomogeneousPair(weyl.GL(n2), weyl.Product(weyl.GL(k2), weyl.GL(n2 - k2)))
    value = weyl.signature(pair)
    n, k = n2 // 2, k2 // 2
    if value != math.comb(n, k):
        raise InvariantBreach(f"signature {value} != C({n},{k})")
    return value


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None
