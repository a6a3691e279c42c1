import random

import pytest
from hypothesis import given, settings, strategies as st

from evenflows.cohomology import (
    DiagramCase,
    HilbertSeries,
    MultiPoly,
    coinvariant_side_series,
    compact_side_series,
    graded_dims_oracle,
    grassmannian_presentation,
    hilbert_series_ci,
    theta_coinvariant,
    verify_diagram,
)
from evenflows.cohomology.diagrams import coinvariant_base_series, twisted_signature
from evenflows.cohomology.poly import count_monomials, monomials_of_degree
from evenflows.cohomology.presentation import CAP_ENV, free_presentation, monomial_cap
from evenflows.errors import DomainError, ResourceCapError


def xy():
    names, degs = ("x", "y"), (1, 2)
    return MultiPoly.variable(names, degs, "x"), MultiPoly.variable(names, degs, "y")


def test_poly_arithmetic():
    x, y = xy()
    p = (x * x - y) * (x * x + y)
    assert p == x * x * x * x - y * y
    assert p.homogeneous_degree() == 4
    assert (x + y).homogeneous_degree() is None
    assert (x - x).is_zero()
    assert repr(x * x - y) == "x^2 - y"
    assert (x * y).kill(["y"]).is_zero()
    assert (x * x + y).kill(["x"]).names == ("y",)


def test_monomial_enumeration():
    assert monomials_of_degree((1, 2), 4) == [(4, 0), (2, 1), (0, 2)]
    assert monomials_of_degree((2,), 3) == []
    for degs in [(1, 1, 2), (1, 2, 3), (2, 2, 4, 6)]:
        for d in range(12):
            assert count_monomials(degs, d) == len(monomials_of_degree(degs, d))


def test_series_cancellation_and_equality():
    s = HilbertSeries((1, 2), (1, 1, 1, 2))
    assert s == HilbertSeries.free((1, 1))
    assert s.denominator_exponents == (1, 1)
    assert HilbertSeries((2,), (1,)) != HilbertSeries((), ())
    assert HilbertSeries((2,), (1,)).as_polynomial().coefficients == (1, 1)
    # (1-q^4)/(1-q^2) = 1+q^2
    assert HilbertSeries((4,), (2,)).coefficients(4) == [1, 0, 1, 0, 0]
    assert hash(s) == hash(HilbertSeries.free((1, 1)))


def test_series_coefficients():
    assert HilbertSeries.free((1, 1)).coefficients(3) == [1, 2, 3, 4]
    assert HilbertSeries.free((2, 4)).coefficients(6) == [1, 0, 1, 0, 2, 0, 2]
    assert HilbertSeries((), ()).coefficients(2) == [1, 0, 0]
    q = HilbertSeries.free((2, 2)) / HilbertSeries.free((2, 4))
    assert q.rank() == 2


def test_grassmannian_presentation_shape():
    pres = grassmannian_presentation(2, 1)
    e1, f1, c1, c2 = (pres.generator(v) for v in ("e1", "f1", "c1", "c2"))
    assert pres.relations == (e1 + f1 - c1, e1 * f1 - c2)
    assert grassmannian_presentation(4, 2).relation_degrees() == (1, 2, 3, 4)
    for n in range(2, 7):
        for k in range(1, n):
            assert len(grassmannian_presentation(n, k).relations) == n
    with pytest.raises(DomainError):
        grassmannian_presentation(3, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_ci_series_is_parabolic_invariants(n):
    for k in range(1, n):
        expected = HilbertSeries.free(tuple(range(1, k + 1)) + tuple(range(1, n - k + 1)))
        assert hilbert_series_ci(grassmannian_presentation(n, k)) == expected


def test_oracle_small():
    assert graded_dims_oracle(grassmannian_presentation(2, 1), 3) == [1, 2, 3, 4]
    assert graded_dims_oracle(free_presentation((1,)), 4) == [1, 1, 1, 1, 1]
    assert graded_dims_oracle(free_presentation(()), 2) == [1, 0, 0]


def test_theta_coinvariant_4_2():
    t = theta_coinvariant(grassmannian_presentation(4, 2))
    assert t.names == ("e2", "f2", "c2", "c4")
    e2, f2, c2, c4 = (t.generator(v) for v in t.names)
    assert set(t.relations) == {e2 + f2 - c2, e2 * f2 - c4}
    # the quotient is C[e2, f2]: one class in degree 2j for each of j+1 monomials
    assert graded_dims_oracle(t, 6) == [1, 0, 2, 0, 3, 0, 4]
    assert hilbert_series_ci(t) == HilbertSeries.free((2, 2))


def test_theta_coinvariant_2_1():
    t = theta_coinvariant(grassmannian_presentation(2, 1))
    assert t.names == ("c2",)
    assert t.relations == (-t.generator("c2"),)
    assert graded_dims_oracle(t, 4) == [1, 0, 0, 0, 0]


def test_theta_is_identity_without_odd_generators():
    pres = free_presentation((2, 4))
    assert theta_coinvariant(pres) is pres


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 5) for k in range(1, n)])
def test_theta_commutes_with_series_rule(n, k):
    # killing odd generators in the presentation = removing odd degrees from the series
    t = theta_coinvariant(grassmannian_presentation(n, k))
    even = lambda r: tuple(d for d in range(1, r + 1) if d % 2 == 0)  # noqa: E731
    assert hilbert_series_ci(t) == HilbertSeries.free(even(k) + even(n - k))
    assert graded_dims_oracle(t, 8) == hilbert_series_ci(t).coefficients(8)


def test_inhomogeneous_relation_rejected():
    x, y = xy()
    from evenflows.cohomology import GradedPresentation

    with pytest.raises(DomainError):
        GradedPresentation(("x", "y"), (1, 2), [x + y])


def test_resource_cap(monkeypatch):
    pres = grassmannian_presentation(4, 2)
    with pytest.raises(ResourceCapError):
        graded_dims_oracle(pres, 10, cap=50)
    monkeypatch.setenv(CAP_ENV, "7")
    assert monomial_cap() == 7
    with pytest.raises(ResourceCapError):
        graded_dims_oracle(pres, 10)
    monkeypatch.setenv(CAP_ENV, "many")
    with pytest.raises(DomainError):
        monomial_cap()


def test_compact_examples():
    assert compact_side_series(DiagramCase("quaternionic", (2, 1))) == HilbertSeries.free((2, 2))
    assert compact_side_series(DiagramCase("cayley")) == HilbertSeries.free((2, 4, 6, 8))
    # H*_{SO5}(S^4) = (1+q^2)/((1-q^2)(1-q^4))
    assert compact_side_series(DiagramCase("sphere", (1,))) == HilbertSeries((4,), (2, 2, 4))


def test_coinvariant_examples():
    so4 = DiagramCase("so4n", (1,))
    # D2 degrees (2, 2) lose the Pfaffian and leave the B1 degree (2)
    assert coinvariant_base_series(so4) == HilbertSeries.free((2,))
    assert coinvariant_side_series(so4) == HilbertSeries.free((1,))
    case = DiagramCase("cayley")
    assert coinvariant_side_series(case) == compact_side_series(case)


def test_verify_examples():
    r = verify_diagram(DiagramCase("quaternionic", (2, 1)))
    assert r["equal"] and r["rank"] == 2 and r["signature"] == 2
    assert r["oracle_checked_to_degree"] == 10
    r = verify_diagram(DiagramCase("sphere", (1,)))
    assert r["equal"] and r["rank"] == 2
    r = verify_diagram(DiagramCase("cayley"))
    assert r["equal"] and r["ambient_euler"] == 27 and r["rank"] == 3
    assert list(r)[:8] == [
        "case", "params", "status", "ambient", "compact", "coinvariant_series", "compact_series", "equal",
    ]


def test_so4n_kills_pfaffians():
    r = verify_diagram(DiagramCase("so4n", (1,)))
    assert r["coinvariant_series"] == {"num": [], "den": [1]}
    assert r["status"] == "expected"
    assert twisted_signature(DiagramCase("so4n", (2,))) == 2


@pytest.mark.parametrize("bad", [
    ("quaternionic", (2, 2)), ("quaternionic", (2,)), ("sphere", (0,)),
    ("cayley", (1,)), ("real_grassmannian", (2, 3)), ("torus", ()),
])
def test_bad_cases(bad):
    with pytest.raises(DomainError):
        DiagramCase(*bad)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=5), st.lists(st.integers(1, 6), max_size=5), st.integers(0, 10**6))
def test_series_algebra(num, den, seed):
    s = HilbertSeries(tuple(num), tuple(den))
    t = HilbertSeries.free(tuple(random.Random(seed).sample(range(1, 7), 2)))
    assert (s * t) / t == s
    assert (s * t).coefficients(12) == _convolve(s.coefficients(12), t.coefficients(12))


def _convolve(a, b):
    return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(len(a))]
