import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_tuple, random_weight_map
from evenflows.errors import DomainError
from evenflows.higgs import (
    Divisor,
    DivisorTuple,
    HeckeStep,
    WeightMap,
    apply_hecke,
    classify,
    classify_via_weights,
    delta_from_mu,
    even_hitchin_multiplicity,
    hecke_path,
    hitchin_multiplicity,
    is_very_stable,
    line_bundle_degrees,
    mu_from_delta,
    replay_hecke,
    very_stable_via_weights,
)
from evenflows.weights import DominantWeight


def test_divisor_arithmetic():
    d = Divisor({"b": 1, "a": 2, "c": 0})
    assert list(d) == ["a", "b"]
    assert d.degree == 3
    assert not d.is_reduced() and d.is_effective()
    assert d + Divisor.point("a", -2) == Divisor.point("b")
    assert Divisor() == Divisor({"x": 0})
    assert not Divisor.point("x", -1).is_effective()


def test_divisor_rejects_bad_input():
    with pytest.raises(DomainError):
        Divisor({"": 1})
    with pytest.raises(DomainError):
        Divisor({"a": 1.5})
    with pytest.raises(DomainError):
        DivisorTuple(Divisor(), (Divisor.point("a", -1),))


def test_tuple_json_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        delta = random_tuple(rng, rng.randint(1, 6))
        assert DivisorTuple.from_json(json.loads(json.dumps(delta.to_json()))) == delta


@pytest.mark.parametrize("bad", [
    {"middle": []},
    {"n": 3, "middle": [{}]},
    {"n": 0},
    {"n": 2, "middle": [[1]]},
    [1, 2],
])
def test_tuple_json_errors(bad):
    with pytest.raises(DomainError):
        DivisorTuple.from_json(bad)


def test_weight_map_json():
    mu = WeightMap(3, {"p": DominantWeight.of(1, 0, -1), "q": (0, 0, 0)})
    assert mu.to_json() == {"n": 3, "mu": {"p": [1, 0, -1]}}
    assert WeightMap.from_json(mu.to_json()) == mu
    with pytest.raises(DomainError):
        WeightMap.from_json({"n": 3, "mu": {"p": [1, 0]}})
    with pytest.raises(DomainError):
        WeightMap.from_json({"n": 3, "mu": {"p": [-1, 0, 0]}})


def test_dictionary_is_bijective():
    rng = random.Random(5)
    for _ in range(200):
        delta = random_tuple(rng, rng.randint(2, 7))
        assert delta_from_mu(mu_from_delta(delta)) == delta
        mu = random_weight_map(rng, rng.randint(2, 7))
        assert mu_from_delta(delta_from_mu(mu)) == mu


def test_example_n4_omega1_plus_omega3():
    delta = DivisorTuple.build(4, d1={"c": 1}, d3={"c": 1})
    assert mu_from_delta(delta)["c"] == DominantWeight.of(1, 0, 1, 0)
    report = classify(delta)
    assert not report.very_stable
    assert report.even_very_stable and report.witnesses == ()


def test_zero_tuple_is_very_stable():
    for n in range(1, 6):
        r = classify(DivisorTuple.zero(n))
        assert r.very_stable and r.even_very_stable


def test_odd_parity_pair_witness():
    r = classify(DivisorTuple.build(4, d1={"c": 1}, d2={"c": 1}))
    assert not r.even_very_stable
    assert [(w.kind, w.point, w.indices) for w in r.witnesses] == [("odd-parity-pair", "c", (1, 2))]


def test_middle_multiple_zero():
    r = classify(DivisorTuple.build(5, d2={"c": 2}))
    assert not r.even_very_stable
    kinds = {w.kind for w in r.witnesses}
    assert kinds == {"middle-multiple-zero", "adjacent-repeat"}
    # the same point at two inner positions of equal parity
    r = classify(DivisorTuple.build(7, d2={"c": 1}, d4={"c": 1}))
    assert [w.kind for w in r.witnesses] == ["middle-multiple-zero"]


def test_end_multiplicities_are_harmless():
    # delta_1 and delta_{n-1} may be non-reduced without breaking even stability
    r = classify(DivisorTuple.build(5, d1={"c": 3}, d4={"d": 2}))
    assert r.even_very_stable and not r.very_stable


def test_very_stable_means_reduced_sum():
    assert is_very_stable(DivisorTuple.build(4, d1={"a": 1}, d2={"b": 1}))
    assert not is_very_stable(DivisorTuple.build(4, d1={"a": 1}, d2={"a": 1}))


def test_rank_two_even_very_stable():
    rng = random.Random(7)
    for _ in range(100):
        assert classify(random_tuple(rng, 2, maxmult=5, density=0.8)).even_very_stable


def test_classifier_equivalence_sample():
    rng = random.Random(11)
    for _ in range(2000):
        delta = random_tuple(rng, rng.randint(2, 9), npoints=rng.randint(1, 4))
        r = classify(delta)
        assert r.even_very_stable == classify_via_weights(delta)
        assert r.very_stable == very_stable_via_weights(delta)
        assert r.very_stable <= r.even_very_stable


def test_report_json_is_stable():
    delta = DivisorTuple.build(6, d1={"b": 1, "a": 1}, d2={"a": 1, "b": 1}, d3={"b": 2})
    a = json.dumps(classify(delta).to_json())
    b = json.dumps(classify(DivisorTuple.from_json(json.loads(json.dumps(delta.to_json())))).to_json())
    assert a == b
    assert list(classify(delta).to_json()) == ["very_stable", "even_very_stable", "witnesses"]


def test_line_bundle_degrees():
    assert line_bundle_degrees(DivisorTuple.zero(3)) == [0, -2, -4]
    assert line_bundle_degrees(DivisorTuple.build(2, d1={"a": 1}), genus=2) == [0, -1]
    assert line_bundle_degrees(DivisorTuple.zero(1), deg_L0=5) == [5]
    d = DivisorTuple.build(3, d1={"a": 2}, d2={"b": 1})
    assert line_bundle_degrees(d, genus=3) == [0, -2, -5]
    assert line_bundle_degrees(d, genus=3, convention="literal") == [0, -4, -6]
    with pytest.raises(DomainError):
        line_bundle_degrees(d, genus=1)


def test_hecke_replay_examples():
    mu = WeightMap(4, {"c": (1, 0, 1, -2), "d": (0, 2, 0, 0)})
    steps = hecke_path(mu)
    assert HeckeStep("c", 4, -1) in steps
    assert replay_hecke(4, steps) == delta_from_mu(mu)


def test_hecke_rejects_bad_steps():
    z = DivisorTuple.zero(3)
    with pytest.raises(DomainError):
        apply_hecke(z, ("a", 4))
    with pytest.raises(DomainError):
        apply_hecke(z, ("a", 1, -1))
    assert apply_hecke(z, ("a", 3)).delta0 == Divisor.point("a")


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10**6))
def test_hecke_replay_property(n, seed):
    mu = random_weight_map(random.Random(seed), n)
    assert replay_hecke(n, hecke_path(mu)) == delta_from_mu(mu)


@pytest.mark.parametrize("n", range(2, 8))
def test_multiplicities(n):
    for k in range(1, n):
        assert hitchin_multiplicity(n, k) == math.comb(n, k)
    if n % 2 == 0:
        for k2 in range(2, n, 2):
            assert even_hitchin_multiplicity(n, k2) == math.comb(n // 2, k2 // 2)


def test_multiplicity_errors():
    assert hitchin_multiplicity(4, 2) == 6
    assert even_hitchin_multiplicity(4, 2) == 2
    with pytest.raises(DomainError):
        hitchin_multiplicity(3, 3)
    with pytest.raises(DomainError):
        even_hitchin_multiplicity(4, 1)
