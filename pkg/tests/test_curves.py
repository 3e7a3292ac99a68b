"""Curve models, places, divisors and the Tango search."""
import json
from fractions import Fraction

import pytest

import oracles as O
from tangokv import (CurveDivisor, FrobeniusKernel, ParamViolation, RationalFunction, SmoothnessFailure,
                     SupportLeak, classify, divisor_of_differential, divisor_of_function, lemma_2_5_test,
                     make_curve, n_of, p_floor, round_down, smoothness_check, tango_search)
from tangokv.divisors import canonical_degree, valuation_at
from tangokv.series import eval_bipoly
from tangokv.suites import curve, report
from tangokv.tango import candidate_functions, is_divisible, n_upper_bound

CATALOGUE = [("hyperelliptic_odd", 3, 3), ("hyperelliptic_odd", 5, 3), ("superelliptic", 2, 3),
             ("superelliptic", 3, 3), ("plane_projective", 3, None), ("rational_line", 3, None),
             ("elliptic_weierstrass", 2, None), ("elliptic_weierstrass", 5, None)]


@pytest.mark.parametrize("fam,p,h", CATALOGUE)
def test_catalogue_genus_and_smoothness(fam, p, h):
    C = curve(fam, p, h)
    assert C.genus == O.genus(fam, p, h)
    ok, wit = smoothness_check(C)
    assert ok and wit is None
    assert canonical_degree(C) == 2 * C.genus - 2


@pytest.mark.parametrize("fam,p,h", CATALOGUE)
def test_semigroup_gap_count_is_genus(fam, p, h):
    C = curve(fam, p, h)
    assert len(O.gaps(C.semigroup_generators)) == C.genus


@pytest.mark.parametrize("fam,p,params", [
    ("hyperelliptic_odd", 2, {"h": 3}), ("hyperelliptic_odd", 3, {"h": 4}), ("hyperelliptic_odd", 3, {}),
    ("superelliptic", 3, {"h": 2}), ("plane_projective", 2, {}), ("rational_line", 4, {}),
])
def test_parameter_violations(fam, p, params):
    with pytest.raises(ParamViolation):
        make_curve(fam, p, params)


def test_unknown_family():
    with pytest.raises(ValueError):
        make_curve("quartic_surface", 3)


def test_singular_models_are_refused():
    with pytest.raises(SmoothnessFailure):
        make_curve("elliptic_weierstrass", 5, {"a4": 0})  # y^2 = x^3, a cusp
    with pytest.raises(SmoothnessFailure):
        make_curve("plane_projective", 5, {"phi": {(0, 2, 1): 1, (3, 0, 0): -1}})


@pytest.mark.parametrize("fam,p,h", CATALOGUE[:5])
def test_local_parametrizations_lie_on_the_curve(fam, p, h):
    C = curve(fam, p, h)
    D = divisor_of_differential(C, C.witness) if C.witness is not None else None
    places = list(D.support) if D is not None and D.support else []
    places += [pl for pl in divisor_of_function(C, RationalFunction.x(p)).support][:4]
    for pl in places:
        X, Y = C.local_parametrization(pl, 24)
        if pl.chart in ("affine", "inf"):
            assert eval_bipoly(C.equation, X, Y).is_zero()


def test_function_divisors():
    C = curve("hyperelliptic_odd", 3, 3)
    x, y = RationalFunction.x(3), RationalFunction.y(3) - 1
    Dx, Dy = divisor_of_function(C, x), divisor_of_function(C, y)
    assert Dx.degree == Dy.degree == 0
    assert Dx.coefficient(C.z_inf) == -2 and Dy.coefficient(C.z_inf) == -9
    assert divisor_of_function(C, x * y) == Dx + Dy
    assert divisor_of_function(C, x / y) == Dx - Dy
    assert valuation_at(C, y, C.z_inf) == -9
    # y - 1 vanishes to order 4 at (0, 1), where x is a uniformizer
    assert max(Dy.coefficient(pl) for pl in Dy.support) == 4


def test_differential_of_pth_power_is_refused():
    C = curve("hyperelliptic_odd", 3, 3)
    with pytest.raises(FrobeniusKernel):
        divisor_of_differential(C, RationalFunction.x(3) ** 3)


def test_support_beyond_enumeration_bound_is_refused():
    # dx and y vanish at the branch points, which live over F_{3^9}
    C = curve("hyperelliptic_odd", 3, 3)
    with pytest.raises(SupportLeak):
        divisor_of_differential(C, RationalFunction.x(3))
    with pytest.raises(SupportLeak):
        divisor_of_function(C, RationalFunction.y(3))


def test_differential_divisor_of_line():
    C = curve("rational_line", 5)
    D = divisor_of_differential(C, RationalFunction.x(5))
    assert D.degree == -2 and len(D.support) == 1


# -- divisor algebra --


def test_divisor_arithmetic_and_text():
    C = curve("hyperelliptic_odd", 3, 3)
    z = C.z_inf
    D = CurveDivisor.point(C.curve_id, z, Fraction(7, 2))
    assert round_down(D) == CurveDivisor.point(C.curve_id, z, 3)
    assert p_floor(CurveDivisor.point(C.curve_id, z, 6), 3).degree == 2
    assert (D - D) == CurveDivisor(C.curve_id) and (D - D).text() == "0"
    assert D.text() == "7/2*z_inf"
    assert not D.is_integral() and D.is_effective() and not (-D).is_effective()
    assert (2 * D).is_integral()
    json.dumps(D.to_json())
    with pytest.raises(ValueError):
        D + CurveDivisor.point("other", z, 1)


# -- Tango search --


def test_candidate_order_starts_with_witness():
    C = curve("superelliptic", 2, 3)
    cands = list(candidate_functions(C, 20))
    # witness, a pool of 5 monomials, then the 10 two-term sums (p = 2 has one scalar)
    assert len(cands) == 16 and cands[0] is C.witness
    assert len(list(candidate_functions(C, 7))) == 7


def test_search_interval_and_json():
    r = report("hyperelliptic_odd", 3, 3)
    assert r.n_upper == n_upper_bound(curve("hyperelliptic_odd", 3, 3)) == (2 * (r.genus - 1)) // 3
    data = json.loads(json.dumps(r.to_json()))
    assert data["exact"] and data["n_lower"] == 2 and data["base_divisor"]["degree"] == "2"
    assert classify(r).basis == "exact"
    assert n_of(curve("hyperelliptic_odd", 3, 3), r.witness) == r.n_lower


def test_search_without_witness_stays_honest():
    C = make_curve("elliptic_weierstrass", 7)
    r = tango_search(C, budget=8)
    assert r.n_upper == 0
    assert r.n_lower is None or r.n_lower <= r.n_upper
    assert not r.is_tango
    if not r.exact:
        assert r.classification_basis == "lower_bound"


def test_search_budget_validation():
    with pytest.raises(ValueError):
        tango_search(curve("rational_line", 3), budget=0)


def test_divisibility_rule():
    C = curve("superelliptic", 2, 5)
    z = C.z_inf
    assert is_divisible(CurveDivisor.point(C.curve_id, z, 3), 2)
    assert not is_divisible(CurveDivisor.point(C.curve_id, z, 2), 2)
    assert is_divisible(CurveDivisor.point(C.curve_id, z, 2), 3)
    assert not is_divisible(CurveDivisor.point(C.curve_id, z, 3), 5)


def test_pL_differential_search():
    C = curve("superelliptic", 2, 3)
    z = C.z_inf
    found = lemma_2_5_test(C, CurveDivisor.point(C.curve_id, z, 1), budget=20)
    assert found.found and found.divisor >= CurveDivisor.point(C.curve_id, z, 2)
    too_big = lemma_2_5_test(C, CurveDivisor.point(C.curve_id, z, 2), budget=20)
    assert not too_big.found and "degree obstruction" in too_big.reason
    with pytest.raises(ValueError):
        lemma_2_5_test(C, CurveDivisor.point(C.curve_id, z, Fraction(1, 2)))
