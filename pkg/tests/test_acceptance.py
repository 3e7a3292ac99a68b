"""Acceptance criteria 1-10; criterion 11 lives in test_properties.py.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion at the end of the run.
"""
import math
import random
from fractions import Fraction
from functools import lru_cache

import pytest

import oracles as O
from tangokv import (CurveDivisor, DivisibilityFailure, InputNotInScope, SurfaceClass, SurfaceLattice,
                     construct_3_1, cor_3_4_check, divisor_of_differential, kv_classifier, n_of,
                     preset_dagger, smoothness_check, split_h1_surface, thm_3_5_plan)
from tangokv.oracle import SemigroupData
from tangokv.pathology import BoundaryComponent, PairData
from tangokv.suites import curve, report, run_suite

C1 = pytest.mark.criterion(1, "hyperelliptic family: (d(y/x^p)) = (ph-3) z_inf and n(C) = h-1 exact")
C2 = pytest.mark.criterion(2, "superelliptic family: (dy) = p(h(p-1)-2) z_inf, n exact, RT and integral flags")
C3 = pytest.mark.criterion(3, "plane curve p = 3: n(x0/x1) = 1 and smooth")
C4 = pytest.mark.criterion(4, "baselines: n = -1 on the line and n = 0 on elliptic models, exact")
C5 = pytest.mark.criterion(5, "vanishing-failure certificates for presets and random c sweeps")
C6 = pytest.mark.criterion(6, "split-oracle nonvanishing goldens")
C7 = pytest.mark.criterion(7, "contraction identities p(K+aC') = p(p-1)E, p(D+bC') = p^2 E")
C8 = pytest.mark.criterion(8, "cover plan divisibility gate and kM = E + C'")
C9 = pytest.mark.criterion(9, "classifier/oracle agreement grid")
C10 = pytest.mark.criterion(10, "Kodaira grid: zero violations")

HYPER = [(3, 3), (3, 5), (5, 3)]
SUPER = [(2, 3), (2, 5), (3, 3)]


# -- criterion 1 --


@C1
@pytest.mark.parametrize("p,h", HYPER)
def test_hyperelliptic_differential_divisor(p, h):
    C = curve("hyperelliptic_odd", p, h)
    assert C.genus == O.genus("hyperelliptic_odd", p, h)
    D = divisor_of_differential(C, C.witness)
    assert D == CurveDivisor.point(C.curve_id, C.z_inf, O.hyperelliptic_df_coeff(p, h))
    assert D.degree == 2 * C.genus - 2


@C1
@pytest.mark.parametrize("p,h", HYPER)
def test_hyperelliptic_tango_exact(p, h):
    r = report("hyperelliptic_odd", p, h)
    assert r.exact and r.n_lower == O.hyperelliptic_n(p, h) > 0
    assert r.is_tango and r.classification_basis == "exact"


# -- criterion 2 --


@C2
@pytest.mark.parametrize("p,h", SUPER)
def test_superelliptic_differential_divisor(p, h):
    C = curve("superelliptic", p, h)
    assert C.genus == O.genus("superelliptic", p, h)
    D = divisor_of_differential(C, C.witness)
    assert D == CurveDivisor.point(C.curve_id, C.z_inf, O.superelliptic_df_coeff(p, h))


@C2
@pytest.mark.parametrize("p,h", SUPER)
def test_superelliptic_flags(p, h):
    r = report("superelliptic", p, h)
    n = O.superelliptic_n(p, h)
    assert r.exact and r.n_lower == n
    assert r.is_raynaud_tango
    assert 2 * r.genus - 2 == p * r.base_divisor.degree
    divisible = n % (3 if p == 2 else 2) == 0
    assert r.is_integral_type == divisible


@C2
def test_superelliptic_integral_examples():
    assert report("superelliptic", 2, 5).is_integral_type
    assert not report("superelliptic", 2, 3).is_integral_type


# -- criterion 3 --


@C3
def test_plane_curve():
    C = curve("plane_projective", 3)
    assert C.genus == O.genus("plane_projective", 3)
    smooth, witness = smoothness_check(C)
    assert smooth and witness is None
    assert n_of(C, C.witness) == O.plane_n(3) == 1
    r = report("plane_projective", 3)
    assert r.exact and r.n_lower == 1 and not r.is_integral_type


# -- criterion 4 --


@C4
@pytest.mark.parametrize("family,expected", [("rational_line", -1), ("elliptic_weierstrass", 0)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_baselines(family, expected, p):
    r = report(family, p)
    g = O.genus(family, p)
    assert r.genus == g
    assert r.n_upper == math.floor(2 * (g - 1) / p) == expected
    assert r.exact and r.n_lower == expected and not r.is_tango


# -- criterion 5 --

# exact-Tango curves carrying a preset for each p
PRESET_CURVES = {
    2: [("superelliptic", 2, 3), ("superelliptic", 2, 5)],
    3: [("hyperelliptic_odd", 3, 3), ("hyperelliptic_odd", 3, 5), ("superelliptic", 3, 3)],
    5: [("hyperelliptic_odd", 5, 3)],
}


def _check_certificate(fam, p, h, c):
    r = report(fam, p, h)
    cert = construct_3_1(r, c, curve(fam, p, h))
    assert cert.valid, [ch.to_json() for ch in cert.failed()]
    d = r.base_divisor.degree
    cp = c * p
    fl = math.floor(cp)
    assert cert.classes["H"] == SurfaceClass(fl + 1 - cp, (cp - fl) * d)
    H = (cert.classes["H"].x, cert.classes["H"].y)
    # independent ample check: cone-criterion against F and the negative curve C' = (p, -p d)
    assert O.intersect(H, (0, 1), d) > 0 and O.intersect(H, (p, -p * d), d) > 0 and O.intersect(H, H, d) > 0
    names = {ch.name for ch in cert.checks}
    assert {"H-identity", "ample (cone-criterion)", "klt", "h1-lower-bound"} <= names
    assert cert.h1_lower_bound == 1
    if cert.oracle_h1 is not None:
        assert cert.oracle_h1 >= 1
    return cert


@C5
@pytest.mark.parametrize("fam,p,h", [x for v in PRESET_CURVES.values() for x in v])
def test_preset_certificates(fam, p, h):
    c, q = preset_dagger(p)
    assert (c, q) == O.PRESETS[p]
    cert = _check_certificate(fam, p, h, c)
    assert cert.q == q


def _random_c(rng, p):
    while True:
        den = rng.randint(2, 60)
        num = rng.randint(1, den - 1)
        c = Fraction(num, den)
        if Fraction(1, p) < c < 1 and (c * p).denominator != 1:
            return c


@C5
@pytest.mark.parametrize("p", [2, 3, 5])
def test_random_c_sweep(p):
    rng = random.Random(1000 + p)
    fam, _, h = PRESET_CURVES[p][0]
    for _ in range(20):
        _check_certificate(fam, p, h, _random_c(rng, p))


# -- criterion 6 --


@C6
def test_split_oracle_dagger2():
    (g, d, gens, a, m), want = O.SPLIT_H1_GOLDEN["dagger2"]
    C = curve("superelliptic", 2, 3)
    cert = construct_3_1(report("superelliptic", 2, 3), Fraction(2, 3), C)
    assert (C.genus, cert.deg_L, cert.q, cert.classes["D"]) == (g, d, a, SurfaceClass(a, m))
    S = SemigroupData.from_curve(C)
    assert tuple(S.generators) == gens
    assert split_h1_surface(SurfaceLattice(g, d, decomposable=True), a, m, S) == want
    assert O.split_h1(g, d, gens, a, m) == want
    assert cert.oracle_h1 == want


@C6
def test_split_oracle_dagger3_shape():
    (g, d, gens, a, m), want = O.SPLIT_H1_GOLDEN["dagger3_shaped"]
    C = curve("superelliptic", 3, 3)
    cert = construct_3_1(report("superelliptic", 3, 3), Fraction(5, 6), C)
    assert (C.genus, cert.deg_L, cert.q, cert.classes["D"]) == (g, d, a, SurfaceClass(a, m))
    S = SemigroupData.from_curve(C)
    assert tuple(S.generators) == gens
    assert split_h1_surface(SurfaceLattice(g, d, decomposable=True), a, m, S) == want
    assert O.split_h1(g, d, gens, a, m) == want


# -- criterion 7 --


@C7
@pytest.mark.parametrize("p", [3, 5, 7])
def test_contraction_identities(p):
    rec = cor_3_4_check(p)
    assert rec.passed
    d, g = rec.data["deg_L"], rec.data["g"]
    assert 2 * g - 2 == p * d
    a, b, q = Fraction(rec.data["a"]), Fraction(rec.data["b"]), rec.data["q"]
    # K from adjunction: K.F = -2, K.E + E^2 = 2g - 2 with E^2 = d
    K = (Fraction(-2), Fraction(2 * g - 2 + d))
    Cp = (p, -p * d)
    Dq = (q, 2 * g - 2 - q * d)
    assert O.intersect(K, (0, 1), d) == -2 and O.intersect(K, (1, 0), d) + d == 2 * g - 2
    assert tuple(p * (K[i] + a * Cp[i]) for i in range(2)) == (p * (p - 1), 0)
    assert tuple(p * (Dq[i] + b * Cp[i]) for i in range(2)) == (p * p, 0)


# -- criterion 8 --


_CORPUS = [("hyperelliptic_odd", p, h) for p, h in HYPER] + [("superelliptic", p, h) for p, h in SUPER] + [
    ("plane_projective", 3, None)]


@C8
@pytest.mark.parametrize("fam,p,h", _CORPUS)
def test_cover_plan_gate(fam, p, h):
    r = report(fam, p, h)
    k = 3 if p == 2 else 2
    divisible = all(c % k == 0 for _, c in r.base_divisor.items())
    if not divisible:
        with pytest.raises(DivisibilityFailure):
            thm_3_5_plan(r)
        return
    plan = thm_3_5_plan(r)
    assert plan.passed and plan.cover_degree == k
    d = r.base_divisor.degree
    assert k * plan.M == SurfaceClass(1, 0) + SurfaceClass(p, -p * d)
    assert plan.N.degree * k == d


@C8
def test_cover_plan_gate_sides():
    # both outcomes appear in the corpus
    outcomes = set()
    for fam, p, h in _CORPUS:
        try:
            thm_3_5_plan(report(fam, p, h))
            outcomes.add("plan")
        except DivisibilityFailure:
            outcomes.add("refused")
    assert outcomes == {"plan", "refused"}


# -- criterion 9 --


@lru_cache(maxsize=None)
def _brute_h1(g, d, a, m):
    return O.split_h1(g, d, {0: (1,), 1: (2, 3), 2: (2, 5)}[g], a, m)


@C9
@pytest.mark.parametrize("g", [0, 1, 2])
def test_classifier_agrees_with_oracle(g):
    checked = vanishing = 0
    bad = []
    for d in range(-3, 4):
        lat = SurfaceLattice(g, d, decomposable=True)
        sec = lat.nonpositive_section()
        for c in (Fraction(0), Fraction(1, 2), Fraction(2, 3)):
            pair = PairData(lat, () if c == 0 else (BoundaryComponent("S", sec, c),))
            for a in range(0, 6):
                for m in range(-10, 11):
                    try:
                        v = kv_classifier(lat, pair, SurfaceClass(a, m))
                    except InputNotInScope:
                        continue
                    checked += 1
                    if v.vanishing:
                        vanishing += 1
                        if _brute_h1(g, d, a, m) != 0:
                            bad.append((d, c, a, m, v.reason))
    assert checked > 0 and vanishing > 0
    assert bad == []


@C9
def test_classifier_grid_suite():
    res = run_suite("classifier-grid")
    assert res["passed"] and res["cases"][0]["disagreements"] == []


# -- criterion 10 --


@C10
def test_kodaira_grid_suite():
    res = run_suite("kodaira-grid")
    assert res["passed"]
    assert all(case["violations"] == [] or case["violations"] == 0 for case in res["cases"])
    assert sum(1 for case in res["cases"]) == 14
