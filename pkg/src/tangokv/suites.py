"""Named verification suites driven by ``tangokv verify``."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .curves import make_curve, smoothness_check
from .divisors import CurveDivisor, divisor_of_differential
from .errors import DivisibilityFailure, InputNotInScope
from .lattice import SurfaceClass, SurfaceLattice
from .oracle import SemigroupData, kodaira_grid_check, split_h1_surface
from .pathology import (BoundaryComponent, PairData, construct_3_1, cor_3_4_check,
                        kv_classifier, preset_dagger, thm_3_5_plan)
from .tango import is_divisible, n_of, tango_search

SUITES = ("examples24", "cor34", "thm35", "classifier-grid", "kodaira-grid")

EX_I = ((3, 3), (3, 5), (5, 3))
EX_II = ((2, 3), (2, 5), (3, 3))


@lru_cache(maxsize=None)
def curve(family: str, p: int, h: int | None = None):
    return make_curve(family, p, {} if h is None else {"h": h})


@lru_cache(maxsize=None)
def report(family: str, p: int, h: int | None = None, budget: int = 500):
    return tango_search(curve(family, p, h), budget)


def _case(name: str, passed: bool, **detail) -> dict:
    return {"name": name, "passed": bool(passed), **{k: str(v) if not isinstance(v, (int, bool, type(None), list, dict)) else v
                                                       for k, v in detail.items()}}


def _suite(name: str, cases: list[dict]) -> dict:
    return {"suite": name, "cases": cases, "passed": all(c["passed"] for c in cases),
            "n_cases": len(cases), "n_failed": sum(not c["passed"] for c in cases)}


def examples24() -> dict:
    cases = []
    for p, h in EX_I:
        C = curve("hyperelliptic_odd", p, h)
        D = divisor_of_differential(C, C.witness)
        want = CurveDivisor.point(C.curve_id, C.z_inf, p * h - 3)
        r = report("hyperelliptic_odd", p, h)
        cases.append(_case(f"(i) {C.curve_id}", D == want and r.exact and r.n_lower == h - 1,
                           divisor=D.text(), expected=want.text(), n=[r.n_lower, r.n_upper], closed_form=h - 1))
    for p, h in EX_II:
        C = curve("superelliptic", p, h)
        D = divisor_of_differential(C, C.witness)
        n = h * (p - 1) - 2
        want = CurveDivisor.point(C.curve_id, C.z_inf, p * n)
        r = report("superelliptic", p, h)
        divisible = (n % 3 == 0) if p == 2 else (n % 2 == 0)
        ok = (D == want and r.exact and r.n_lower == n and r.is_raynaud_tango
              and r.is_integral_type == divisible)
        cases.append(_case(f"(ii) {C.curve_id}", ok, divisor=D.text(), expected=want.text(),
                           n=[r.n_lower, r.n_upper], closed_form=n, raynaud_tango=r.is_raynaud_tango,
                           integral_type=r.is_integral_type, divisible=divisible))
    C = curve("plane_projective", 3)
    smooth, wit = smoothness_check(C)
    nw = n_of(C, C.witness)
    r = report("plane_projective", 3)
    cases.append(_case(f"(iii) {C.curve_id}", smooth and nw == 1 and r.exact and not r.is_integral_type,
                       smooth=smooth, n_witness=nw, n=[r.n_lower, r.n_upper], closed_form=1))
    for fam, p, want in [("rational_line", 2, -1), ("rational_line", 3, -1), ("rational_line", 5, -1),
                         ("elliptic_weierstrass", 2, 0), ("elliptic_weierstrass", 3, 0),
                         ("elliptic_weierstrass", 5, 0)]:
        r = report(fam, p)
        cases.append(_case(f"baseline {r.curve_id}", r.exact and r.n_lower == want and not r.is_tango,
                           n=[r.n_lower, r.n_upper], expected=want))
    return _suite("examples24", cases)


def cor34() -> dict:
    cases = []
    for p in (3, 5, 7):
        rec = cor_3_4_check(p)
        cases.append(_case(f"p={p}", rec.passed, **{ch.name: ch.computed for ch in rec.checks}))
    return _suite("cor34", cases)


def _tango_corpus():
    out = [("hyperelliptic_odd", p, h) for p, h in EX_I]
    out += [("superelliptic", p, h) for p, h in EX_II]
    out.append(("plane_projective", 3, None))
    return out


def thm35() -> dict:
    cases = []
    for fam, p, h in _tango_corpus():
        r = report(fam, p, h)
        divisible = is_divisible(r.base_divisor, p)
        try:
            plan = thm_3_5_plan(r)
            ok = divisible and plan.passed
            cases.append(_case(r.curve_id, ok, gate="plan", divisible=divisible, N=plan.N.text(), M=str(plan.M)))
        except DivisibilityFailure as exc:
            cases.append(_case(r.curve_id, not divisible, gate="DivisibilityFailure", divisible=divisible,
                               message=str(exc)))
    return _suite("thm35", cases)


GRID_SEMIGROUPS = {0: (1,), 1: (2, 3), 2: (2, 5)}
GRID_C = (Fraction(0), Fraction(1, 2), Fraction(2, 3))


def classifier_grid() -> dict:
    """Every vanishing verdict on split lattices must have oracle h^1 = 0."""
    checked = vanishing = 0
    disagreements = []
    for g in (0, 1, 2):
        S = SemigroupData(f"genus{g}", GRID_SEMIGROUPS[g], g)
        for d in range(-3, 4):
            lat = SurfaceLattice(g, d, decomposable=True)
            sec = lat.nonpositive_section()
            for c in GRID_C:
                pair = PairData(lat, () if c == 0 else (BoundaryComponent("S", sec, c),))
                for a in range(0, 6):
                    for m in range(-10, 11):
                        try:
                            v = kv_classifier(lat, pair, SurfaceClass(a, m))
                        except InputNotInScope:
                            continue
                        checked += 1
                        if not v.vanishing:
                            continue
                        vanishing += 1
                        h1 = split_h1_surface(lat, a, m, S)
                        if h1 != 0:
                            disagreements.append({"g": g, "d": d, "c": str(c), "D": [a, m],
                                                  "reason": v.reason, "h1": h1})
    case = _case("grid", not disagreements, in_scope=checked, vanishing_verdicts=vanishing,
                 disagreements=disagreements)
    return _suite("classifier-grid", [case])


def kodaira_grid() -> dict:
    cases = []
    for g in (0, 2):
        S = SemigroupData(f"genus{g}", GRID_SEMIGROUPS[g], g)
        for d in range(-3, 4):
            rep = kodaira_grid_check(SurfaceLattice(g, d, decomposable=True), S, bound=6)
            cases.append(_case(f"g={g}, d={d}", rep.passed, ample_points=rep.ample_points,
                               violations=rep.violations))
    return _suite("kodaira-grid", cases)


def run_suite(name: str) -> dict:
    fn = {"examples24": examples24, "cor34": cor34, "thm35": thm35,
          "classifier-grid": classifier_grid, "kodaira-grid": kodaira_grid}.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}")
    return fn()


def dagger_certificate(family: str, p: int, h: int | None = None):
    """Certificate for the preset c on a catalogue curve (convenience for the CLI and tests)."""
    c, _ = preset_dagger(p)
    return construct_3_1(report(family, p, h), c, curve(family, p, h))
