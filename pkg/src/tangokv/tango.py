"""The Tango invariant n(C), base divisors and curve classification."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .curves import CurveModel
from .divisors import CurveDivisor, divisor_of_differential, p_floor
from .errors import FrobeniusKernel, PrecisionExhausted, SupportLeak
from .functions import RationalFunction
from .polys import BiPoly

DEFAULT_BUDGET = 500


def n_of(curve: CurveModel, f: RationalFunction) -> int:
    """deg of the p-floor of (df); FrobeniusKernel when df = 0."""
    D = p_floor(divisor_of_differential(curve, f), curve.p)
    return int(D.degree)


def n_upper_bound(curve: CurveModel) -> int:
    return (2 * (curve.genus - 1)) // curve.p


@dataclass(frozen=True)
class Classification:
    is_tango: bool
    is_integral_type: bool
    is_raynaud_tango: bool
    basis: str  # "exact" or "lower_bound"


@dataclass
class TangoReport:
    curve_id: str
    p: int
    genus: int
    n_lower: int | None
    n_upper: int
    witness: RationalFunction | None = None
    differential_divisor: CurveDivisor | None = None
    base_divisor: CurveDivisor | None = None
    is_tango: bool = False
    is_integral_type: bool = False
    is_raynaud_tango: bool = False
    classification_basis: str = "lower_bound"
    candidates_tried: int = 0
    skipped_frobenius: int = 0
    uncertified: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.n_lower is not None and self.n_lower == self.n_upper

    def to_json(self) -> dict:
        return {
            "curve": self.curve_id,
            "p": self.p,
            "genus": self.genus,
            "n_lower": self.n_lower,
            "n_upper": self.n_upper,
            "exact": self.exact,
            "witness": None if self.witness is None else self.witness.format(),
            "differential_divisor": None if self.differential_divisor is None else self.differential_divisor.to_json(),
            "base_divisor": None if self.base_divisor is None else self.base_divisor.to_json(),
            "is_tango": self.is_tango,
            "is_integral_type": self.is_integral_type,
            "is_raynaud_tango": self.is_raynaud_tango,
            "classification_basis": self.classification_basis,
            "candidates_tried": self.candidates_tried,
            "skipped_frobenius": self.skipped_frobenius,
            "uncertified": list(self.uncertified),
        }


def is_divisible(L: CurveDivisor, p: int) -> bool:
    """Half of L integral for odd p, a third of L integral for p = 2."""
    k = 3 if p == 2 else 2
    return (L / k).is_integral()


def classify(report: TangoReport) -> Classification:
    """Flags from the best witness found.

    A positive lower bound certifies a Tango curve; negative answers are only
    certified when the bounds meet, which the basis field records.
    """
    basis = "exact" if report.exact else "lower_bound"
    tango = report.n_lower is not None and report.n_lower > 0
    L, dfo = report.base_divisor, report.differential_divisor
    integral = tango and L is not None and is_divisible(L, report.p)
    rt = (L is not None and dfo is not None and L.degree > 0
          and dfo == report.p * L)
    return Classification(tango, integral, rt, basis)


# -- candidate enumeration --


def _monomials(curve: CurveModel) -> Iterator[tuple[int, int]]:
    """(i, j) with j < deg_y of the model, by increasing pole weight at infinity."""
    wx, wy = curve.pole_weights
    dy = max(1, curve.equation.deg_y)
    for w in itertools.count(1):
        for j in range(dy):
            r = w - j * wy
            if r >= 0 and r % wx == 0:
                yield r // wx, j


def candidate_functions(curve: CurveModel, budget: int = DEFAULT_BUDGET) -> Iterator[RationalFunction]:
    """Witness, then monomials, then two-term combinations m1 + b*m2."""
    p = curve.p
    count = 0
    if curve.witness is not None:
        yield curve.witness
        count += 1
    pool_size = max(4, budget // 4)
    pool = [BiPoly.monomial(p, i, j) for i, j in itertools.islice(_monomials(curve), pool_size)]
    for m in pool:
        if count >= budget:
            return
        yield RationalFunction.poly(m)
        count += 1
    for hi in range(1, len(pool)):
        for lo in range(hi):
            for b in range(1, p):
                if count >= budget:
                    return
                yield RationalFunction.poly(pool[hi] + pool[lo] * b)
                count += 1


def tango_search(curve: CurveModel, budget: int = DEFAULT_BUDGET) -> TangoReport:
    """Certified interval for n(C) from a bounded candidate search.

    Candidates whose divisor cannot be certified (support over fields of
    degree above the enumeration bound) are listed in ``uncertified``.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    upper = n_upper_bound(curve)
    rep = TangoReport(curve.curve_id, curve.p, curve.genus, None, upper)
    best_div = None
    for f in candidate_functions(curve, budget):
        rep.candidates_tried += 1
        try:
            D = divisor_of_differential(curve, f)
        except FrobeniusKernel:
            rep.skipped_frobenius += 1
            continue
        except (SupportLeak, PrecisionExhausted):
            rep.uncertified.append(f.format())
            continue
        n = int(p_floor(D, curve.p).degree)
        if rep.n_lower is None or n > rep.n_lower:
            rep.n_lower, rep.witness, best_div = n, f, D
        if rep.n_lower == upper:
            break
    if best_div is not None:
        rep.differential_divisor = best_div
        rep.base_divisor = p_floor(best_div, curve.p)
    cls = classify(rep)
    rep.is_tango, rep.is_integral_type, rep.is_raynaud_tango = cls.is_tango, cls.is_integral_type, cls.is_raynaud_tango
    rep.classification_basis = cls.basis
    return rep


@dataclass(frozen=True)
class Lemma25Result:
    found: bool
    witness: RationalFunction | None
    divisor: CurveDivisor | None
    reason: str
    candidates_tried: int

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "witness": None if self.witness is None else self.witness.format(),
            "divisor": None if self.divisor is None else self.divisor.to_json(),
            "reason": self.reason,
            "candidates_tried": self.candidates_tried,
        }


def lemma_2_5_test(curve: CurveModel, L: CurveDivisor, budget: int = DEFAULT_BUDGET) -> Lemma25Result:
    """Search for f with (df) >= pL.  NotFound is not a proof of emptiness."""
    if L.curve_id != curve.curve_id:
        raise ValueError("divisor lives on a different curve")
    if not L.is_integral():
        raise ValueError("L must be integral")
    p = curve.p
    if p * L.degree > 2 * curve.genus - 2:
        return Lemma25Result(False, None, None,
                             f"degree obstruction: deg(pL) = {p * L.degree} > 2g-2 = {2 * curve.genus - 2}", 0)
    target = p * L
    tried = 0
    for f in candidate_functions(curve, budget):
        tried += 1
        try:
            D = divisor_of_differential(curve, f)
        except (FrobeniusKernel, SupportLeak, PrecisionExhausted):
            continue
        if D >= target:
            return Lemma25Result(True, f, D, "witness found", tried)
    return Lemma25Result(False, None, None,
                         f"no candidate among {tried} satisfies (df) >= pL; not a proof of emptiness", tried)


__all__ = [
    "Classification", "DEFAULT_BUDGET", "Lemma25Result", "TangoReport", "candidate_functions",
    "classify", "is_divisible", "lemma_2_5_test", "n_of", "n_upper_bound", "tango_search",
]
