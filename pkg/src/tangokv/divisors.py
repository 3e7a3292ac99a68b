"""Divisors with rational coefficients; divisors of functions and differentials."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .curves import CurveModel, Place
from .errors import FrobeniusKernel, PrecisionExhausted, SupportLeak
from .functions import RationalFunction
from .series import LaurentSeries, eval_bipoly

MAX_PRECISION_RETRIES = 3


class CurveDivisor:
    """Finite formal sum of places with exact rational coefficients."""

    __slots__ = ("curve_id", "_coeffs")

    def __init__(self, curve_id: str, coeffs: Mapping[Place, Fraction | int] | None = None):
        self.curve_id = curve_id
        self._coeffs = {pl: Fraction(c) for pl, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def point(cls, curve_id: str, place: Place, coeff=1) -> "CurveDivisor":
        return cls(curve_id, {place: coeff})

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, place: Place) -> Fraction:
        return self._coeffs.get(place, Fraction(0))

    @property
    def support(self) -> list[Place]:
        return sorted(self._coeffs)

    @property
    def degree(self) -> Fraction:
        return sum((c * pl.degree for pl, c in self._coeffs.items()), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def _check(self, other: "CurveDivisor"):
        if self.curve_id != other.curve_id:
            raise ValueError(f"divisors on different curves: {self.curve_id} vs {other.curve_id}")

    def __add__(self, other: "CurveDivisor") -> "CurveDivisor":
        self._check(other)
        out = dict(self._coeffs)
        for pl, c in other._coeffs.items():
            out[pl] = out.get(pl, 0) + c
        return CurveDivisor(self.curve_id, out)

    def __neg__(self) -> "CurveDivisor":
        return CurveDivisor(self.curve_id, {pl: -c for pl, c in self._coeffs.items()})

    def __sub__(self, other: "CurveDivisor") -> "CurveDivisor":
        return self + (-other)

    def __mul__(self, k) -> "CurveDivisor":
        k = Fraction(k)
        return CurveDivisor(self.curve_id, {pl: c * k for pl, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, k) -> "CurveDivisor":
        return self * (1 / Fraction(k))

    def __ge__(self, other: "CurveDivisor") -> bool:
        return (self - other).is_effective()

    def __le__(self, other: "CurveDivisor") -> bool:
        return (other - self).is_effective()

    def __eq__(self, other):
        return isinstance(other, CurveDivisor) and self.curve_id == other.curve_id and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.curve_id, tuple(self.items())))

    def text(self) -> str:
        """Canonical form ``c1*P1 + c2*P2 - c3*P3``; ``0`` for the zero divisor."""
        if not self._coeffs:
            return "0"
        out = ""
        for i, (pl, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = str(abs(c))
            term = f"{mag}*{pl.label}"
            out += (("-" + term) if sign == "-" else term) if i == 0 else f" {sign} {term}"
        return out

    def __repr__(self):
        return f"CurveDivisor({self.text()})"

    def to_json(self) -> dict:
        return {
            "curve": self.curve_id,
            "text": self.text(),
            "degree": str(self.degree),
            "terms": [{"place": pl.label, "chart": pl.chart, "coords": list(pl.coords),
                       "residue_degree": pl.degree, "coeff": str(c)} for pl, c in self.items()],
        }


def round_down(D: CurveDivisor) -> CurveDivisor:
    return CurveDivisor(D.curve_id, {pl: math.floor(c) for pl, c in D.items()})


def p_floor(D: CurveDivisor, p: int) -> CurveDivisor:
    if p < 2:
        raise ValueError("p must be >= 2")
    return round_down(D / p)


# ---------------------------------------------------------------------------


def _weighted_degree(curve: CurveModel, f: RationalFunction) -> int:
    wx, wy = curve.pole_weights
    return max((i * wx + j * wy for P in (f.num, f.den) for (i, j) in P.terms), default=0)


def _series(curve: CurveModel, f: RationalFunction, place: Place, prec: int) -> LaurentSeries:
    x, y = curve.local_parametrization(place, prec)
    return eval_bipoly(f.num, x, y) / eval_bipoly(f.den, x, y)


def valuation_at(curve: CurveModel, f: RationalFunction, place: Place, differential: bool = False) -> int:
    """v(f) or v(df) at a place, raising precision on demand (bounded retries)."""
    prec = 4 * _weighted_degree(curve, f) + 16
    for _ in range(MAX_PRECISION_RETRIES + 1):
        try:
            s = _series(curve, f, place, prec)
            if differential:
                s = s.derivative()
            return s.valuation()
        except PrecisionExhausted:
            prec *= 2
    raise PrecisionExhausted(f"valuation at {place.label} not resolved at precision {prec // 2}")


def _check_function(curve: CurveModel, f: RationalFunction):
    if f.p != curve.p:
        raise ValueError("function and curve have different characteristic")
    G = curve.equation
    if f.den.reduce_y(G).is_zero():
        raise ZeroDivisionError(f"denominator of {f} vanishes on the curve")
    if f.num.reduce_y(G).is_zero():
        raise ValueError(f"{f} is zero on the curve")


def divisor_of_function(curve: CurveModel, f: RationalFunction) -> CurveDivisor:
    """Zeros minus poles; the degree-0 identity is asserted."""
    _check_function(curve, f)
    candidates = curve.affine_places_on([f.num, f.den]) + curve.infinity_places()
    coeffs = {pl: valuation_at(curve, f, pl) for pl in candidates}
    D = CurveDivisor(curve.curve_id, coeffs)
    if D.degree != 0:
        raise SupportLeak(f"div({f}) on {curve.curve_id} has degree {D.degree} != 0: {D.text()}")
    return D


def divisor_of_differential(curve: CurveModel, f: RationalFunction) -> CurveDivisor:
    """(df) with the identity deg (df) = 2g - 2 asserted before returning."""
    _check_function(curve, f)
    G = curve.equation
    N = f.differential_numerator(G)
    if N.reduce_y(G).is_zero():
        raise FrobeniusKernel(f"d({f}) = 0 on {curve.curve_id}: the function is a p-th power")
    candidates = curve.affine_places_on([N, f.den]) + curve.infinity_places()
    coeffs = {pl: valuation_at(curve, f, pl, differential=True) for pl in candidates}
    D = CurveDivisor(curve.curve_id, coeffs)
    if D.degree != 2 * curve.genus - 2:
        raise SupportLeak(
            f"deg (d({f})) = {D.degree} != 2g-2 = {2 * curve.genus - 2} on {curve.curve_id}: {D.text()}")
    return D


def canonical_degree(curve: CurveModel) -> int:
    return 2 * curve.genus - 2
