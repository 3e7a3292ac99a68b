"""Rational functions A(x, y) / B(x, y) on a curve, coefficients in F_p."""
from __future__ import annotations

from dataclasses import dataclass

from .polys import BiPoly


@dataclass(frozen=True, eq=False)
class RationalFunction:
    num: BiPoly
    den: BiPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        if self.num.p != self.den.p:
            raise ValueError("characteristic mismatch")

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def x(cls, p: int) -> "RationalFunction":
        return cls(BiPoly.x(p), BiPoly.const(p, 1))

    @classmethod
    def y(cls, p: int) -> "RationalFunction":
        return cls(BiPoly.y(p), BiPoly.const(p, 1))

    @classmethod
    def const(cls, p: int, c: int) -> "RationalFunction":
        return cls(BiPoly.const(p, c), BiPoly.const(p, 1))

    @classmethod
    def poly(cls, P: BiPoly) -> "RationalFunction":
        return cls(P, BiPoly.const(P.p, 1))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, BiPoly):
            return RationalFunction.poly(other)
        if isinstance(other, int):
            return RationalFunction.const(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num ** e, self.den ** e)

    def differential_numerator(self, G: BiPoly) -> BiPoly:
        """N with df = N / (B^2 G_y) dx on the affine curve G = 0.

        Since dx / G_y is regular and nowhere zero on a smooth affine chart,
        the finite zeros and poles of df lie on N = 0 or B = 0.
        """
        A, B = self.num, self.den
        Gx, Gy = G.diff_x(), G.diff_y()
        return (A.diff_x() * B - A * B.diff_x()) * Gy - (A.diff_y() * B - A * B.diff_y()) * Gx

    def format(self) -> str:
        def wrap(s, P):
            return f"({s})" if len(P.terms) > 1 else s

        n = wrap(self.num.format(), self.num)
        if self.den.terms == {(0, 0): 1}:
            return self.num.format()
        return f"{n}/{wrap(self.den.format(), self.den)}"

    def __repr__(self):
        return f"RationalFunction({self.format()} mod {self.p})"

    def __str__(self):
        return self.format()
