"""Numerical classes on a P^1-bundle over a curve.

Classes are written xE + yF where F is a fiber and E a section class with
E^2 = d.  Everything is exact rational arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


def _frac(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("use exact rationals, not floats")
    return Fraction(v)


@dataclass(frozen=True)
class SurfaceClass:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    @classmethod
    def E(cls) -> "SurfaceClass":
        return cls(1, 0)

    @classmethod
    def F(cls) -> "SurfaceClass":
        return cls(0, 1)

    def __add__(self, o: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.x - o.x, self.y - o.y)

    def __neg__(self) -> "SurfaceClass":
        return SurfaceClass(-self.x, -self.y)

    def __mul__(self, k) -> "SurfaceClass":
        k = _frac(k)
        return SurfaceClass(self.x * k, self.y * k)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self):
        return f"({self.x}, {self.y})"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, s: str) -> "SurfaceClass":
        a, b = s.strip().strip("()").split(",")
        return cls(Fraction(a.strip()), Fraction(b.strip()))


@dataclass(frozen=True)
class SurfaceLattice:
    """Rank-2 lattice of a P^1-bundle: E.E = d, E.F = 1, F.F = 0.

    ``negative_curve`` is the class of the unique curve of negative
    self-intersection when the caller knows it.  ``decomposable`` marks the
    split bundle O + L with deg L = d; for d > 0 its negative section
    E - dF is registered automatically.
    """

    genus: int
    d: int
    negative_curve: SurfaceClass | None = None
    decomposable: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.decomposable and self.d > 0 and self.negative_curve is None:
            object.__setattr__(self, "negative_curve", SurfaceClass(1, -self.d))
        if self.negative_curve is not None and self.intersect(self.negative_curve, self.negative_curve) >= 0:
            raise ValueError(f"registered curve {self.negative_curve} has nonnegative self-intersection")

    @property
    def e(self) -> int:
        return -self.d

    def intersect(self, c1: SurfaceClass, c2: SurfaceClass) -> Fraction:
        return c1.x * c2.x * self.d + c1.x * c2.y + c2.x * c1.y

    def canonical_class(self) -> SurfaceClass:
        return SurfaceClass(-2, 2 * self.genus - 2 + self.d)

    def with_negative_curve(self, C: SurfaceClass) -> "SurfaceLattice":
        return SurfaceLattice(self.genus, self.d, C, self.decomposable)

    def curve_classes(self) -> dict[str, SurfaceClass]:
        """Classes of curves known to be irreducible: fibers and the negative curve."""
        out = {"F": SurfaceClass.F()}
        if self.negative_curve is not None:
            out["C'"] = self.negative_curve
        return out

    def nonpositive_section(self) -> SurfaceClass | None:
        """A section class S (S.F = 1) with S^2 <= 0, if the data exhibits one."""
        if self.d <= 0:
            return SurfaceClass.E()
        C = self.negative_curve
        if C is not None and C.x == 1:
            return C
        return None

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "d": self.d,
            "negative_curve": None if self.negative_curve is None else str(self.negative_curve),
            "decomposable": self.decomposable,
        }


def intersect(c1: SurfaceClass, c2: SurfaceClass, lattice: SurfaceLattice) -> Fraction:
    return lattice.intersect(c1, c2)


def canonical_class(lattice: SurfaceLattice) -> SurfaceClass:
    return lattice.canonical_class()


class Ampleness(str, enum.Enum):
    AMPLE = "Ample"
    NOT_AMPLE = "NotAmple"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AmpleVerdict:
    verdict: Ampleness
    reason: str

    @property
    def is_ample(self) -> bool:
        return self.verdict is Ampleness.AMPLE

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason}


def ample_test(H: SurfaceClass, lattice: SurfaceLattice) -> AmpleVerdict:
    """Three-valued ampleness test.

    Fibers are curves and H^2 > 0 is necessary, so their failure is a
    definite NotAmple.  With a registered negative curve the effective cone
    is spanned by F and that curve (cone-criterion).  For a decomposable
    bundle with d <= 0, E is a normalized section and the ruled-surface
    criterion x > 0, y > x*e applies.  Anything else is Unknown.
    """
    hf = lattice.intersect(H, SurfaceClass.F())
    hh = lattice.intersect(H, H)
    if hf <= 0:
        return AmpleVerdict(Ampleness.NOT_AMPLE, f"H.F = {hf} <= 0")
    if hh <= 0:
        return AmpleVerdict(Ampleness.NOT_AMPLE, f"H^2 = {hh} <= 0")
    C = lattice.negative_curve
    if C is not None:
        hc = lattice.intersect(H, C)
        if hc > 0:
            return AmpleVerdict(Ampleness.AMPLE,
                                f"cone-criterion: H.F = {hf}, H.C' = {hc}, H^2 = {hh} all positive")
        return AmpleVerdict(Ampleness.NOT_AMPLE, f"cone-criterion: H.C' = {hc} <= 0")
    if lattice.decomposable and lattice.d <= 0:
        e = lattice.e
        if H.x > 0 and H.y > H.x * e:
            return AmpleVerdict(Ampleness.AMPLE, f"normalized section: x = {H.x} > 0, y = {H.y} > x*e = {H.x * e}")
        return AmpleVerdict(Ampleness.NOT_AMPLE, f"normalized section: need x > 0 and y > x*e = {H.x * e}")
    return AmpleVerdict(Ampleness.UNKNOWN, "no negative curve registered and bundle not known to be decomposable")
