"""Exact cohomology on split P^1-bundles P(O + L) over the supported curves.

Everything reduces to line bundles m*z_inf on the base curve, whose h^0 is
the number of Weierstrass non-gaps <= m at z_inf.  Base divisors (L, K_C and
the f*-parts of surface classes) are modelled as multiples of z_inf.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from .lattice import SurfaceClass, SurfaceLattice, ample_test


@dataclass(frozen=True)
class SemigroupData:
    curve_id: str
    generators: tuple[int, ...]
    genus: int

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] < 1:
            raise ValueError("semigroup generators must be positive")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise ValueError(f"generators {gens} do not generate a numerical semigroup")
        object.__setattr__(self, "generators", gens)
        if len(self.gaps) != self.genus:
            raise ValueError(f"{self.curve_id}: semigroup {gens} has {len(self.gaps)} gaps, genus is {self.genus}")

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        gens = self.generators
        bound = gens[0] * gens[-1] + 1
        reach = [False] * (bound + 1)
        reach[0] = True
        for n in range(1, bound + 1):
            reach[n] = any(n >= a and reach[n - a] for a in gens)
        return tuple(n for n in range(bound + 1) if not reach[n])

    def count_upto(self, m: int) -> int:
        """Number of semigroup elements in [0, m]."""
        if m < 0:
            return 0
        return m + 1 - sum(1 for x in self.gaps if x <= m)

    @classmethod
    def from_curve(cls, curve) -> "SemigroupData":
        if curve.semigroup_generators is None:
            raise ValueError(f"no Weierstrass semigroup known for {curve.curve_id}")
        return cls(curve.curve_id, curve.semigroup_generators, curve.genus)


def _semigroup(obj) -> SemigroupData:
    return obj if isinstance(obj, SemigroupData) else SemigroupData.from_curve(obj)


def h0_one_point(curve, m: int) -> int:
    """h^0(C, m*z_inf); ``curve`` is a CurveModel or SemigroupData."""
    S = _semigroup(curve)
    h = S.count_upto(m)
    if m > 2 * S.genus - 2:
        assert h == m - S.genus + 1, "Riemann-Roch violated in the non-special range"
    return h


def h1_curve(curve, m: int) -> int:
    """h^1(C, m*z_inf) = h^0((2g-2-m)*z_inf), using K_C ~ (2g-2)*z_inf."""
    S = _semigroup(curve)
    h1 = h0_one_point(S, 2 * S.genus - 2 - m)
    assert h0_one_point(S, m) - h1 == m - S.genus + 1, "Riemann-Roch violated"
    return h1


def _check(lattice: SurfaceLattice, S: SemigroupData):
    if not lattice.decomposable:
        raise ValueError("the oracle only models decomposable bundles")
    if lattice.genus != S.genus:
        raise ValueError(f"lattice genus {lattice.genus} != curve genus {S.genus}")


def split_h0_surface(lattice: SurfaceLattice, a: int, m: int, curve) -> int:
    """h^0(X, aE + mF) = sum of h^0(C, (i*d + m) z_inf) over the split symmetric power."""
    S = _semigroup(curve)
    _check(lattice, S)
    if a < 0:
        return 0
    return sum(h0_one_point(S, i * lattice.d + m) for i in range(a + 1))


def split_h1_surface(lattice: SurfaceLattice, a: int, m: int, curve) -> int:
    """h^1(X, aE + mF) on X = P(O + L), deg L = d.

    For a >= -1 the higher direct image vanishes and h^1 is that of the
    pushforward, the sum of L^i(m) for a >= 0 and zero for a = -1.  For
    a <= -2 Serre duality on X swaps D with K_X - D.
    """
    S = _semigroup(curve)
    _check(lattice, S)
    if a >= 0:
        return sum(h1_curve(S, i * lattice.d + m) for i in range(a + 1))
    if a == -1:
        return 0
    K = lattice.canonical_class()
    return split_h1_surface(lattice, int(K.x) - a, int(K.y) - m, S)


def split_h2_surface(lattice: SurfaceLattice, a: int, m: int, curve) -> int:
    K = lattice.canonical_class()
    return split_h0_surface(lattice, int(K.x) - a, int(K.y) - m, curve)


def _coords(D: SurfaceClass) -> tuple[int, int]:
    if not D.is_integral():
        raise ValueError(f"class {D} is not integral")
    return int(D.x), int(D.y)


def split_h1_class(lattice: SurfaceLattice, D: SurfaceClass, curve) -> int:
    a, m = _coords(D)
    return split_h1_surface(lattice, a, m, curve)


def euler_characteristic(lattice: SurfaceLattice, D: SurfaceClass) -> Fraction:
    """Riemann-Roch on X: chi(D) = 1 - g + D.(D - K_X)/2."""
    K = lattice.canonical_class()
    return 1 - lattice.genus + lattice.intersect(D, D - K) / 2


def split_symmetric_quotient_degrees(n: int, degL: int) -> list[int]:
    """Degrees of the line-bundle summands L^i, i = 0..n, of S^n(O + L)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [i * degL for i in range(n + 1)]


@dataclass
class GridReport:
    lattice: dict
    checked: int = 0
    ample_points: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"lattice": self.lattice, "checked": self.checked, "ample_points": self.ample_points,
                "violations": self.violations, "passed": self.passed}


def kodaira_grid_check(lattice: SurfaceLattice, curve, bound: int = 6) -> GridReport:
    """h^1(X, -H) = 0 for every integral ample H = (x, y) with |x|, |y| <= bound."""
    S = _semigroup(curve)
    _check(lattice, S)
    rep = GridReport(lattice.to_json())
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            rep.checked += 1
            H = SurfaceClass(x, y)
            if not ample_test(H, lattice).is_ample:
                continue
            rep.ample_points += 1
            h1 = split_h1_surface(lattice, -x, -y, S)
            if h1 != 0:
                rep.violations.append({"H": str(H), "h1": h1})
    return rep
