"""Explicit curve models over F_p, their places and local parametrizations.

Supported families::

    hyperelliptic_odd     y^2 = x^(ph) + x^(p+1) + 1               (p >= 3, h >= 3 odd)
    superelliptic         y^(hp-1) = x^p - x                       (h >= 3)
    plane_projective      x0^(p+1) = x1 x2 (x0^(p-1) + x1^(p-1) - x2^(p-1))   (p >= 3)
    rational_line         the projective line, modelled as y = 0
    elliptic_weierstrass  a smooth Weierstrass cubic

The first two are "Kummer-type" models y^n = F(x) with gcd(n, deg F) = 1:
their projective closure has a single place at infinity, parametrized by
x = t^(-n), y = t^(-deg F) * w(t).  Plane curves are smooth in P^2 and every
place, including those on the line at infinity, is a smooth point of one of
the three standard affine charts.

Finite places are closed points: Frobenius orbits of geometric points with
coordinates in F_{p^m}, m <= MAX_EXTENSION_DEGREE.  A place is keyed by the
lexicographically least point of its orbit, which makes divisor equality
syntactic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from .errors import NoConvergence, ParamViolation, SmoothnessFailure
from .fields import GF, MAX_EXTENSION_DEGREE
from .functions import RationalFunction
from .polys import BiPoly, Poly, poly_gcd, resultant_y
from .series import LaurentSeries, series_solve_curve


class Family(str, enum.Enum):
    HYPERELLIPTIC_ODD = "hyperelliptic_odd"
    SUPERELLIPTIC = "superelliptic"
    PLANE_PROJECTIVE = "plane_projective"
    RATIONAL_LINE = "rational_line"
    ELLIPTIC_WEIERSTRASS = "elliptic_weierstrass"


@dataclass(frozen=True, order=True)
class Place:
    """A closed point of the curve.

    ``chart`` is ``"affine"`` for points of the main chart (x, y), ``"inf"``
    for the unique infinity place of a Kummer-type model, and ``"X"``/``"Y"``
    for points on the line at infinity of a plane curve, given in the chart
    where that homogeneous coordinate is 1.
    """

    chart: str
    coords: tuple
    degree: int = 1
    p: int = field(default=2, compare=False)
    branch_index: int = field(default=1, compare=False)

    @property
    def kind(self) -> str:
        return "FiniteRational" if self.chart == "affine" else "Infinity"

    @property
    def field(self):
        return GF(self.p, self.degree)

    @property
    def label(self) -> str:
        if self.chart == "inf":
            return "z_inf"
        F = self.field
        c = [F.format(v) for v in self.coords]
        suffix = f"[deg {self.degree}]" if self.degree > 1 else ""
        if self.chart == "affine":
            return f"P({c[0]},{c[1]}){suffix}"
        if self.chart == "Y":
            return f"P({c[0]}:1:0){suffix}"
        return f"P(1:{c[0]}:0){suffix}"


def _homogeneous_chart(phi: dict, p: int, which: str) -> BiPoly:
    """Dehomogenize Phi(X, Y, Z): 'Z' -> (x, y), 'Y' -> (u, w), 'X' -> (v, w)."""
    terms = {}
    for (a, b, c), coef in phi.items():
        key = {"Z": (a, b), "Y": (a, c), "X": (b, c)}[which]
        terms[key] = terms.get(key, 0) + coef
    return BiPoly(p, terms)


def _orbit_rep(F, pt: tuple) -> tuple:
    orbit = [pt]
    cur = pt
    while True:
        cur = tuple(F.frobenius(v) for v in cur)
        if cur == pt:
            break
        orbit.append(cur)
    return min(orbit)


@dataclass(frozen=True, eq=False)
class CurveModel:
    family: Family
    p: int
    params: tuple = ()
    equation: BiPoly = None
    homogeneous: dict | None = None
    genus: int = 0
    witness: RationalFunction | None = None
    pole_weights: tuple = (1, 1)
    semigroup_generators: tuple | None = None
    kummer: tuple | None = None  # (n, F(x) as Poly) for y^n = F(x)

    @property
    def curve_id(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family.value}(p={self.p}{',' + ps if ps else ''})"

    def __repr__(self):
        return f"CurveModel({self.curve_id}: {self.equation.format()} = 0, g={self.genus})"

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    # -- places --

    @cached_property
    def _infinity(self) -> list[Place]:
        p = self.p
        if self.family is Family.RATIONAL_LINE:
            return [Place("inf", (), 1, p, 1)]
        if self.kummer is not None:
            return [Place("inf", (), 1, p, self.kummer[0])]
        phi = self.homogeneous
        out = set()
        # points (1:0:0) and (x0:1:0) on Z = 0
        if phi.get((sum(next(iter(phi))), 0, 0), 0) % p == 0:
            HX = _homogeneous_chart(phi, p, "X")
            if HX.evaluate(GF(p), 0, 0) == 0:
                out.add(Place("X", (0, 0), 1, p))
        # Phi(x, 1, 0) as a polynomial in x
        dense = [0] * (sum(next(iter(phi))) + 1)
        for (a, b, cz), c in phi.items():
            if cz == 0:
                dense[a] = (dense[a] + c) % p
        phi_x = Poly.from_ints(GF(p), dense)
        if not phi_x.is_zero():
            for m in range(1, MAX_EXTENSION_DEGREE + 1):
                Fm = GF(p, m)
                if phi_x.degree <= 0:
                    break
                for r in phi_x.lift(Fm).roots():
                    if Fm.orbit_size(r) == m:
                        out.add(Place("Y", _orbit_rep(Fm, (r, 0)), m, p))
        return sorted(out)

    def infinity_places(self) -> list[Place]:
        return list(self._infinity)

    @property
    def z_inf(self) -> Place:
        """The distinguished infinity place (unique for Kummer models and the line)."""
        places = self._infinity
        if len(places) != 1:
            raise ValueError(f"{self.curve_id} has {len(places)} places at infinity")
        return places[0]

    def _x_support(self, polys: list[BiPoly], G: BiPoly) -> Poly:
        F = GF(self.p)
        R = Poly.const(F, 1)
        for P in polys:
            if P.is_constant():
                continue
            r = resultant_y(P, G)
            if r.is_zero():
                raise ValueError(f"{P.format()} vanishes on a component of the curve")
            R = R * r
        lc = G.y_coeff(G.deg_y)
        return R * lc if lc.degree > 0 else R

    def affine_places_on(self, polys: list[BiPoly], max_degree: int = MAX_EXTENSION_DEGREE) -> list[Place]:
        """Closed points of the main affine chart where some poly in ``polys`` vanishes."""
        G = self.equation
        p = self.p
        R = self._x_support(polys, G)
        if R.degree <= 0:
            return []
        out = set()
        X = Poly.x(R.field)
        frob = X % R  # x^(p^m) mod R
        for m in range(1, max_degree + 1):
            frob = frob.powmod(p, R)
            # roots of R in F_{p^m} are the roots of gcd(R, x^(p^m) - x)
            Rm = poly_gcd(R, frob - X)
            if Rm.degree <= 0:
                continue
            Fm = GF(p, m)
            for a in Rm.lift(Fm).roots(split=True):
                ga = G.at_x(Fm, a)
                if ga.degree <= 0:
                    continue
                for b in ga.roots():
                    if Fm.orbit_size(a, b) != m:
                        continue
                    if any(P.evaluate(Fm, a, b) == 0 for P in polys):
                        out.add(Place("affine", _orbit_rep(Fm, (a, b)), m, p))
        return sorted(out)

    # -- local parametrization --

    @cached_property
    def _param_cache(self) -> dict:
        return {}

    def local_parametrization(self, place: Place, prec: int) -> tuple[LaurentSeries, LaurentSeries]:
        """(x(t), y(t)) in the main affine coordinates, each with >= prec relative terms."""
        key = (place, prec)
        hit = self._param_cache.get(key)
        if hit is None:
            hit = self._param_cache[key] = self._local_parametrization(place, prec)
        return hit

    def _local_parametrization(self, place: Place, prec: int):
        extra = 8
        for _ in range(6):
            x, y = self._param(place, prec + extra)
            ok_x = x.is_zero() or x.relprec >= prec
            ok_y = (y.is_zero() and y.aprec >= prec) or (not y.is_zero() and y.relprec >= prec)
            if ok_x and ok_y:
                return x, y
            extra *= 2
        raise NoConvergence(f"could not reach relative precision {prec} at {place.label}")

    def _param(self, place: Place, prec: int):
        p = self.p
        F = place.field
        if place.chart == "inf":
            if self.family is Family.RATIONAL_LINE:
                return LaurentSeries.monomial(F, 1, -1, prec - 1), LaurentSeries.zero(F, prec)
            n, Fx = self.kummer
            D = Fx.degree
            # w^n = t^(nD) F(t^-n), a power series with constant term lc(F)
            wpoly = {}
            for i, c in enumerate(Fx.coeffs):
                if c:
                    wpoly[n * (D - i)] = c
            top = max(wpoly)
            dense = [wpoly.get(e, 0) for e in range(max(top + 1, prec))]
            W = LaurentSeries(F, 0, dense, prec + n * D)
            X, Y = BiPoly.x(p), BiPoly.y(p)
            seed = next(b for b in F.elements() if F.pow(b, n) == Fx.lc)
            w = series_solve_curve(Y ** n - X, W, seed, prec)
            x = LaurentSeries.monomial(F, 1, -n, -n + prec)
            return x, w.shift(-D)
        H = {"affine": self.equation}.get(place.chart) or _homogeneous_chart(self.homogeneous, p, place.chart)
        u, w = self._chart_point(H, F, place.coords, prec)
        if place.chart == "affine":
            return u, w
        if place.chart == "Y":
            winv = w.inverse()
            return u * winv, winv
        winv = w.inverse()
        return winv, u * winv

    @staticmethod
    def _chart_point(H: BiPoly, F, coords, prec):
        a, b = coords
        aprec = 2 * prec + 8
        if H.diff_y().evaluate(F, a, b) != 0:
            u = LaurentSeries(F, 0, [a, 1], aprec)
            return u, series_solve_curve(H, u, b, prec)
        if H.diff_x().evaluate(F, a, b) != 0:
            w = LaurentSeries(F, 0, [b, 1], aprec)
            return series_solve_curve(H.swap(), w, a, prec), w
        raise SmoothnessFailure("singular point has no coordinate uniformizer", witness=coords)

    # -- smoothness --

    def _charts(self) -> list[tuple[str, BiPoly]]:
        if self.homogeneous is not None:
            return [(c, _homogeneous_chart(self.homogeneous, self.p, w)) for c, w in
                    (("affine", "Z"), ("Y", "Y"), ("X", "X"))]
        return [("affine", self.equation)]


def smoothness_check(curve: CurveModel, max_degree: int = MAX_EXTENSION_DEGREE) -> tuple[bool, dict | None]:
    """True when no chart has a common zero of H, H_u, H_w over F_{p^m}, m <= max_degree.

    Kummer-type models y^n = F(x) additionally need gcd(n, deg F) = 1 so the
    single branch at infinity is smooth in the normalization.  Returns
    ``(False, witness)`` with the singular point on failure.
    """
    p = curve.p
    if curve.kummer is not None:
        n, Fx = curve.kummer
        from math import gcd
        if gcd(n, Fx.degree) != 1:
            return False, {"chart": "inf", "reason": f"gcd(n={n}, deg F={Fx.degree}) != 1"}
    for chart, H in curve._charts():
        if H.deg_y <= 0:
            continue
        Hu, Hw = H.diff_x(), H.diff_y()
        r1, r2 = resultant_y(H, Hu), resultant_y(H, Hw)
        if r1.is_zero() and r2.is_zero():
            return False, {"chart": chart, "reason": "equation shares a factor with both partials"}
        R = r2 if r1.is_zero() else (r1 if r2.is_zero() else poly_gcd(r1, r2))
        lc = H.y_coeff(H.deg_y)
        if lc.degree > 0:
            R = R * lc
        if R.degree <= 0:
            continue
        for m in range(1, max_degree + 1):
            Fm = GF(p, m)
            for a in R.lift(Fm).roots():
                h = H.at_x(Fm, a)
                for P in (Hu.at_x(Fm, a), Hw.at_x(Fm, a)):
                    if not P.is_zero():
                        h = poly_gcd(h, P) if not h.is_zero() else P
                if h.is_zero() or h.degree <= 0:
                    continue
                for b in h.roots():
                    return False, {"chart": chart, "x": Fm.format(a), "y": Fm.format(b), "degree": m}
    return True, None


# ---------------------------------------------------------------------------


def _weierstrass(p: int, a1=0, a2=0, a3=0, a4=0, a6=0) -> dict:
    # Y^2 Z + a1 XYZ + a3 Y Z^2 - X^3 - a2 X^2 Z - a4 X Z^2 - a6 Z^3
    return {k: v % p for k, v in {
        (0, 2, 1): 1, (1, 1, 1): a1, (0, 1, 2): a3, (3, 0, 0): -1,
        (2, 0, 1): -a2, (1, 0, 2): -a4, (0, 0, 3): -a6}.items() if v % p}


def default_elliptic(p: int) -> tuple[dict, RationalFunction | None]:
    """A smooth Weierstrass model per characteristic, with a known witness where available.

    p = 2: y^2 + y = x^3 (witness x);  p = 3: y^2 = x^3 - x (witness y);
    p = 2 mod 3: y^2 = x^3 + 1 (witness xy for p = 5);  otherwise y^2 = x^3 - x.
    """
    X, Y = RationalFunction.x(p), RationalFunction.y(p)
    if p == 2:
        return {"a3": 1}, X
    if p == 3:
        return {"a4": -1}, Y
    if p % 3 == 2:
        return {"a6": 1}, (X * Y if p == 5 else None)
    return {"a4": -1}, None


def make_curve(family, p: int, params: dict | None = None, validate: bool = True) -> CurveModel:
    """Build a validated model of one of the supported families."""
    from .fields import is_prime

    family = Family(family)
    params = dict(params or {})
    if not is_prime(p):
        raise ParamViolation(f"p = {p} is not prime")
    X, Y = BiPoly.x(p), BiPoly.y(p)
    Fp = GF(p)
    x_, y_ = RationalFunction.x(p), RationalFunction.y(p)

    if family is Family.HYPERELLIPTIC_ODD:
        h = params.get("h")
        if p < 3:
            raise ParamViolation("hyperelliptic_odd needs p >= 3")
        if not isinstance(h, int) or h < 3 or h % 2 == 0:
            raise ParamViolation(f"hyperelliptic_odd needs odd h >= 3, got h = {h}")
        D = p * h
        Fx = Poly.from_ints(Fp, [1 if i in (0, p + 1, D) else 0 for i in range(D + 1)])
        curve = CurveModel(family, p, (("h", h),), Y ** 2 - (X ** D + X ** (p + 1) + 1),
                           genus=(D - 1) // 2, witness=y_ / x_ ** p,
                           pole_weights=(2, D), semigroup_generators=(2, D), kummer=(2, Fx))
    elif family is Family.SUPERELLIPTIC:
        h = params.get("h")
        if not isinstance(h, int) or h <= 2:
            raise ParamViolation(f"superelliptic needs h > 2, got h = {h}")
        n = h * p - 1
        Fx = Poly.from_ints(Fp, [0, -1] + [0] * (p - 2) + [1])
        curve = CurveModel(family, p, (("h", h),), Y ** n - (X ** p - X),
                           genus=(n - 1) * (p - 1) // 2, witness=y_,
                           pole_weights=(n, p), semigroup_generators=(n, p), kummer=(n, Fx))
    elif family is Family.PLANE_PROJECTIVE:
        if p < 3:
            raise ParamViolation("plane_projective needs p >= 3")
        if "phi" in params:
            phi = {tuple(k): v % p for k, v in params["phi"].items() if v % p}
            d = sum(next(iter(phi)))
            curve = CurveModel(family, p, (), _homogeneous_chart(phi, p, "Z"), homogeneous=phi,
                               genus=(d - 1) * (d - 2) // 2, witness=None, pole_weights=(1, 1))
        else:
            # x0 -> X, x1 -> Y, x2 -> Z
            phi = {(p + 1, 0, 0): 1, (p - 1, 1, 1): -1, (0, p, 1): -1, (0, 1, p): 1}
            d = p + 1
            curve = CurveModel(family, p, (), _homogeneous_chart(phi, p, "Z"), homogeneous=phi,
                               genus=(d - 1) * (d - 2) // 2, witness=x_ / y_,
                               # Z = 0 meets the curve only at (0:1:0), with multiplicity p + 1
                               pole_weights=(p, p + 1), semigroup_generators=(p, p + 1))
    elif family is Family.RATIONAL_LINE:
        curve = CurveModel(family, p, (), Y, genus=0, witness=x_,
                           pole_weights=(1, 1), semigroup_generators=(1,))
    elif family is Family.ELLIPTIC_WEIERSTRASS:
        coeffs = {k: params[k] for k in ("a1", "a2", "a3", "a4", "a6") if k in params}
        witness = None
        if not coeffs:
            coeffs, witness = default_elliptic(p)
        phi = _weierstrass(p, **coeffs)
        curve = CurveModel(family, p, tuple(sorted(coeffs.items())), _homogeneous_chart(phi, p, "Z"),
                           homogeneous=phi, genus=1, witness=witness,
                           pole_weights=(2, 3), semigroup_generators=(2, 3))
    else:  # pragma: no cover
        raise ParamViolation(f"unknown family {family}")

    if validate:
        ok, wit = smoothness_check(curve)
        if not ok:
            raise SmoothnessFailure(f"{curve.curve_id} is singular", witness=wit)
    return curve


def local_parametrization(curve: CurveModel, place: Place, prec: int):
    return curve.local_parametrization(place, prec)
