"""Truncated Laurent series over F_q with absolute-precision tracking.

A series is ``sum(coeffs[i] * t**(val + i)) + O(t**aprec)``.  The leading
stored coefficient is nonzero unless the series is zero to its precision, in
which case ``coeffs`` is empty and ``val == aprec``.
"""
from __future__ import annotations

from .errors import NoConvergence, PrecisionExhausted
from .fields import FieldElement, FiniteField
from .polys import BiPoly


_REDUCTION: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def _reduction_table(F: FiniteField) -> list[tuple[int, ...]]:
    """Coordinates of z^j, j < 2k - 1, in the polynomial basis of F."""
    key = (F.p, F.k)
    tab = _REDUCTION.get(key)
    if tab is None:
        z = F.from_coords([0, 1] + [0] * (F.k - 2)) if F.k > 1 else 1
        tab, cur = [], 1
        for _ in range(2 * F.k - 1):
            tab.append(tuple(F.coords(cur)))
            cur = F.mul(cur, z)
        _REDUCTION[key] = tab
    return tab


def _convolve(F: FiniteField, a, b, n: int) -> list[int]:
    """First n coefficients of the product of two coefficient lists.

    Kronecker substitution: each coefficient is a polynomial of degree < k
    in the field generator; both lists are packed into one big integer
    with slots wide enough that no carries cross slot boundaries.
    """
    a, b = a[:n], b[:n]
    if not a or not b:
        return [0] * n
    p, k = F.p, F.k
    width = 2 * k - 1
    bound = (p - 1) ** 2 * k * min(len(a), len(b)) + 1
    bits = bound.bit_length()
    mask = (1 << bits) - 1

    def pack(seq):
        r = 0
        for i in range(len(seq) - 1, -1, -1):
            c = seq[i]
            if k == 1:
                r = (r << (bits * width)) | c
                continue
            slot = 0
            for d in range(k - 1, -1, -1):
                slot = (slot << bits) | (c // p ** d % p)
            r = (r << (bits * width)) | slot
        return r

    prod = pack(a) * pack(b)
    out = [0] * n
    if k == 1:
        for i in range(n):
            out[i] = (prod & mask) % p
            prod >>= bits
            if not prod:
                break
        return out
    tab = _reduction_table(F)
    for i in range(n):
        if not prod:
            break
        acc = [0] * k
        for j in range(width):
            c = (prod & mask) % p
            prod >>= bits
            if c:
                for d, t in enumerate(tab[j]):
                    acc[d] += c * t
        v = 0
        for d in range(k - 1, -1, -1):
            v = v * p + acc[d] % p
        out[i] = v
    return out


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "aprec")

    def __init__(self, field: FiniteField, val: int, coeffs, aprec: int):
        c = list(coeffs)[: max(0, aprec - val)]
        lead = 0
        while lead < len(c) and c[lead] == 0:
            lead += 1
        c = c[lead:]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)
        self.val = val + lead if c else aprec
        self.aprec = aprec

    # -- constructors --

    @classmethod
    def zero(cls, field, aprec: int) -> "LaurentSeries":
        return cls(field, aprec, (), aprec)

    @classmethod
    def constant(cls, field, c: int, aprec: int) -> "LaurentSeries":
        return cls(field, 0, (c,), aprec)

    @classmethod
    def monomial(cls, field, c: int, e: int, aprec: int) -> "LaurentSeries":
        return cls(field, e, (c,), aprec)

    @classmethod
    def from_dense(cls, field, val: int, coeffs, aprec: int) -> "LaurentSeries":
        return cls(field, val, coeffs, aprec)

    # -- inspection --

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def relprec(self) -> int:
        return self.aprec - self.val

    def coeff(self, e: int) -> int:
        if e >= self.aprec:
            raise PrecisionExhausted(f"coefficient of t^{e} beyond precision O(t^{self.aprec})")
        i = e - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def valuation(self) -> int:
        if not self.coeffs:
            raise PrecisionExhausted(f"series is O(t^{self.aprec}); raise precision")
        return self.val

    def __repr__(self):
        F = self.field
        terms = [f"{F.format(c)}*t^{self.val + i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms + [f"O(t^{self.aprec})"])

    # -- arithmetic --

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, FieldElement):
            return LaurentSeries.constant(self.field, other.value, self.aprec)
        if isinstance(other, int):
            return LaurentSeries.constant(self.field, self.field.from_int(other), self.aprec)
        return NotImplemented

    def __add__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        aprec = min(self.aprec, other.aprec)
        lo = min(self.val, other.val)
        if lo >= aprec:
            return LaurentSeries.zero(F, aprec)
        out = [0] * (aprec - lo)
        for s in (self, other):
            off = s.val - lo
            for i, c in enumerate(s.coeffs):
                if off + i >= len(out):
                    break
                out[off + i] = F.add(out[off + i], c)
        return LaurentSeries(F, lo, out, aprec)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(F, self.val, [F.neg(c) for c in self.coeffs], self.aprec)

    def __sub__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        val = self.val + other.val
        aprec = min(self.val + other.aprec, other.val + self.aprec)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(F, aprec)
        n = aprec - val
        return LaurentSeries(F, val, _convolve(F, self.coeffs, other.coeffs, n), aprec)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        """Newton iteration y <- y(2 - ay), doubling the correct prefix."""
        F = self.field
        v = self.valuation()
        n = self.relprec
        a = list(self.coeffs)
        y = [F.inv(a[0])]
        cur = 1
        two = F.from_int(2)
        while cur < n:
            cur = min(2 * cur, n)
            ay = _convolve(F, a, y, cur)
            e = [F.neg(c) for c in ay]
            e[0] = F.add(e[0], two)
            y = _convolve(F, y, e, cur)
        return LaurentSeries(F, -v, y, -v + n)

    def __truediv__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int) -> "LaurentSeries":
        if e < 0:
            return self.inverse() ** (-e)
        r = LaurentSeries.constant(self.field, 1, 10 ** 9)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        if r.aprec == 10 ** 9:
            # e == 0: a constant carries the relative precision of its source
            return LaurentSeries.constant(self.field, 1, self.relprec)
        return r

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k exactly."""
        return LaurentSeries(self.field, self.val + k, self.coeffs, self.aprec + k)

    def truncate(self, aprec: int) -> "LaurentSeries":
        return LaurentSeries(self.field, self.val, self.coeffs, min(aprec, self.aprec))

    def derivative(self) -> "LaurentSeries":
        """d/dt, coefficient-wise; exponents divisible by p are killed."""
        F = self.field
        out = [F.mul(c, F.from_int(self.val + i)) for i, c in enumerate(self.coeffs)]
        return LaurentSeries(F, self.val - 1, out, self.aprec - 1)


def series_valuation(s: LaurentSeries) -> int:
    return s.valuation()


def eval_bipoly(poly: BiPoly, X: LaurentSeries, Y: LaurentSeries) -> LaurentSeries:
    """poly(X, Y) by Horner in Y with cached powers of X."""
    F = X.field
    aprec_hint = min(X.aprec, Y.aprec)
    if poly.is_zero():
        return LaurentSeries.zero(F, aprec_hint)
    xpow: dict[int, LaurentSeries] = {}

    def xp(i):
        if i not in xpow:
            xpow[i] = X ** i if i else LaurentSeries.constant(F, 1, X.relprec + max(0, X.val))
        return xpow[i]

    by_j: dict[int, list] = {}
    for (i, j), c in poly.terms.items():
        by_j.setdefault(j, []).append((i, c))
    result = None
    for j in range(poly.deg_y, -1, -1):
        layer = None
        for i, c in by_j.get(j, []):
            term = xp(i) * F.from_int(c)
            layer = term if layer is None else layer + term
        if result is not None:
            result = result * Y
            if layer is not None:
                result = result + layer
        else:
            result = layer
    return result


def series_solve_curve(eq: BiPoly, x_series: LaurentSeries, y_seed, prec: int) -> LaurentSeries:
    """Solve eq(x(t), y) = 0 for y by Newton iteration from a seed.

    The seed is a field element (raw int or FieldElement) or a series.
    Hensel condition: v(eq(x, seed)) > 2 * v(eq_y(x, seed)).
    Returns y with ``prec`` trustworthy terms past its leading exponent.
    """
    F = x_series.field
    if isinstance(y_seed, LaurentSeries):
        y = y_seed
    else:
        c = y_seed.value if isinstance(y_seed, FieldElement) else y_seed
        y = LaurentSeries.constant(F, c, x_series.aprec)
    eq_y = eq.diff_y()
    try:
        s = eval_bipoly(eq_y, x_series, y).valuation()
    except PrecisionExhausted:
        raise NoConvergence("derivative in y vanishes on the seed") from None
    g = eval_bipoly(eq, x_series, y)
    if not g.is_zero() and g.val <= 2 * s:
        raise NoConvergence(f"Hensel condition fails: v(eq)={g.val} <= 2*v(eq_y)={2 * s}")
    y0 = y.valuation() if not y.is_zero() else 0
    target = y0 + prec
    for _ in range(64):
        g = eval_bipoly(eq, x_series, y)
        if g.is_zero():
            break
        corr = g / eval_bipoly(eq_y, x_series, y)
        y = y - corr
        if corr.is_zero() or corr.val >= target:
            break
    if y.aprec < target:
        raise NoConvergence(f"input precision supports only O(t^{y.aprec}), need O(t^{target})")
    return y.truncate(target)
