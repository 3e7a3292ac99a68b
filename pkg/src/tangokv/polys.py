"""Univariate polynomials over F_q and bivariate polynomials over F_p.

:class:`Poly` carries raw field integers (see :mod:`tangokv.fields`).
:class:`BiPoly` always has prime-field coefficients; it represents curve
equations and numerators/denominators of rational functions, and can be
evaluated at points of any extension field.
"""
from __future__ import annotations

import random
from typing import Iterable

from .fields import GF, FiniteField


class Poly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_ints(cls, field: FiniteField, ints: Iterable[int]) -> "Poly":
        return cls(field, [field.from_int(i) for i in ints])

    @classmethod
    def x(cls, field: FiniteField) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field: FiniteField, c: int) -> "Poly":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({[self.field.format(c) for c in self.coeffs]}, {self.field!r})"

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(ai, b[i]) if i < len(b) else ai for i, ai in enumerate(a)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        if F.k == 1:
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Poly(F, [c % p for c in out])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def __pow__(self, e: int) -> "Poly":
        r = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.lc)
        quot = [0] * max(0, len(rem) - db)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = F.mul(rem[shift + db], inv)
            quot[shift] = c
            if c:
                for i, bi in enumerate(other.coeffs):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bi))
        return Poly(F, quot), Poly(F, rem[:db] if db > 0 else [])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.field.inv(self.lc)

    def __call__(self, a: int) -> int:
        F = self.field
        r = 0
        for c in reversed(self.coeffs):
            r = F.add(F.mul(r, a), c)
        return r

    def powmod(self, e: int, m: "Poly") -> "Poly":
        r = Poly.const(self.field, 1) % m
        base = self % m
        while e:
            if e & 1:
                r = (r * base) % m
            base = (base * base) % m
            e >>= 1
        return r

    def lift(self, field: FiniteField) -> "Poly":
        """Reinterpret a polynomial with prime-field coefficients over a larger field."""
        if self.field.k != 1 and field is not self.field:
            raise ValueError("only prime-field polynomials can be lifted")
        return Poly(field, self.coeffs)

    def roots(self, seed: int = 0, split: bool = False) -> list[int]:
        """Distinct roots in the coefficient field, sorted.

        ``split=True`` promises a squarefree product of linear factors.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has every element as a root")
        if self.degree <= 0:
            return []
        F = self.field
        if self.degree == 1:
            return [F.neg(F.mul(self.coeffs[0], F.inv(self.lc)))]
        if split:
            g = self.monic()
        else:
            X = Poly.x(F)
            g = poly_gcd(self, X.powmod(F.q, self) - X)
        out: list[int] = []
        _split_linear(g, random.Random(seed), out)
        return sorted(out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def formal_derivative(f: Poly) -> Poly:
    """Coefficient-wise derivative; in characteristic p the term x^(kp) dies."""
    F = f.field
    return Poly(F, [F.mul(c, F.from_int(i)) for i, c in enumerate(f.coeffs)][1:])


def _split_linear(g: Poly, rng: random.Random, out: list[int]) -> None:
    # g is monic and a product of distinct linear factors
    if g.degree <= 0:
        return
    F = g.field
    if g.degree == 1:
        out.append(F.neg(g.coeffs[0]))
        return
    if F.q <= 16:
        out.extend(a for a in F.elements() if g(a) == 0)
        return
    X = Poly.x(F)
    while True:
        a = rng.randrange(1, F.q)
        if F.p == 2:
            base = (X * a) % g
            t, cur = base, base
            for _ in range(F.k - 1):
                cur = (cur * cur) % g
                t = t + cur
            h = poly_gcd(g, t)
        else:
            shifted = X + Poly.const(F, a)
            h = poly_gcd(g, shifted.powmod((F.q - 1) // 2, g) - Poly.const(F, 1))
        if 0 < h.degree < g.degree:
            _split_linear(h, rng, out)
            _split_linear(g // h, rng, out)
            return


# ---------------------------------------------------------------------------


class BiPoly:
    """Sparse polynomial in x, y with coefficients in F_p: {(i, j): c}."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict | None = None):
        self.p = p
        self.terms = {k: v % p for k, v in (terms or {}).items() if v % p}

    @classmethod
    def const(cls, p: int, c: int) -> "BiPoly":
        return cls(p, {(0, 0): c})

    @classmethod
    def x(cls, p: int) -> "BiPoly":
        return cls(p, {(1, 0): 1})

    @classmethod
    def y(cls, p: int) -> "BiPoly":
        return cls(p, {(0, 1): 1})

    @classmethod
    def monomial(cls, p: int, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls(p, {(i, j): c})

    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.p != self.p:
                raise ValueError("characteristic mismatch")
            return other
        if isinstance(other, int):
            return BiPoly.const(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return BiPoly(self.p, t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.p, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return BiPoly(self.p, t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = BiPoly.const(self.p, 1)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def diff_x(self) -> "BiPoly":
        return BiPoly(self.p, {(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return BiPoly(self.p, {(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def swap(self) -> "BiPoly":
        return BiPoly(self.p, {(j, i): c for (i, j), c in self.terms.items()})

    def y_coeff(self, j: int) -> Poly:
        """Coefficient of y^j as a polynomial in x over F_p."""
        F = GF(self.p)
        d = max((i for (i, jj) in self.terms if jj == j), default=-1)
        c = [0] * (d + 1)
        for (i, jj), v in self.terms.items():
            if jj == j:
                c[i] = v
        return Poly(F, c)

    def at_x(self, field: FiniteField, a: int) -> Poly:
        """Specialize x = a (a in ``field``), giving a polynomial in y."""
        out = [0] * (self.deg_y + 1)
        for (i, j), c in self.terms.items():
            out[j] = field.add(out[j], field.mul(c, field.pow(a, i)))
        return Poly(field, out)

    def evaluate(self, field: FiniteField, a: int, b: int) -> int:
        r = 0
        for (i, j), c in self.terms.items():
            r = field.add(r, field.mul(c, field.mul(field.pow(a, i), field.pow(b, j))))
        return r

    def reduce_y(self, G: "BiPoly") -> "BiPoly":
        """Remainder of division by G in y; G's leading y-coefficient must be constant."""
        e = G.deg_y
        lc = G.y_coeff(e)
        if lc.degree != 0:
            raise ValueError("curve equation must have constant leading coefficient in y")
        inv = pow(lc.coeffs[0], self.p - 2, self.p)
        # y^e = -(inv) * (G - lc*y^e)
        tail = BiPoly(self.p, {k: -v * inv for k, v in G.terms.items() if k[1] != e})
        r = dict(self.terms)
        while True:
            top = [k for k in r if k[1] >= e]
            if not top:
                return BiPoly(self.p, r)
            jmax = max(k[1] for k in top)
            new = {k: v for k, v in r.items() if k[1] != jmax}
            hi = BiPoly(self.p, {(i, j - e): v for (i, j), v in r.items() if j == jmax})
            acc = BiPoly(self.p, new) + hi * tail
            r = acc.terms

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1])):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            m = "*".join(mono)
            if not m:
                parts.append(str(c))
            else:
                parts.append(m if c == 1 else f"{c}*{m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPoly({self.format()} mod {self.p})"


def resultant_y(P: BiPoly, Q: BiPoly) -> Poly:
    """Res_y(P, Q) in F_p[x], by fraction-free elimination on the Sylvester matrix."""
    F = GF(P.p)
    m, n = P.deg_y, Q.deg_y
    if m < 0 or n < 0:
        return Poly(F)
    if n == 0:
        return Q.y_coeff(0) ** m
    if m == 0:
        return P.y_coeff(0) ** n
    pc = [P.y_coeff(j) for j in range(m, -1, -1)]
    qc = [Q.y_coeff(j) for j in range(n, -1, -1)]
    size = m + n
    zero = Poly(F)
    M = []
    for r in range(n):
        M.append([zero] * r + pc + [zero] * (size - r - m - 1))
    for r in range(m):
        M.append([zero] * r + qc + [zero] * (size - r - n - 1))
    sign = 1
    prev = Poly.const(F, 1)
    for k in range(size - 1):
        if M[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not M[r][k].is_zero()), None)
            if swap is None:
                return zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                q, r = num.divmod(prev)
                assert r.is_zero()
                M[i][j] = q
            M[i][k] = zero
        prev = M[k][k]
    det = M[size - 1][size - 1]
    return det if sign == 1 else -det
