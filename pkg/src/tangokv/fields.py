"""Exact arithmetic in prime fields F_p and extensions F_{p^k}.

Elements are stored as plain integers: the base-p digits of the integer are
the coordinates of the element in the basis 1, a, a^2, ... where ``a`` is a
root of the field's defining polynomial.  In particular the integers
``0 .. p-1`` are the prime-field elements in every extension, so polynomials
with F_p coefficients can be evaluated in any F_{p^k} without conversion.

Hot loops (series, polynomial arithmetic) call the ``add``/``mul``/... methods
on raw integers.  :class:`FieldElement` is the user-facing wrapper.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

MAX_EXTENSION_DEGREE = 6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomials over F_p as coefficient lists (low degree first) ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(_trim(a)) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _trim(_pmod(a, b, p))
    return a


def is_irreducible_mod_p(m: list[int], p: int) -> bool:
    """Rabin-style test: gcd(m, x^(p^i) - x) = 1 for all i <= deg/2."""
    k = len(m) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    cur = x
    for _ in range(k // 2):
        # cur <- cur^p mod m
        r, base, e = [1], cur, p
        while e:
            if e & 1:
                r = _pmulmod(r, base, m, p)
            base = _pmulmod(base, base, m, p)
            e >>= 1
        cur = r
        diff = list(cur) + [0] * max(0, 2 - len(cur))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def defining_polynomial(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree k in lexicographic order.

    Coefficients are enumerated as (c_{k-1}, ..., c_0) tuples in
    ``itertools.product`` order.  Returned low degree first, monic.
    """
    if k == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=k):
        coeffs = list(reversed(tail)) + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


class FiniteField:
    """The field F_{p^k}; elements are integers in ``range(p**k)``."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = defining_polynomial(p, k)
        if not is_irreducible_mod_p(list(self.modulus), p):
            raise ValueError("defining polynomial is reducible")
        if k > 1:
            self._build_tables()

    # -- table construction (extension fields only) --

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, d) -> int:
        r = 0
        for c in reversed(d):
            r = r * self.p + c
        return r

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmulmod(self._digits(a), self._digits(b), list(self.modulus), self.p)
        return self._undigits(prod + [0] * (self.k - len(prod)))

    def _build_tables(self):
        Q = self.q - 1
        factors = _prime_factors(Q)

        def slow_pow(a, e):
            r = 1
            while e:
                if e & 1:
                    r = self._slow_mul(r, a)
                a = self._slow_mul(a, a)
                e >>= 1
            return r

        gen = next(g for g in range(2, self.q)
                   if all(slow_pow(g, Q // r) != 1 for r in factors))
        exp = [0] * Q
        log = [-1] * self.q
        cur = 1
        for i in range(Q):
            exp[i] = cur
            log[cur] = i
            cur = self._slow_mul(cur, gen)
        p = self.p
        zech = [-1] * Q
        for i in range(Q):
            e = exp[i]
            e1 = e + 1 if e % p != p - 1 else e - (p - 1)
            zech[i] = log[e1] if e1 else -1
        self.generator = gen
        self._exp, self._log, self._zech = exp, log, zech
        self._half = Q // 2 if p != 2 else 0

    # -- raw arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self._half) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_{p^k}."""
        return n % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def coords(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a)) if self.k > 1 else (a,)

    def from_coords(self, coords) -> int:
        d = [c % self.p for c in coords] + [0] * (self.k - len(coords))
        return self._undigits(d[: self.k])

    def orbit_size(self, *elements: int) -> int:
        """Size of the Frobenius orbit of a tuple: the degree of the field it generates."""
        for m in range(1, self.k + 1):
            if self.k % m == 0 and all(self.pow(a, self.p ** m) == a for a in elements):
                return m
        return self.k

    def elements(self):
        return range(self.q)

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self._digits(a)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.from_coords(value))
        return FieldElement(self, self.from_int(int(value)))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.k))


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> FiniteField:
    """Cached field constructor; the same (p, k) always returns the same object."""
    return FiniteField(p, k)


class FieldElement:
    """An element of a :class:`FiniteField` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field!r}"

    def __str__(self):
        return self.field.format(self.value)
