"""Finite field tower F_p < F_q < K = F_{q^{2m}}.

Elements are stored as canonical integers: an element of K with power-basis
coefficients c_0..c_{2m-1} in F_q is N = sum c_i q^i, and an element of F_q
with F_p-coefficients d_0..d_{e-1} is sum d_j p^j.  F_q therefore sits inside
K as the integers 0..q-1, and an F_q-matrix is a K-matrix with small entries.

Multiplication goes through exp/log tables over a generator found by order
testing; odd-characteristic addition uses Zech logarithms, characteristic 2
uses XOR.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import NonPrimeP, NotInBaseField, ReducibleModulus

#: largest field order for which tables are built
MAX_ORDER = 1 << 20
#: odd-characteristic square roots are found by exhaustive search over F_q
MAX_SQRT_SEARCH = 1 << 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# polynomial helpers over a FiniteField, coefficient lists constant term first

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], F: "FiniteField") -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bi))
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], F: "FiniteField") -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _poly_rem(out, mod, F)


def is_irreducible(coeffs: Sequence[int], F: "FiniteField") -> bool:
    """Trial division by every monic polynomial of degree <= deg/2 over F."""
    f = _trim(list(coeffs))
    d = len(f) - 1
    if d < 1:
        return False
    for j in range(1, d // 2 + 1):
        for low in product(range(F.order), repeat=j):
            if not _poly_rem(f, list(low) + [1], F):
                return False
    return True


def find_irreducible(F: "FiniteField", degree: int) -> list[int]:
    """First monic irreducible of the given degree, in canonical coefficient order."""
    for low in product(range(F.order), repeat=degree):
        cand = list(reversed(low)) + [1]
        if cand[0] != 0 and is_irreducible(cand, F):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {degree}")  # unreachable


class FiniteField:
    """F_p, or base[z]/(modulus) for a monic irreducible modulus over ``base``."""

    def __init__(self, p: int, base: "FiniteField | None" = None, modulus: Sequence[int] | None = None):
        self.p = p
        self.base = base
        if base is None:
            self.modulus = None
            self.degree = 1
            self.order = p
        else:
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            self.order = base.order ** self.degree
        if self.order > MAX_ORDER:
            raise ValueError(f"field order {self.order} exceeds table cap {MAX_ORDER}")
        self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField(order={self.order})"

    # slow arithmetic used only while building tables
    def _digits(self, a: int) -> list[int]:
        b = self.base.order
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, b)
            out.append(r)
        return out

    def _undigits(self, ds: Iterable[int]) -> int:
        b = self.base.order
        n = 0
        for d in reversed(list(ds)):
            n = n * b + d
        return n

    def _slow_mul(self, a: int, b: int) -> int:
        if self.base is None:
            return a * b % self.p
        r = _poly_mulmod(self._digits(a), self._digits(b), self.modulus, self.base)
        return self._undigits(r + [0] * (self.degree - len(r)))

    def _slow_add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        return self._undigits(self.base.add(x, y) for x, y in zip(self._digits(a), self._digits(b)))

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        Q = self.order
        n = Q - 1
        factors = prime_factors(n)
        gen = None
        for g in range(1, Q):
            if all(self._slow_pow(g, n // r) != 1 for r in factors):
                gen = g
                break
        if gen is None:
            raise ValueError("multiplicative group is not cyclic; modulus is not irreducible")
        self.generator = gen
        exp = [0] * (2 * n)
        log = [-1] * Q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[n:] = exp[:n]
        self._exp = exp
        self._log = log
        if self.p == 2:
            self._neg = list(range(Q))
            self._zech = None
        else:
            # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
            zech = [-1] * n
            for d in range(n):
                s = self._slow_add(1, exp[d])
                zech[d] = log[s] if s else -1
            self._zech = zech
            neg = [0] * Q
            half = n // 2
            for a in range(1, Q):
                neg[a] = exp[log[a] + half]
            self._neg = neg

    # fast arithmetic on canonical integers
    def add(self, a: int, b: int) -> int:
        if self._zech is None:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.order - 1)]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        n = self.order - 1
        return self._exp[(self._log[a] * e) % n]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.order - 1)]

    def elements(self) -> range:
        return range(self.order)

    def sqrt(self, x: int) -> int | None:
        """y with y^2 = x, or None.  Odd characteristic: exhaustive search, smaller root of +-y."""
        if self.p == 2:
            return self.pow(x, self.order // 2)
        if self.order > MAX_SQRT_SEARCH:
            raise ValueError(f"square root search capped at order <= {MAX_SQRT_SEARCH}")
        for y in range(self.order):
            if self.mul(y, y) == x:
                return min(y, self.neg(y))
        return None

    def sum(self, xs: Iterable[int]) -> int:
        s = 0
        for x in xs:
            s = self.add(s, x)
        return s

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        s = 0
        for x, y in zip(xs, ys):
            if x and y:
                s = self.add(s, self._exp[self._log[x] + self._log[y]])
        return s


def _as_coeff_list(poly, base: FiniteField | None, p: int) -> list[int]:
    """Accept polynomial coefficients as ints, or as F_p digit lists for each coefficient."""
    out = []
    for c in poly:
        if isinstance(c, (list, tuple)):
            n = 0
            for d in reversed(c):
                n = n * p + int(d) % p
            out.append(n)
        else:
            out.append(int(c))
    return out


class FieldTower:
    """F_p < F_q < K with q = p^e and [K : F_q] = 2m.

    Arithmetic methods take and return canonical integers.  ``K`` and ``Fq``
    are the underlying :class:`FiniteField` objects.
    """

    def __init__(self, p: int, e: int, m: int, base_modulus, top_modulus):
        if not is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if e < 1 or m < 1:
            raise ValueError("e and m must be positive")
        self.p = p
        self.e = e
        self.m = m
        self.q = p ** e
        Fp = FiniteField(p)
        if e == 1:
            if base_modulus is not None and len(base_modulus) not in (0, 2):
                raise ValueError("base_modulus must be absent when e = 1")
            self.base_modulus = None
            self.Fq = Fp
        else:
            bm = _as_coeff_list(base_modulus or [], None, p)
            bm = [c % p for c in bm]
            if len(bm) != e + 1 or bm[-1] != 1:
                raise ValueError(f"base_modulus must be monic of degree {e}")
            if not is_irreducible(bm, Fp):
                raise ReducibleModulus("base_modulus", bm)
            self.base_modulus = tuple(bm)
            self.Fq = FiniteField(p, Fp, bm)
        tm = _as_coeff_list(top_modulus, self.Fq, p)
        if len(tm) != 2 * m + 1 or tm[-1] != 1 or any(not 0 <= c < self.q for c in tm):
            raise ValueError(f"top_modulus must be monic of degree {2 * m} over F_{self.q}")
        if not is_irreducible(tm, self.Fq):
            raise ReducibleModulus("top_modulus", tm)
        self.top_modulus = tuple(tm)
        self.K = FiniteField(p, self.Fq, tm)
        self.order = self.K.order
        self.degree = 2 * m
        self._qpow = [pow(self.q, i, self.order - 1) for i in range(2 * m)]
        K = self.K
        self.add, self.sub, self.neg = K.add, K.sub, K.neg
        self.mul, self.inv, self.div, self.pow = K.mul, K.inv, K.div, K.pow
        self.dot = K.dot

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldTower)
            and (self.p, self.e, self.m, self.base_modulus, self.top_modulus)
            == (other.p, other.e, other.m, other.base_modulus, other.top_modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.m, self.base_modulus, self.top_modulus))

    def config(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "base_modulus": list(self.base_modulus) if self.base_modulus else None,
            "top_modulus": list(self.top_modulus),
        }

    @classmethod
    def from_config(cls, cfg: dict) -> "FieldTower":
        return cls(cfg["p"], cfg.get("e", 1), cfg["m"], cfg.get("base_modulus"), cfg["top_modulus"])

    # element plumbing
    @property
    def omega(self) -> int:
        """Class of z in K = F_q[z]/(top_modulus)."""
        return self.q

    def coeffs(self, x: int) -> list[int]:
        """Power-basis coordinates of x over F_q (length 2m)."""
        return self.K._digits(x)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        return self.K._undigits(cs)

    def parse(self, x) -> int:
        """Canonical integer, or a coefficient array (F_q ints or F_p digit lists)."""
        if isinstance(x, FieldElement):
            return x.value
        if isinstance(x, (list, tuple)):
            cs = _as_coeff_list(x, self.Fq, self.p)
            if len(cs) > self.degree:
                raise ValueError(f"too many coefficients: {x}")
            cs = cs + [0] * (self.degree - len(cs))
            return self.from_coeffs(cs)
        x = int(x)
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not a canonical element of F_{self.order}")
        return x

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.parse(x))

    def in_base(self, x: int) -> bool:
        return x < self.q

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    # Frobenius, involution, trace, norm
    def frobenius_power(self, x: int, i: int) -> int:
        """x^(q^i), with i taken mod 2m."""
        if x == 0:
            return 0
        K = self.K
        return K._exp[(K._log[x] * self._qpow[i % self.degree]) % (self.order - 1)]

    def sigma(self, x: int) -> int:
        return self.frobenius_power(x, self.m)

    def trace(self, x: int) -> int:
        t = 0
        for i in range(self.degree):
            t = self.add(t, self.frobenius_power(x, i))
        return t

    def norm(self, x: int) -> int:
        if x == 0:
            return 0
        return self.pow(x, (self.order - 1) // (self.q - 1))

    def square_root(self, x: int) -> int | None:
        """A y in F_q with y^2 = x, or None when x is a non-square.

        Odd characteristic returns the root with the smaller encoding.
        """
        if not self.in_base(x):
            raise NotInBaseField(f"{x} is not in F_{self.q}")
        return self.Fq.sqrt(x)


class FieldElement:
    """A single element of K with operator support; wraps a canonical integer."""

    __slots__ = ("tower", "value")

    def __init__(self, tower: FieldTower, value: int):
        self.tower = tower
        self.value = value

    def _other(self, o) -> int:
        if isinstance(o, FieldElement):
            return o.value
        return self.tower.parse(o)

    def __add__(self, o):
        return FieldElement(self.tower, self.tower.add(self.value, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElement(self.tower, self.tower.sub(self.value, self._other(o)))

    def __rsub__(self, o):
        return FieldElement(self.tower, self.tower.sub(self._other(o), self.value))

    def __mul__(self, o):
        return FieldElement(self.tower, self.tower.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElement(self.tower, self.tower.div(self.value, self._other(o)))

    def __neg__(self):
        return FieldElement(self.tower, self.tower.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.tower, self.tower.pow(self.value, e))

    def __eq__(self, o) -> bool:
        if isinstance(o, FieldElement):
            return self.tower == o.tower and self.value == o.value
        if isinstance(o, int):
            return self.value == o
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.value})"

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.tower.coeffs(self.value))

    @property
    def prime_coeffs(self) -> tuple[tuple[int, ...], ...]:
        """Each F_q coefficient expanded into its e F_p digits."""
        p, e = self.tower.p, self.tower.e
        out = []
        for c in self.coeffs:
            ds = []
            for _ in range(e):
                c, r = divmod(c, p)
                ds.append(r)
            out.append(tuple(ds))
        return tuple(out)

    def frobenius(self, i: int = 1) -> "FieldElement":
        return FieldElement(self.tower, self.tower.frobenius_power(self.value, i))

    def sigma(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.sigma(self.value))

    def trace(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.trace(self.value))

    def norm(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.norm(self.value))

    def sqrt(self) -> "FieldElement | None":
        r = self.tower.square_root(self.value)
        return None if r is None else FieldElement(self.tower, r)


def build_field(p: int, e: int, m: int, base_modulus=None, top_modulus=None) -> FieldTower:
    return FieldTower(p, e, m, base_modulus, top_modulus)


# Moduli shipped with the package; (p, e, m) -> (base_modulus, top_modulus).
SHIPPED_MODULI: dict[tuple[int, int, int], tuple[list[int] | None, list[int]]] = {
    (2, 1, 1): (None, [1, 1, 1]),  # F4: w^2 + w + 1 = 0
    (2, 1, 2): (None, [1, 1, 0, 0, 1]),  # F16: w^4 + w + 1 = 0
    (3, 1, 1): (None, [1, 0, 1]),  # F9: w^2 + 1 = 0
    (2, 2, 1): ([1, 1, 1], [2, 1, 1]),  # F16 over F4: z^2 + z + a, a^2 + a + 1 = 0
}

_tower_cache: dict[tuple[int, int], FieldTower] = {}


def _split_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                break
            return p, e
    raise ValueError(f"q = {q} is not a prime power")


def standard_tower(q: int, m: int) -> FieldTower:
    """Tower for (q, m): shipped moduli when available, else the first irreducibles found."""
    key = (q, m)
    if key in _tower_cache:
        return _tower_cache[key]
    p, e = _split_prime_power(q)
    if (p, e, m) in SHIPPED_MODULI:
        bm, tm = SHIPPED_MODULI[(p, e, m)]
    else:
        Fp = FiniteField(p)
        bm = find_irreducible(Fp, e) if e > 1 else None
        Fq = FiniteField(p, Fp, bm) if e > 1 else Fp
        tm = find_irreducible(Fq, 2 * m)
    tower = FieldTower(p, e, m, bm, tm)
    _tower_cache[key] = tower
    return tower
