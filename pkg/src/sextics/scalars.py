"""Exact scalar arithmetic: rationals, Gaussian rationals, prime fields.

Rationals are `fractions.Fraction` (always in lowest terms, positive
denominator).  Gaussian rationals are a small immutable class over two
Fractions.  Prime-field elements are plain Python ints in [0, p) with the
modulus carried by the domain object, so hot loops can inline `% p`.

Also provides the deterministic word-size prime pool, Chinese remaindering
and rational reconstruction used by the multi-modular code paths.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import ReconstructFailed


class GaussianRational:
    """Element of Q(i), stored as exact real and imaginary Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k):
        out = GaussianRational(1)
        base = self
        if k < 0:
            base = GaussianRational(1) / base
            k = -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure --------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


def _coerce_gauss(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# Domains
# ---------------------------------------------------------------------------


class Rationals:
    """The field Q, with elements fractions.Fraction (ints allowed as values)."""

    char = 0
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, GaussianRational):
            if x.im != 0:
                raise ValueError(f"{x!r} is not rational")
            return x.re
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into QQ")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def div(a, b):
        return Fraction(a) / b

    @staticmethod
    def inv(a):
        return Fraction(1) / a

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def is_one(a):
        return a == 1

    def __repr__(self):
        return "QQ"


class GaussianRationals:
    """The field Q(i)."""

    char = 0
    name = "QQi"

    zero = GaussianRational(0)
    one = GaussianRational(1)
    i = GaussianRational(0, 1)

    @staticmethod
    def coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into QQ(i)")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def div(a, b):
        return _coerce_gauss(a) / b

    @staticmethod
    def inv(a):
        return GaussianRational(1) / a

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def is_one(a):
        return a == GaussianRationals.one

    @staticmethod
    def conj(a):
        return _coerce_gauss(a).conjugate()

    def __repr__(self):
        return "QQ(i)"


class PrimeField:
    """GF(p); elements are plain ints reduced into [0, p)."""

    name = "GF"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        p = self.p
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(den, p - 2, p) % p
        raise TypeError(f"cannot coerce {type(x).__name__} into GF({p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def is_one(a):
        return a == 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = Rationals()
QQI = GaussianRationals()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    f = _GF_CACHE.get(p)
    if f is None:
        f = _GF_CACHE[p] = PrimeField(p)
    return f


# ---------------------------------------------------------------------------
# Primality and the deterministic prime pool
# ---------------------------------------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_pool(count: int, skip=(), start: int = (1 << 63) - 1):
    """Deterministic descending sequence of primes just below 2**63.

    Primes dividing any integer in `skip` are omitted, so callers can
    exclude primes that divide input denominators or leading data.
    """
    out = []
    n = start
    skip = [abs(s) for s in skip if s]
    while len(out) < count:
        while not is_prime(n):
            n -= 2 if n % 2 else 1
        if all(s % n for s in skip):
            out.append(n)
        n -= 2
    return out


# ---------------------------------------------------------------------------
# CRT and rational reconstruction
# ---------------------------------------------------------------------------


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x=r1 mod m1, x=r2 mod m2 for coprime moduli."""
    g, s, _ = _xgcd(m1, m2)
    if g != 1:
        raise ValueError("moduli are not coprime")
    m = m1 * m2
    x = (r1 + (r2 - r1) * s % m2 * m1) % m
    return x, m


def crt_list(residues, moduli) -> tuple[int, int]:
    """Combine residues across pairwise-coprime moduli; returns (x, prod)."""
    x, m = residues[0] % moduli[0], moduli[0]
    for r, q in zip(residues[1:], moduli[1:]):
        x, m = crt_pair(x, m, r, q)
    return x, m


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def rational_reconstruct(r: int, m: int) -> Fraction | None:
    """Wang's algorithm: the unique n/d = r mod m with |n|, d <= sqrt(m/2).

    Returns None when no such fraction exists.
    """
    r %= m
    bound = isqrt(m // 2)
    if r <= bound:
        return Fraction(r)
    r0, t0 = m, 0
    r1, t1 = r, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    n, d = r1, t1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > bound or gcd(n, d) != 1 or gcd(d, m) != 1:
        return None
    return Fraction(n, d)


def crt_reconstruct(residues, moduli) -> Fraction:
    """Reconstruct the exact rational matching all residues, or raise.

    Each residue is taken modulo the corresponding prime; the result is the
    unique rational with numerator and denominator below sqrt(prod/2).
    Raises ReconstructFailed when the modulus product is too small.
    """
    x, m = crt_list([int(r) for r in residues], list(moduli))
    for cand in (x, x - m):
        # small signed integers are their own reconstruction
        if abs(cand) <= isqrt(m // 2):
            return Fraction(cand)
    q = rational_reconstruct(x, m)
    if q is None:
        raise ReconstructFailed(
            f"no rational below sqrt({m}/2) matches the residues; add primes"
        )
    return q
