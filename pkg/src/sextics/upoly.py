"""Dense univariate polynomials over an exact domain.

Coefficients are stored lowest degree first with no trailing zeros.  The
heavy integer kernels (primitive PRS gcd, subresultant resultant, Sturm
chains) operate on plain int lists; the public operations accept
polynomials over Q, Q(i) or GF(p) and route accordingly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import NotSquarefree
from .scalars import QQ, QQI, GaussianRational, PrimeField

# ---------------------------------------------------------------------------
# Integer-list kernels
# ---------------------------------------------------------------------------


def _strip(c):
    while c and not c[-1]:
        c.pop()
    return c


def _int_content(c) -> int:
    g = 0
    for a in c:
        g = int_gcd(g, a)
        if g == 1:
            break
    return g


def _int_primitive(c):
    """Divide by the positive content; preserves signs."""
    g = _int_content(c)
    if g <= 1:
        return list(c)
    return [a // g for a in c]


def _int_prem(a, b):
    """Pseudo-remainder: lc(b)^(da-db+1) * a mod b, over Z."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    da = len(a) - 1
    mult = lb ** (da - db + 1)
    r = [x * mult for x in a]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        q, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("pseudo-division was not exact")
        shift = dr - db
        for i, bi in enumerate(b):
            r[shift + i] -= q * bi
        _strip(r)
    return r


def _int_gcd_poly(a, b):
    """Primitive PRS gcd over Z; result primitive with positive lc."""
    a = _int_primitive(_strip(list(a)))
    b = _int_primitive(_strip(list(b)))
    if not a:
        return _pos_lc(b)
    if not b:
        return _pos_lc(a)
    if len(a) < len(b):
        a, b = b, a
    while b:
        da, db = len(a) - 1, len(b) - 1
        lb = b[-1]
        mult = lb ** (da - db + 1)
        r = [x * mult for x in a]
        while len(r) - 1 >= db and r:
            dr = len(r) - 1
            q = r[-1] // lb
            shift = dr - db
            for i, bi in enumerate(b):
                r[shift + i] -= q * bi
            _strip(r)
        a, b = b, _int_primitive(r)
    return _pos_lc(a)


def _pos_lc(c):
    if c and c[-1] < 0:
        return [-x for x in c]
    return list(c)


def _int_resultant(a, b) -> int:
    """Resultant over Z by the subresultant PRS (Cohen, Alg. 3.3.7)."""
    a = _strip(list(a))
    b = _strip(list(b))
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if db > da:
        if (da & 1) and (db & 1):
            s = -1
        a, b = b, a
        da, db = db, da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            s = -s
        r = _int_prem(a, b)
        a = b
        div = g * h**delta
        b = [x // div for x in r]
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if not b:
            return 0
        if len(b) - 1 <= 0:
            break
    da = len(a) - 1
    return s * (b[0] ** da // h ** (da - 1))


def _int_sturm_chain(f):
    """Sturm chain of a primitive integer polynomial, sign-exact."""
    chain = [_int_primitive(f)]
    d1 = [i * c for i, c in enumerate(f)][1:]
    _strip(d1)
    if d1:
        chain.append(_int_primitive(d1))
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        da, db = len(a) - 1, len(b) - 1
        lb = b[-1]
        # remainder of a by b equals prem(a,b) / lb^(da-db+1); the chain
        # needs -rem up to positive scaling, so fix the sign of the divisor
        r = _int_prem(a, b)
        if lb < 0 and (da - db + 1) % 2:
            r = [-x for x in r]
        r = [-x for x in r]
        if not r:
            break
        chain.append(_int_primitive(r))
    return chain


def _sign_variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _int_sturm_count(f) -> int:
    chain = _int_sturm_chain(f)
    at_pos = [1 if c[-1] > 0 else -1 for c in chain]
    at_neg = [
        s if (len(c) - 1) % 2 == 0 else -s for s, c in zip(at_pos, chain)
    ]
    return _sign_variations(at_neg) - _sign_variations(at_pos)


# ---------------------------------------------------------------------------
# UPoly
# ---------------------------------------------------------------------------


class UPoly:
    """Univariate polynomial over a domain (QQ, QQI or a PrimeField)."""

    __slots__ = ("dom", "coeffs", "var")

    def __init__(self, coeffs, dom=QQ, var="t"):
        self.dom = dom
        self.var = var
        cs = [dom.coerce(c) for c in coeffs]
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dom=QQ, var="t"):
        return cls([], dom, var)

    @classmethod
    def from_roots(cls, roots, dom=QQ, var="t"):
        f = cls([1], dom, var)
        for r in roots:
            f = f * cls([dom.neg(dom.coerce(r)), dom.one], dom, var)
        return f

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            return self.dom.zero
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.dom.zero

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.dom.is_zero(c):
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{i}")
        return " + ".join(parts)

    # -- arithmetic -------------------------------------------------------

    def _new(self, coeffs):
        return UPoly(coeffs, self.dom, self.var)

    def __add__(self, other):
        other = self._co(other)
        n = max(len(self.coeffs), len(other.coeffs))
        add, z = self.dom.add, self.dom.zero
        a, b = self.coeffs, other.coeffs
        return self._new(
            [
                add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
                for i in range(n)
            ]
        )

    def __sub__(self, other):
        other = self._co(other)
        return self + (-other)

    def __neg__(self):
        neg = self.dom.neg
        return self._new([neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            c = self.dom.coerce(other)
            mul = self.dom.mul
            return self._new([mul(a, c) for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new([])
        add, mul, z = self.dom.add, self.dom.mul, self.dom.zero
        out = [z] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if self.dom.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = add(out[i + j], mul(ai, bj))
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self._new([self.dom.one])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _co(self, other):
        if isinstance(other, UPoly):
            return other
        return self._new([self.dom.coerce(other)])

    def divmod(self, other: "UPoly"):
        """Quotient and remainder over the coefficient field."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        dom = self.dom
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lb = dom.inv(b[-1])
        q = [dom.zero] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            dr = len(r) - 1
            c = dom.mul(r[-1], inv_lb)
            q[dr - db] = c
            for i in range(db + 1):
                r[dr - db + i] = dom.sub(r[dr - db + i], dom.mul(c, b[i]))
            while r and dom.is_zero(r[-1]):
                r.pop()
        return self._new(q), self._new(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = self.dom.inv(self.lc)
        mul = self.dom.mul
        return self._new([mul(c, inv) for c in self.coeffs])

    def derivative(self) -> "UPoly":
        mul = self.dom.mul
        dom = self.dom
        return self._new(
            [mul(dom.coerce(i), c) for i, c in enumerate(self.coeffs)][1:]
        )

    def __call__(self, x):
        acc = self.dom.zero
        add, mul = self.dom.add, self.dom.mul
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = self._new([])
        for c in reversed(self.coeffs):
            acc = acc * inner + self._new([c])
        return acc

    def map_domain(self, dom):
        """Reinterpret the coefficients in another domain."""
        return UPoly([dom.coerce(c) for c in self.coeffs], dom, self.var)

    # -- integer scaling (QQ only) ----------------------------------------

    def primitive_int(self):
        """Return (list of ints, content) with self = content * int poly."""
        if self.dom is not QQ:
            raise TypeError("primitive_int requires rational coefficients")
        if not self.coeffs:
            return [], Fraction(0)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = _int_content(ints)
        if ints[-1] < 0:
            g = -g
        return [a // g for a in ints], Fraction(g, den)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if f.dom is QQ and g.dom is QQ:
        a, _ = f.primitive_int() if not f.is_zero() else ([], None)
        b, _ = g.primitive_int() if not g.is_zero() else ([], None)
        h = _int_gcd_poly(a, b)
        return UPoly(h, QQ, f.var).monic()
    # generic Euclid over a field
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f: UPoly) -> UPoly:
    g = upoly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f.monic()
    return f.exact_div(g).monic()


def is_squarefree(f: UPoly) -> bool:
    return upoly_gcd(f, f.derivative()).degree <= 0


def sturm_count(f: UPoly) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    if f.is_zero():
        raise ValueError("sturm_count requires a nonzero polynomial")
    if f.dom is not QQ:
        raise TypeError("sturm_count is defined over QQ")
    if f.degree == 0:
        return 0
    ints, _ = f.primitive_int()
    if _int_gcd_poly(ints, _strip([i * c for i, c in enumerate(ints)][1:]))[
        1:
    ]:
        raise NotSquarefree(f"{f} has a repeated root")
    return _int_sturm_count(ints)


def resultant_univ(f: UPoly, g: UPoly):
    """Resultant of two univariate polynomials over their common domain."""
    dom = f.dom
    if dom is QQ:
        if f.is_zero() or g.is_zero():
            return Fraction(0)
        fi, cf = f.primitive_int()
        gi, cg = g.primitive_int()
        r = _int_resultant(fi, gi)
        return cf**g.degree * cg**f.degree * Fraction(r)
    # generic PRS over a field via Euclidean remainders
    if f.is_zero() or g.is_zero():
        return dom.zero
    a, b = f, g
    res = dom.one
    sign = 1
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return dom.zero
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        res = dom.mul(res, _dom_pow(dom, b.lc, a.degree - r.degree))
        a, b = b, r
    res = dom.mul(res, _dom_pow(dom, b.lc, a.degree))
    if sign < 0:
        res = dom.neg(res)
    return res


def _dom_pow(dom, a, k):
    out = dom.one
    for _ in range(k):
        out = dom.mul(out, a)
    return out


def discriminant(f: UPoly):
    """Discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff repeated root."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    r = resultant_univ(f, f.derivative())
    r = f.dom.div(r, f.lc)
    if (n * (n - 1) // 2) % 2:
        r = f.dom.neg(r)
    return r


def perfect_square_root(f: UPoly) -> UPoly | None:
    """If f = c * g^2 for a cubic g and a positive rational c, return monic g.

    This is the projective square test used on binary sextics: normalize f
    monic and solve for the cubic's coefficients top-down, then verify the
    three remaining coefficient identities exactly.
    """
    if f.is_zero() or f.degree != 6:
        return None
    if f.dom is QQ and f.lc < 0:
        return None
    F = f.monic().coeffs
    dom = f.dom
    half = dom.div(dom.one, dom.coerce(2))
    g2 = dom.mul(F[5], half)
    g1 = dom.mul(dom.sub(F[4], dom.mul(g2, g2)), half)
    g0 = dom.mul(
        dom.sub(F[3], dom.mul(dom.coerce(2), dom.mul(g2, g1))), half
    )
    ok = (
        F[2] == dom.add(dom.mul(g1, g1), dom.mul(dom.coerce(2), dom.mul(g2, g0)))
        and F[1] == dom.mul(dom.coerce(2), dom.mul(g1, g0))
        and F[0] == dom.mul(g0, g0)
    )
    if not ok:
        return None
    return UPoly([g0, g1, g2, dom.one], dom, f.var)


def real_certify(f: UPoly, var: str | None = None) -> UPoly:
    """Assert a Q(i) polynomial has real coefficients and return it over QQ."""
    if f.dom is QQ:
        return f
    coeffs = []
    for c in f.coeffs:
        if isinstance(c, GaussianRational):
            if c.im != 0:
                raise ArithmeticError(f"coefficient {c!r} is not real")
            coeffs.append(c.re)
        else:
            coeffs.append(Fraction(c))
    return UPoly(coeffs, QQ, f.var)
