"""
Exact scalars: rational numbers and elements of cyclotomic fields Q(zeta_n).

Rationals are plain `fractions.Fraction`.  A `Cyc` is a rational combination
of powers of a primitive n-th root of unity, stored in canonical form on the
power basis 1, z, ..., z^(deg-1) after reduction modulo the n-th cyclotomic
polynomial, so equality is decidable.  The order n is fixed per instance and
mixing orders raises.

>>> z = Cyc.root_of_unity(4)
>>> z * z
Cyc(4, [-1])
>>> (z + 1) * (z - 1)
Cyc(4, [-2])
>>> 1 / z == -z
True
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Fraction", "frac", "Cyc", "as_scalar", "scalar_str", "cyclotomic_poly"]


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, little-endian coefficient lists
# ---------------------------------------------------------------------------

def poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Exact division with remainder in Q[x]."""
    q = poly_trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    poly_trim(r)
    quo = [Fraction(0)] * max(0, len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q):
        c = r[-1] / lead
        d = len(r) - len(q)
        quo[d] = c
        for i, b in enumerate(q):
            r[i + d] -= c * b
        poly_trim(r)
    return poly_trim(quo), r


def poly_gcd(p, q):
    a, b = poly_trim(list(p)), poly_trim(list(q))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_ext_gcd(p, q):
    """Return (g, u, v) with u*p + v*q = g, g monic."""
    a, b = poly_trim(list(p)), poly_trim(list(q))
    ua, va = [Fraction(1)], []
    ub, vb = [], [Fraction(1)]
    while b:
        quo, r = poly_divmod(a, b)
        a, b = b, r
        ua, ub = ub, poly_trim([x - y for x, y in _zip_pad(ua, poly_mul(quo, ub))])
        va, vb = vb, poly_trim([x - y for x, y in _zip_pad(va, poly_mul(quo, vb))])
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
        ua = [c / lead for c in ua]
        va = [c / lead for c in va]
    return a, ua, va


def _zip_pad(p, q):
    n = max(len(p), len(q))
    p = p + [Fraction(0)] * (n - len(p))
    q = q + [Fraction(0)] * (n - len(q))
    return zip(p, q)


_CYCLO_CACHE: dict[int, list[Fraction]] = {}


def cyclotomic_poly(n: int) -> list[Fraction]:
    """Coefficients of the n-th cyclotomic polynomial (little-endian).

    >>> cyclotomic_poly(4)
    [Fraction(1, 1), Fraction(0, 1), Fraction(1, 1)]
    """
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = poly_mul(den, cyclotomic_poly(d))
    quo, rem = poly_divmod(num, den)
    assert not rem, "cyclotomic polynomial division must be exact"
    _CYCLO_CACHE[n] = quo
    return quo


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------

class Cyc:
    """An element of Q(zeta_n) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        phi = cyclotomic_poly(order)
        deg = len(phi) - 1
        cs = [frac(c) for c in coeffs]
        if len(cs) >= len(phi):
            _, cs = poly_divmod(cs, phi)
        cs = cs + [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs[:deg]))

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "Cyc":
        power %= order
        return cls(order, [Fraction(0)] * power + [Fraction(1)])

    @classmethod
    def from_rational(cls, order: int, value) -> "Cyc":
        return cls(order, [frac(value)])

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc(self.order, [frac(other)])
        return None

    # -- ring structure ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc(self.order, poly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = cyclotomic_poly(self.order)
        g, u, _ = poly_ext_gcd(poly_trim(list(self.coeffs)), phi)
        if len(g) != 1:
            raise ZeroDivisionError("non-invertible cyclotomic representative")
        return Cyc(self.order, [c / g[0] for c in u])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, m: int):
        if m < 0:
            return self.inverse() ** (-m)
        out = Cyc(self.order, [1])
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.order, self.coeffs))

    def __repr__(self):
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not nz:
            return f"Cyc({self.order}, [0])"
        top = max(i for i, _ in nz)
        return f"Cyc({self.order}, {[str(c) for c in list(self.coeffs)[:top + 1]]})".replace("'", "")

    def __str__(self):
        return scalar_str(self)


def as_scalar(value, order: int | None = None):
    """Lift a number to the scalar field of a given cyclotomic order.

    Order None or 1 means plain rationals.
    """
    if order is None or order == 1:
        if isinstance(value, Cyc):
            return value.rational_value()
        return frac(value)
    if isinstance(value, Cyc):
        if value.order != order:
            raise ValueError(f"scalar of order {value.order}, expected {order}")
        return value
    return Cyc(order, [frac(value)])


def scalar_str(value) -> str:
    """Canonical text form: rationals as 'p/q', cyclotomics on powers of z."""
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, Cyc):
        if value.is_rational():
            return str(value.rational_value())
        parts = []
        for i, c in enumerate(value.coeffs):
            if c == 0:
                continue
            mon = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{c}*{mon}")
        return "+".join(parts).replace("+-", "-")
    raise TypeError(f"not a scalar: {value!r}")


if __name__ == "__main__":
    import doctest

    doctest.testmod()
