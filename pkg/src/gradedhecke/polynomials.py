"""
Exact multivariate polynomials on t + a formal line.

A `Polynomial` lives in a fixed number of variables: the coordinates
x_1..x_d of the space t (one per ambient dimension of the root datum) and a
final variable r.  Exponent vectors are dense tuples, coefficients exact
scalars, and no zero coefficient is ever stored, so `==` is canonical.

The grading doubles the usual one: every variable, x_i and r alike, sits in
degree 2, so a monomial has degree 2 * (sum of its exponents).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import frac, scalar_str

__all__ = ["Polynomial", "divide_by_linear"]


class Polynomial:
    """Sparse polynomial with a fixed variable count (x_1..x_d, r last)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != nvars:
                    raise ValueError(f"exponent {expo} has wrong arity, want {nvars}")
                if coeff == 0:
                    continue
                clean[tuple(expo)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index, coeff=Fraction(1)):
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): coeff})

    @classmethod
    def linear(cls, nvars, coeffs):
        """Linear form sum coeffs[i] * var_i from a coefficient list."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                expo = [0] * nvars
                expo[i] = 1
                terms[tuple(expo)] = c
        return cls(nvars, terms)

    # -- ring operations ------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable bases")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, frac(other) if isinstance(other, (int, str)) else other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, frac(other) if isinstance(other, (int, str)) else other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = terms.get(e, 0) + prod
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Polynomial(self.nvars, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(self.nvars, Fraction(1))
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # -- structure -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == Polynomial.constant(self.nvars, frac(other))
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Graded degree: 2 * total exponent of the largest monomial; zero poly -> -1."""
        if not self.terms:
            return -1
        return 2 * max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        """Split into graded pieces, keyed by degree (2 * total exponent)."""
        comps: dict[int, dict] = {}
        for e, c in self.terms.items():
            comps.setdefault(2 * sum(e), {})[e] = c
        return {d: Polynomial(self.nvars, t) for d, t in sorted(comps.items())}

    def uses_variable(self, index: int) -> bool:
        return any(e[index] for e in self.terms)

    # -- substitution -----------------------------------------------------------
    def substitute_linear(self, images: list["Polynomial"]) -> "Polynomial":
        """Ring map sending var_i to images[i]; images share this basis."""
        out = Polynomial.zero(self.nvars)
        for e, c in self.terms.items():
            mono = Polynomial.constant(self.nvars, c)
            for i, power in enumerate(e):
                if power:
                    mono = mono * images[i] ** power
            out = out + mono
        return out

    def subs_value(self, index: int, value) -> "Polynomial":
        """Substitute an exact scalar for one variable."""
        terms = {}
        for e, c in self.terms.items():
            power = e[index]
            coeff = c if power == 0 else c * (value ** power)
            if coeff == 0:
                continue
            e2 = list(e)
            e2[index] = 0
            e2 = tuple(e2)
            s = terms.get(e2, 0) + coeff
            if s == 0:
                terms.pop(e2, None)
            else:
                terms[e2] = s
        return Polynomial(self.nvars, terms)

    def evaluate(self, point) -> object:
        """Evaluate at a full tuple of scalars (one per variable)."""
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for i, power in enumerate(e):
                if power:
                    val = val * (point[i] ** power)
            total = total + val
        return total

    # -- printing ---------------------------------------------------------------
    def to_string(self, names: list[str]) -> str:
        """Canonical text: monomials sorted by (total degree, exponents) descending."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        parts = []
        for e in keys:
            c = self.terms[e]
            factors = []
            for i, power in enumerate(e):
                if power == 1:
                    factors.append(names[i])
                elif power > 1:
                    factors.append(f"{names[i]}^{power}")
            cs = scalar_str(c)
            if factors:
                body = "*".join(factors)
                if cs == "1":
                    term = body
                elif cs == "-1":
                    term = f"-{body}"
                elif "+" in cs or ("-" in cs[1:]):
                    term = f"({cs})*{body}"
                else:
                    term = f"{cs}*{body}"
            else:
                term = cs if ("+" not in cs) else f"({cs})"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.nvars - 1)] + ["r"]
        return f"Polynomial({self.to_string(names)})"


def divide_by_linear(num: Polynomial, alpha: Polynomial) -> Polynomial:
    """Exact quotient num / alpha for a linear form alpha.

    Long division in a pivot variable of alpha, treating the remaining
    variables as coefficients.  Raises ValueError when the division is not
    exact; for a divided difference built from valid root data that can only
    mean a broken action matrix.
    """
    nvars = num.nvars
    lin = {e: c for e, c in alpha.terms.items()}
    if any(sum(e) != 1 for e in lin):
        raise ValueError("divisor must be a homogeneous linear form")
    pivot = None
    for e, c in sorted(lin.items()):
        pivot = e.index(1)
        pivot_coeff = c
        break
    if pivot is None:
        raise ZeroDivisionError("division by zero form")

    quotient_terms: dict[tuple, object] = {}
    rem = num
    while rem.terms:
        # leading term in the pivot variable
        lead = max(rem.terms, key=lambda e: (e[pivot], e))
        if lead[pivot] == 0:
            raise ValueError(f"nonzero remainder {rem!r}: division by {alpha!r} not exact")
        c = rem.terms[lead] / pivot_coeff
        qe = list(lead)
        qe[pivot] -= 1
        qe = tuple(qe)
        s = quotient_terms.get(qe, 0) + c
        if s == 0:
            quotient_terms.pop(qe, None)
        else:
            quotient_terms[qe] = s
        piece = Polynomial(nvars, {qe: c}) * alpha
        rem = rem - piece
    return Polynomial(nvars, quotient_terms)
