"""Exact bivariate polynomials in Q[x, t] and truncated series in x.

Coefficients are `fractions.Fraction`; polynomials are sparse maps from
(x_degree, t_degree) to nonzero coefficients.  Zero coefficients are never
stored, so equality is plain dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


class BivariatePolynomial:
    """Sparse exact polynomial in x and t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                c = _frac(c)
                if c:
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent")
                    clean[(i, j)] = c
        self.coeffs = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): _frac(c)})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): _frac(c)})

    @classmethod
    def x(cls, power=1):
        return cls.monomial(power, 0)

    @classmethod
    def t(cls, power=1):
        return cls.monomial(0, power)

    # -- ring structure ----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = BivariatePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _coerce(v):
        if isinstance(v, BivariatePolynomial):
            return v
        return BivariatePolynomial.constant(v)

    # -- queries -----------------------------------------------------------
    def is_zero(self):
        return not self.coeffs

    def coeff(self, i, j) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    @property
    def degree_x(self):
        return max((i for i, _ in self.coeffs), default=-1)

    @property
    def degree_t(self):
        return max((j for _, j in self.coeffs), default=-1)

    def coeff_of_t(self, j):
        """The x-polynomial multiplying t**j."""
        return BivariatePolynomial(
            {(i, 0): c for (i, jj), c in self.coeffs.items() if jj == j})

    def coeff_of_x(self, i):
        return BivariatePolynomial(
            {(0, j): c for (ii, j), c in self.coeffs.items() if ii == i})

    def substitute(self, var, value) -> "BivariatePolynomial":
        """Substitute a rational value for 'x' or 't'."""
        value = _frac(value)
        out = {}
        for (i, j), c in self.coeffs.items():
            if var == "x":
                k, e = (0, j), i
            elif var == "t":
                k, e = (i, 0), j
            else:
                raise ValueError("var must be 'x' or 't'")
            s = out.get(k, 0) + c * value ** e
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BivariatePolynomial(out)

    def truncate_x(self, cutoff):
        return BivariatePolynomial(
            {k: c for k, c in self.coeffs.items() if k[0] <= cutoff})

    def x_coefficient_list(self):
        """Coefficients c_0..c_deg as Fractions; requires a pure x-polynomial."""
        if self.degree_t > 0:
            raise ValueError("polynomial involves t")
        return [self.coeff(i, 0) for i in range(self.degree_x + 1)]

    # -- identity ------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            if isinstance(other, (int, Fraction)):
                other = BivariatePolynomial.constant(other)
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- serialization ---------------------------------------------------------
    def to_json(self):
        """Sorted triple list [[i, j, "p/q"], ...]."""
        out = []
        for (i, j) in sorted(self.coeffs):
            out.append([i, j, str(self.coeffs[(i, j)])])
        return out

    @classmethod
    def from_json(cls, triples):
        coeffs = {}
        for i, j, s in triples:
            coeffs[(int(i), int(j))] = Fraction(s)
        return cls(coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            part = str(c)
            if i:
                part += "*x^%d" % i if i > 1 else "*x"
            if j:
                part += "*t^%d" % j if j > 1 else "*t"
            terms.append(part)
        return " + ".join(terms)


ZERO = BivariatePolynomial.zero()
ONE = BivariatePolynomial.constant(1)
X = BivariatePolynomial.x()
T = BivariatePolynomial.t()


def poly_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


def poly_substitute(p, var, value):
    return p.substitute(var, value)


def geometric_sum(d):
    """1 + x + ... + x^(d-1); the empty sum (d=0) is 0."""
    return BivariatePolynomial({(i, 0): 1 for i in range(d)})


class TruncatedSeries:
    """Power series in x truncated at a cutoff; entries are t-polynomials."""

    __slots__ = ("entries", "cutoff")

    def __init__(self, entries, cutoff=None):
        entries = [BivariatePolynomial._coerce(e) for e in entries]
        if cutoff is None:
            cutoff = len(entries) - 1
        if cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        entries = entries[:cutoff + 1]
        entries += [ZERO] * (cutoff + 1 - len(entries))
        for e in entries:
            if e.degree_x > 0:
                raise ValueError("series entries must be polynomials in t")
        self.entries = entries
        self.cutoff = cutoff

    @classmethod
    def from_polynomial(cls, p, cutoff):
        entries = [p.coeff_of_x(i) for i in range(cutoff + 1)]
        # coeff_of_x returns t-polynomials already
        return cls(entries, cutoff)

    def __add__(self, other):
        n = min(self.cutoff, other.cutoff)
        return TruncatedSeries(
            [self.entries[i] + other.entries[i] for i in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.cutoff, other.cutoff)
        return TruncatedSeries(
            [self.entries[i] - other.entries[i] for i in range(n + 1)], n)

    def mul_poly(self, p):
        """Multiply by a bivariate polynomial, truncating at the cutoff."""
        out = [ZERO] * (self.cutoff + 1)
        for (i, j), c in p.coeffs.items():
            mono = BivariatePolynomial.monomial(0, j, c)
            for d in range(self.cutoff + 1 - i):
                if self.entries[d].is_zero():
                    continue
                out[d + i] = out[d + i] + self.entries[d] * mono
        return TruncatedSeries(out, self.cutoff)

    def coefficient(self, d):
        return self.entries[d]

    def rational_coefficients(self):
        """Entries as Fractions; requires all entries free of t."""
        return [e.coeff(0, 0) if e.degree_t <= 0 else _raise_t(e)
                for e in self.entries]

    def to_polynomial(self):
        out = {}
        for d, e in enumerate(self.entries):
            for (_, j), c in e.coeffs.items():
                out[(d, j)] = c
        return BivariatePolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.entries == other.entries

    def __repr__(self):
        return "TruncatedSeries(%r, cutoff=%d)" % (self.entries, self.cutoff)


def _raise_t(e):
    raise ValueError("series entry involves t: %r" % (e,))


def series_from_rational(numerator, ell, cutoff):
    """Truncated expansion of numerator(x) / (1-x)**ell.

    The coefficient of x^d is sum_k numerator_k * C(d-k+ell-1, ell-1); for
    ell = 0 the series is the numerator itself.
    """
    if ell < 0 or cutoff < 0:
        raise ValueError("ell and cutoff must be nonnegative")
    if numerator.degree_t > 0:
        raise ValueError("numerator must be a polynomial in x only")
    entries = []
    for d in range(cutoff + 1):
        acc = Fraction(0)
        for (k, _), c in numerator.coeffs.items():
            if k > d:
                continue
            if ell == 0:
                acc += c if k == d else 0
            else:
                acc += c * comb(d - k + ell - 1, ell - 1)
        entries.append(BivariatePolynomial.constant(acc))
    return TruncatedSeries(entries, cutoff)
