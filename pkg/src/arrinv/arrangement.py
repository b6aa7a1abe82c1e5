"""Central hyperplane arrangements with exact integer defining forms.

An arrangement is an ordered list of pairwise non-proportional canonical
linear forms in K^ell (K = Q throughout).  The three basic constructions
are deletion, restriction onto a hyperplane (with a recorded integral
coordinate chart), and localization at a flat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import (DuplicateHyperplane, IndexOutOfRange, MalformedInput,
                     NotAFlat, UnknownName, UnsupportedField, ZeroForm)
from .linalg import in_row_span, integer_rank, integer_rref
from .mvpoly import MultiPoly


def canonical_form(coeffs):
    """Content-1 integer form whose first nonzero entry is positive."""
    coeffs = tuple(int(c) for c in coeffs)
    if not any(coeffs):
        raise ZeroForm("zero linear form")
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    coeffs = tuple(c // g for c in coeffs)
    for c in coeffs:
        if c:
            if c < 0:
                coeffs = tuple(-v for v in coeffs)
            break
    return coeffs


@dataclass(frozen=True)
class RestrictionChart:
    """Integral chart on the hyperplane alpha = 0.

    The pivot coordinate (first nonzero entry of alpha) is eliminated; the
    remaining coordinates, in order, parametrize H.  A form beta on K^ell
    maps to the form on H with coefficients a_k*beta_i - beta_k*a_i over
    the kept coordinates i (k = pivot), which clears denominators.
    """
    alpha: tuple
    pivot: int

    @property
    def kept(self):
        return tuple(i for i in range(len(self.alpha)) if i != self.pivot)

    def image(self, beta):
        """Integer (possibly zero/unnormalized) image of beta on H."""
        a, k = self.alpha, self.pivot
        return tuple(a[k] * beta[i] - beta[k] * a[i] for i in self.kept)

    def substitution(self):
        """x_pivot as a rational combination of the kept coordinates."""
        a, k = self.alpha, self.pivot
        return [(-a[i], a[k]) for i in self.kept]


class Arrangement:
    """Immutable central arrangement."""

    __slots__ = ("ell", "forms", "label", "chart")

    def __init__(self, ell, forms, label=None, chart=None,
                 _skip_checks=False):
        if ell < 1:
            raise MalformedInput("ambient dimension must be >= 1")
        canon = []
        for f in forms:
            if len(f) != ell:
                raise MalformedInput("form %r has wrong length" % (f,))
            cf = canonical_form(f)
            if not _skip_checks and cf in canon:
                raise DuplicateHyperplane(
                    "proportional forms %r" % (f,))
            canon.append(cf)
        self.ell = ell
        self.forms = tuple(canon)
        self.label = label
        self.chart = chart  # set on restrictions

    # -- basic queries -------------------------------------------------------
    def __len__(self):
        return len(self.forms)

    def __eq__(self, other):
        return (isinstance(other, Arrangement)
                and self.ell == other.ell and self.forms == other.forms)

    def __hash__(self):
        return hash((self.ell, self.forms))

    def canonical_key(self):
        """Order-independent identity used for memo tables."""
        return (self.ell, tuple(sorted(self.forms)))

    def rank(self):
        return integer_rank([list(f) for f in self.forms])

    def __repr__(self):
        name = self.label or "arrangement"
        return "<%s: %d forms in K^%d>" % (name, len(self.forms), self.ell)

    # -- constructions ---------------------------------------------------------
    def _check_index(self, h):
        if not 0 <= h < len(self.forms):
            raise IndexOutOfRange("hyperplane index %d out of range" % h)

    def delete(self, h):
        self._check_index(h)
        forms = self.forms[:h] + self.forms[h + 1:]
        return Arrangement(self.ell, forms, _skip_checks=True)

    def add(self, form):
        """New arrangement with `form` appended (must be new)."""
        return Arrangement(self.ell, self.forms + (canonical_form(form),))

    def restriction_chart(self, h):
        self._check_index(h)
        alpha = self.forms[h]
        pivot = next(i for i, c in enumerate(alpha) if c)
        return RestrictionChart(alpha, pivot)

    def restrict(self, h):
        """Restriction onto the h-th hyperplane, in the recorded chart."""
        if self.ell == 1:
            raise MalformedInput("cannot restrict a rank-1 ambient space")
        chart = self.restriction_chart(h)
        images = []
        for j, beta in enumerate(self.forms):
            if j == h:
                continue
            img = chart.image(beta)
            cf = canonical_form(img)
            if cf not in images:
                images.append(cf)
        out = Arrangement(self.ell - 1, images, _skip_checks=True)
        out.chart = chart
        return out

    def restricted_multiplicities(self, h):
        """Canonical image -> multiplicity over the other hyperplanes."""
        chart = self.restriction_chart(h)
        mult = {}
        for j, beta in enumerate(self.forms):
            if j == h:
                continue
            cf = canonical_form(chart.image(beta))
            mult[cf] = mult.get(cf, 0) + 1
        return mult

    def localize(self, flat_rows):
        """Subarrangement of forms vanishing on the flat.

        `flat_rows` is a basis (rows of integers) of the span of forms
        defining the flat; it must be an actual flat of the lattice.
        """
        rows, r = integer_rref([list(x) for x in flat_rows])
        keep = [f for f in self.forms if in_row_span(rows, f)]
        closure, rc = integer_rref([list(f) for f in keep])
        if rc != r or closure != rows:
            raise NotAFlat("subspace is not a flat of the arrangement")
        return Arrangement(self.ell, keep, _skip_checks=True)

    def q_polynomial(self):
        """Q(A): the product of the defining forms."""
        q = MultiPoly.constant(self.ell, 1)
        for f in self.forms:
            q = q * MultiPoly.from_linear(f)
        return q


@dataclass
class BPolynomial:
    """Residue of Terao's polynomial B on the restricted hyperplane.

    Stored as linear factors with multiplicities in the restriction chart
    coordinates; degree = |A'| - |A^H|.
    """
    factors: list  # list of (canonical form on H, exponent >= 1)
    degree: int
    chart: RestrictionChart = None

    def as_multipoly(self, nvars):
        p = MultiPoly.constant(nvars, 1)
        for form, e in self.factors:
            lf = MultiPoly.from_linear(form)
            for _ in range(e):
                p = p * lf
        return p


def b_polynomial(arr, h):
    """B-bar = Q(A') restricted to H, divided by Q(A^H)."""
    mult = arr.restricted_multiplicities(h)
    factors = [(form, m - 1) for form, m in sorted(mult.items()) if m > 1]
    degree = sum(e for _, e in factors)
    assert degree == (len(arr) - 1) - len(mult)
    return BPolynomial(factors, degree, arr.restriction_chart(h))


# -----------------------------------------------------------------------------
# Parsing

def parse_arrangement(text, label=None):
    """Parse the plain-text arrangement format.

    '#' comment lines, a 'dim <ell>' line, then one row of ell integers
    per hyperplane.  An optional 'field Q' line is accepted; any other
    field is rejected.
    """
    ell = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim":
            if ell is not None:
                raise MalformedInput("line %d: repeated dim" % lineno)
            try:
                ell = int(parts[1])
            except (IndexError, ValueError):
                raise MalformedInput("line %d: bad dim line" % lineno)
            if ell < 1:
                raise MalformedInput("line %d: dim must be >= 1" % lineno)
            continue
        if parts[0] == "field":
            if len(parts) != 2 or parts[1].upper() not in ("Q", "0"):
                raise UnsupportedField(
                    "line %d: only characteristic 0 (Q) is supported"
                    % lineno)
            continue
        if ell is None:
            raise MalformedInput("line %d: row before dim line" % lineno)
        try:
            coeffs = [int(tok) for tok in parts]
        except ValueError:
            raise MalformedInput("line %d: non-integer entry" % lineno)
        if len(coeffs) != ell:
            raise MalformedInput(
                "line %d: expected %d entries, got %d"
                % (lineno, ell, len(coeffs)))
        rows.append(coeffs)
    if ell is None:
        raise MalformedInput("missing dim line")
    return Arrangement(ell, rows, label=label)


def format_arrangement(arr):
    lines = ["dim %d" % arr.ell]
    lines += [" ".join(str(c) for c in f) for f in arr.forms]
    return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# Built-in arrangements

_X3_ROWS = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1),
]


def builtin(name):
    """Named arrangements: boolean(l), generic_plus_one(l), x3, x3_h_y,
    x3_h_x, three_generic.  booleanN / generic_plus_oneN also accepted."""
    name = name.strip().lower().replace(" ", "")
    if name == "x3":
        return Arrangement(4, _X3_ROWS, label="x3")
    if name == "x3_h_y":
        rows = [r for r in _X3_ROWS if r != (0, 1, 0, 0)]
        return Arrangement(4, rows, label="x3_h_y")
    if name == "x3_h_x":
        rows = [r for r in _X3_ROWS if r != (1, 0, 0, 0)]
        return Arrangement(4, rows, label="x3_h_x")
    if name == "three_generic":
        return Arrangement(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)],
                           label="three_generic")
    for prefix, builder in (("boolean", _boolean),
                            ("generic_plus_one", _generic_plus_one)):
        if name.startswith(prefix):
            tail = name[len(prefix):].strip("()")
            try:
                ell = int(tail)
            except ValueError:
                raise UnknownName("bad dimension in %r" % name)
            if ell < 1:
                raise UnknownName("dimension must be >= 1 in %r" % name)
            return builder(ell)
    raise UnknownName("unknown builtin arrangement %r" % name)


def _boolean(ell):
    rows = []
    for i in range(ell):
        r = [0] * ell
        r[i] = 1
        rows.append(r)
    return Arrangement(ell, rows, label="boolean(%d)" % ell)


def _generic_plus_one(ell):
    arr = _boolean(ell)
    return Arrangement(ell, list(arr.forms) + [[1] * ell],
                       label="generic_plus_one(%d)" % ell)


def concurrent_lines(n):
    """n distinct lines through the origin of K^2: x, y, x+y, x+2y, ..."""
    if n < 1:
        raise UnknownName("need at least one line")
    rows = [(1, 0)]
    if n >= 2:
        rows.append((0, 1))
    for k in range(1, n - 1):
        rows.append((1, k))
    return Arrangement(2, rows, label="concurrent(%d)" % n)
