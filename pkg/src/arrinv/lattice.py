"""Intersection lattice, Moebius function and characteristic polynomial.

Flats are intersections of subfamilies of hyperplanes, identified by the
bitset of all hyperplanes containing them.  The lattice is ordered by
reverse inclusion of subspaces, so the ambient space is the bottom
element and bitset containment detects the order: X <= Y in L(A) exactly
when bitset(X) is a subset of bitset(Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAFlat
from .linalg import in_row_span, integer_rref


@dataclass(frozen=True)
class Flat:
    bitset: int        # bit j set <=> hyperplane j contains the flat
    codim: int
    rows: tuple        # canonical integer RREF basis of the form span

    def indices(self):
        out, b, j = [], self.bitset, 0
        while b:
            if b & 1:
                out.append(j)
            b >>= 1
            j += 1
        return tuple(out)

    def contains(self, other):
        """True if self >= other as subspaces, i.e. self <= other in L."""
        return self.bitset & other.bitset == self.bitset


class FlatLattice:
    """All flats of a central arrangement, grouped by codimension."""

    def __init__(self, arr):
        self.arrangement = arr
        self.levels = _build_levels(arr)
        self.by_bitset = {f.bitset: f for lv in self.levels for f in lv}
        self._mobius = None

    @property
    def rank(self):
        return len(self.levels) - 1

    def flats(self):
        for lv in self.levels:
            yield from lv

    def flat_of(self, rows):
        """Look up the flat spanned by the given forms."""
        canon, r = integer_rref([list(x) for x in rows])
        for f in self.levels[r] if r < len(self.levels) else ():
            if f.rows == canon:
                return f
        raise NotAFlat("subspace is not in the intersection lattice")

    def closure(self, indices):
        forms = [list(self.arrangement.forms[i]) for i in indices]
        canon, r = integer_rref(forms)
        return self.flat_of_rank(canon, r)

    def flat_of_rank(self, canon, r):
        for f in self.levels[r]:
            if f.rows == canon:
                return f
        raise NotAFlat("closure missing from lattice (internal error)")

    def mobius(self):
        """Moebius values mu(V, X) keyed by bitset."""
        if self._mobius is None:
            mu = {}
            for lv in self.levels:
                for X in lv:
                    if X.codim == 0:
                        mu[X.bitset] = 1
                        continue
                    s = 0
                    for klow in range(X.codim):
                        for Y in self.levels[klow]:
                            if Y.bitset & X.bitset == Y.bitset:
                                s += mu[Y.bitset]
                    mu[X.bitset] = -s
            self._mobius = mu
        return self._mobius

    def characteristic_polynomial(self):
        """Coefficient list of chi(A; t), degree ell, index = power of t."""
        ell = self.arrangement.ell
        mu = self.mobius()
        coeffs = [0] * (ell + 1)
        for f in self.flats():
            coeffs[ell - f.codim] += mu[f.bitset]
        return coeffs

    def betti_numbers(self):
        """b_i = |coefficient of t^(ell-i)| in chi; signs alternate."""
        ell = self.arrangement.ell
        chi = self.characteristic_polynomial()
        return [(-1) ** i * chi[ell - i] for i in range(ell + 1)]

    def poincare_polynomial(self):
        """pi(A; t) = sum b_i t^i = (-t)^ell chi(-1/t)."""
        return self.betti_numbers()

    def localization_indices(self, flat):
        return flat.indices()


def _build_levels(arr):
    forms = arr.forms
    n = len(forms)
    ambient, _ = integer_rref([])
    levels = [[Flat(0, 0, ambient)]]
    frontier = {0: ([], 0)}  # bitset -> (rref rows, rank)
    while True:
        nxt = {}
        for bits, (rows, r) in frontier.items():
            for j in range(n):
                if bits >> j & 1:
                    continue
                newrows, nr = integer_rref(
                    [list(x) for x in rows] + [list(forms[j])])
                if nr != r + 1:
                    continue
                closed = 0
                for i in range(n):
                    if bits >> i & 1 or i == j or in_row_span(
                            newrows, forms[i]):
                        closed |= 1 << i
                if closed not in nxt:
                    nxt[closed] = (newrows, nr)
        if not nxt:
            break
        levels.append([Flat(b, r, rows)
                       for b, (rows, r) in sorted(nxt.items())])
        frontier = nxt
    return levels


def char_poly_as_factors(coeffs):
    """Try to split coeffs (low-to-high in t) into (t - d_i) factors.

    Returns the sorted list of nonnegative integer roots with
    multiplicity, or None if the polynomial does not split that way.
    """
    ell = len(coeffs) - 1
    poly = list(coeffs)
    bound = sum(abs(c) for c in coeffs)
    roots = []
    cand = 0
    while len(poly) > 1 and cand <= bound:
        if sum(c * cand ** k for k, c in enumerate(poly)) == 0:
            # synthetic division by (t - cand)
            new = [0] * (len(poly) - 1)
            carry = poly[-1]
            for k in range(len(poly) - 2, -1, -1):
                new[k] = carry
                carry = poly[k] + carry * cand
            poly = new
            roots.append(cand)
        else:
            cand += 1
    if len(roots) != ell:
        return None
    return sorted(roots)
