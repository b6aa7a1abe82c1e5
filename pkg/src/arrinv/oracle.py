"""Brute-force graded dimensions of D^p(A) and degreewise sequence checks.

A degree-d element of wedge^p Der S is theta = sum_I f_I dx_I with
f_I in S_d over the p-subsets I of coordinates.  theta lies in D^p(A)
iff for every H and every (p-1)-subset J of coordinate functions the
contraction theta(alpha_H, x_{j_2}, ..., x_{j_p}) is divisible by
alpha_H; checking coordinate functions in the trailing slots suffices
because contractions are multilinear and S-linear in those slots.

Divisibility by alpha = sum a_i x_i with pivot a_k != 0 is encoded by
substituting x_k = -(1/a_k) * sum_{i != k} a_i x_i and scaling the
constraint by a_k^d, which keeps everything in integers.  The kernel
dimension of the assembled matrix is dim D^p(A)_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .arrangement import b_polynomial
from .linalg import kernel_dim, nullspace_exact
from .mvpoly import MultiPoly
from .polyring import BivariatePolynomial, TruncatedSeries, series_from_rational

_DIM_CACHE = {}


def _monomials(nvars, degree):
    """All exponent tuples of the given total degree, lex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def _substitution_row(alpha, pivot, mono, degree):
    """Reduction of x^mono modulo alpha, scaled by a_pivot^degree.

    Returns a dict {kept-variable exponent tuple: integer coefficient}
    over the full variable set with exponent 0 at the pivot slot.
    """
    ak = alpha[pivot]
    mk = mono[pivot]
    base = list(mono)
    base[pivot] = 0
    scale = ((-1) ** mk) * ak ** (degree - mk)
    others = [i for i in range(len(alpha)) if i != pivot and alpha[i]]
    # expand (sum_i a_i x_i)^mk over the nonzero support
    out = {}
    for split in _compositions(mk, len(others)):
        coeff = scale * _multinomial(split)
        expo = list(base)
        for idx, e in zip(others, split):
            coeff *= alpha[idx] ** e
            expo[idx] += e
        key = tuple(expo)
        out[key] = out.get(key, 0) + coeff
    return out


def _compositions(total, parts):
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for e in range(total + 1):
        for rest in _compositions(total - e, parts - 1):
            out.append((e,) + rest)
    return out


def _multinomial(split):
    total, out = 0, 1
    for e in split:
        total += e
        out *= comb(total, e)
    return out


def _assemble(arr, p, d):
    """Constraint matrix rows (sparse) and the column count."""
    ell = arr.ell
    monos = _monomials(ell, d)
    mono_index = {m: i for i, m in enumerate(monos)}
    subsets = list(combinations(range(ell), p))
    subset_index = {s: i for i, s in enumerate(subsets)}
    ncols = len(subsets) * len(monos)
    rows = []
    for alpha in arr.forms:
        pivot = next(i for i, c in enumerate(alpha) if c)
        reduction = [_substitution_row(alpha, pivot, m, d) for m in monos]
        # target monomials (pivot exponent 0) get row slots lazily
        for J in combinations(range(ell), p - 1):
            slots = {}
            for i in range(ell):
                if i in J or not alpha[i]:
                    continue
                I = tuple(sorted(J + (i,)))
                sign = (-1) ** I.index(i)
                coeff = sign * alpha[i]
                col_base = subset_index[I] * len(monos)
                for mi, m in enumerate(monos):
                    col = col_base + mi
                    for target, c in reduction[mi].items():
                        slot = slots.setdefault(target, {})
                        slot[col] = slot.get(col, 0) + coeff * c
            for target in sorted(slots):
                entries = [(c, v) for c, v in sorted(slots[target].items())
                           if v]
                if entries:
                    rows.append(entries)
    return rows, ncols


def dim_Dp(arr, p, d, exact=None):
    """dim over Q of the degree-d part of D^p(A)."""
    ell = arr.ell
    if p < 0 or p > ell:
        return 0
    if d < 0:
        return 0
    if p == 0:
        return comb(d + ell - 1, ell - 1)
    if not arr.forms:
        return comb(ell, p) * comb(d + ell - 1, ell - 1)
    key = (arr.canonical_key(), p, d)
    if key in _DIM_CACHE and exact is None:
        return _DIM_CACHE[key]
    rows, ncols = _assemble(arr, p, d)
    dim = kernel_dim(rows, ncols, exact=exact)
    _DIM_CACHE[key] = dim
    return dim


def dim_Dp_basis(arr, p, d):
    """Exact kernel basis (tuples of Fractions) in column order
    (subset-major, monomial-minor, both lex)."""
    rows, ncols = _assemble(arr, p, d)
    _, basis = nullspace_exact(rows, ncols)
    return basis


@dataclass
class HilbertTable:
    ell: int
    n_hyperplanes: int
    cutoff: int
    dims: list  # dims[p][d]


def default_cutoff(arr):
    return len(arr) + arr.ell + 2


def hilbert_table(arr, cutoff=None, exact=None):
    if cutoff is None:
        cutoff = default_cutoff(arr)
    ell, n = arr.ell, len(arr)
    dims = [[dim_Dp(arr, p, d, exact=exact) for d in range(cutoff + 1)]
            for p in range(ell + 1)]
    # closed-form rows: D^0 = S and D^ell = S * Q(A) d/dx_1...d/dx_ell
    for d in range(cutoff + 1):
        assert dims[0][d] == comb(d + ell - 1, ell - 1)
        expect = comb(d - n + ell - 1, ell - 1) if d >= n else 0
        assert dims[ell][d] == expect, \
            "top wedge row disagrees with x^n/(1-x)^ell at degree %d" % d
    return HilbertTable(ell, n, cutoff, dims)


# -----------------------------------------------------------------------------
# sequence checks

def euler_exactness_check(arr, h, p, cutoff):
    """Per-degree defect of 0 -> D^p(A')[-1] -> D^p(A) -> D^p(A^H) -> 0.

    Entry d is dim D^p(A)_d - dim D^p(A')_{d-1} - dim D^p(A^H)_d; all
    zeros means the Euler sequence is degreewise right-exact.
    """
    deleted = arr.delete(h)
    restricted = arr.restrict(h)
    return [dim_Dp(arr, p, d)
            - dim_Dp(deleted, p, d - 1)
            - dim_Dp(restricted, p, d)
            for d in range(cutoff + 1)]


def bseq_exactness_check(arr, h, p, cutoff):
    """Per-degree defect of 0 -> D^p(A) -> D^p(A') -> D^{p-1}(A^H) B.

    Entry d is dim D^p(A')_d - dim D^p(A)_d - dim D^{p-1}(A^H)_{d-degB};
    all zeros means degreewise exactness with surjective last map.
    """
    deleted = arr.delete(h)
    restricted = arr.restrict(h)
    deg_b = len(deleted) - len(restricted)
    return [dim_Dp(deleted, p, d)
            - dim_Dp(arr, p, d)
            - dim_Dp(restricted, p - 1, d - deg_b)
            for d in range(cutoff + 1)]


def terao_B_membership_check(arr, h, cutoff):
    """Check theta(alpha_H) in (alpha_H, B) for every theta in D(A')_d.

    For each degree d <= cutoff a full exact kernel basis of D(A')_d is
    computed; each theta(alpha_H) is pushed into the restriction chart
    (which reduces modulo alpha_H) and tested for divisibility by
    B-bar.  Returns the per-degree boolean list.
    """
    deleted = arr.delete(h)
    alpha = arr.forms[h]
    bpoly = b_polynomial(arr, h)
    chart = bpoly.chart
    ell = arr.ell
    kept = chart.kept
    results = []
    for d in range(cutoff + 1):
        basis = dim_Dp_basis(deleted, 1, d)
        monos = _monomials(ell, d)
        ok = True
        for vec in basis:
            # theta(alpha) = sum_i a_i f_i as a polynomial in ell vars
            value = {}
            for i in range(ell):
                if not alpha[i]:
                    continue
                for mi, m in enumerate(monos):
                    c = vec[i * len(monos) + mi]
                    if c:
                        value[m] = value.get(m, Fraction(0)) + alpha[i] * c
            reduced = _push_to_chart(value, chart, d)
            if not _divisible_by_b(reduced, bpoly, len(kept)):
                ok = False
                break
        results.append(ok)
    return results


def _push_to_chart(value, chart, degree):
    """Reduce a polynomial mod alpha and express it in chart coordinates."""
    k = chart.pivot
    out = MultiPoly.constant(len(chart.kept), 0)
    for m, c in value.items():
        if not c:
            continue
        row = _substitution_row(chart.alpha, k, m, degree)
        scale = Fraction(c, chart.alpha[k] ** degree)
        for target, v in row.items():
            mono = tuple(target[i] for i in chart.kept)
            out = out + MultiPoly(len(chart.kept), {mono: scale * v})
    return out


def _divisible_by_b(poly, bpoly, nvars):
    for form, e in bpoly.factors:
        for _ in range(e):
            poly = poly.divide_by_linear(form)
            if poly is None:
                return False
    return True


# -----------------------------------------------------------------------------
# Hilbert-series predictions and the truncated Psi

def wedge_degrees(exponents, p):
    """Generator degrees of wedge^p of a free module with the given
    generator degrees: sums over p-subsets."""
    return sorted(sum(c) for c in combinations(sorted(exponents), p))


def fr_predicted_hilbert(gen_full, gen_restricted, d_shift, ell, cutoff):
    """Dimension sequence of the two-step free resolution prediction.

    Numerator sum_I x^{d_I} + sum_J (x^{e_J + d} - x^{e_J + d + 1}) over
    (1 - x)^ell, where d_I runs over gen_full and e_J over
    gen_restricted, d = d_shift.
    """
    num = {}
    for dI in gen_full:
        num[dI] = num.get(dI, 0) + 1
    for eJ in gen_restricted:
        num[eJ + d_shift] = num.get(eJ + d_shift, 0) + 1
        num[eJ + d_shift + 1] = num.get(eJ + d_shift + 1, 0) - 1
    numerator = BivariatePolynomial(
        {(k, 0): v for k, v in num.items() if v})
    return series_from_rational(numerator, ell, cutoff)


def psi_truncated_from_table(table):
    """x-truncation of Psi = sum_p Hilb(D^p; x) (t(x-1)-1)^p."""
    sub = (BivariatePolynomial.t() * (BivariatePolynomial.x() - 1) - 1)
    total = None
    for p in range(table.ell + 1):
        entries = [BivariatePolynomial.constant(v) for v in table.dims[p]]
        term = TruncatedSeries(entries, table.cutoff).mul_poly(sub ** p)
        total = term if total is None else total + term
    return total


ZERO_TAIL = 3


def promote_to_polynomial(series):
    """Polynomial from a truncated series, or None without a clear tail.

    Promotion needs at least ZERO_TAIL consecutive vanishing top
    degrees; this guards against a cutoff that is too small.
    """
    entries = series.entries
    tail = 0
    for e in reversed(entries):
        if e.is_zero():
            tail += 1
        else:
            break
    if tail < ZERO_TAIL:
        return None
    return series.to_polynomial()


def omega_hilbert_shift(table, p):
    """Hilb(Omega^{ell-p}; x) = x^{-n} Hilb(D^p; x): returns the D^p row
    together with the documented shift n, avoiding negative exponents."""
    return table.dims[p], table.n_hyperplanes
