"""Bivariate arrangement polynomial engine.

Computes Psi(A; x, t) = sum_p Hilb(D^p(A); x) (t(x-1)-1)^p through the
free closed form and the licensed addition/deletion recursions, plus the
dual polynomial Phi, the generic closed form, and checks of the two
open conjectures on the reduced polynomial Psi(A; x, -1).

Licensing policy (soundness first): a rule is applied only when the
required freeness hypothesis carries a certificate.
  * free formula: the node itself is certified Free;
  * addition Psi(A) = x Psi(A') + Psi(A^H): A' certified Free, ell >= 3;
  * deletion Psi(A') = Psi(A) + x^d (t(x-1)-1) Psi(A^H): the parent A
    certified Free, ell >= 3.  The restriction need not be free; its
    Psi is computed recursively one dimension down.
Rank <= 2 nodes are always free, so every recursion bottoms out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arrangement import Arrangement, canonical_form
from .errors import DimensionTooSmall, InconsistentInput
from .freeness import certify_inductively_free
from .lattice import FlatLattice
from .polyring import (ONE, T, X, ZERO, BivariatePolynomial, TruncatedSeries,
                       geometric_sum)

_T_SUBST = T * (X - ONE) - ONE  # the recurring t(x-1)-1 factor


# -----------------------------------------------------------------------------
# closed forms and rule arithmetic

def psi_free(exponents):
    """Product formula for a free arrangement with the given exponents."""
    out = ONE
    for d in exponents:
        out = out * (geometric_sum(d) - T * BivariatePolynomial.monomial(d, 0))
    return out


def reduced_free(exponents):
    """psi_free at t = -1: the product of geometric sums 1+...+x^d."""
    out = ONE
    for d in exponents:
        out = out * geometric_sum(d + 1)
    return out


def psi_addition(psi_deleted, psi_restricted):
    return X * psi_deleted + psi_restricted


def psi_deletion(psi_full, psi_restricted, d):
    shift = BivariatePolynomial.monomial(d, 0)
    return psi_full + shift * _T_SUBST * psi_restricted


def psi_generic(ell):
    """Closed form for ell+1 hyperplanes in general position in K^ell."""
    if ell < 2:
        raise DimensionTooSmall("generic closed form needs ell >= 2")
    out = ONE + BivariatePolynomial.monomial(1, 0) * (ell - 1)
    out = out - T * (X + BivariatePolynomial.monomial(2, 0)
                     * (comb(ell + 1, 2) - 1))
    for i in range(2, ell + 1):
        c = (-1) ** i * comb(ell + 1, i + 1)
        out = out + BivariatePolynomial.monomial(i + 1, i) * c
    return out


def chi_from_psi(psi, ell):
    """Coefficient list of (-1)^ell * psi(1, t), low degree first."""
    at_one = psi.substitute("x", Fraction(1))
    deg = at_one.degree_t
    sign = (-1) ** ell
    return [sign * at_one.coeff(0, j) for j in range(max(deg, 0) + 1)]


# -----------------------------------------------------------------------------
# shared caches (canonical arrangement key -> result)

_LATTICE_CACHE = {}
_CERT_CACHE = {}


def cached_lattice(arr):
    key = arr.canonical_key()
    if key not in _LATTICE_CACHE:
        _LATTICE_CACHE[key] = FlatLattice(arr)
    return _LATTICE_CACHE[key]


def cached_certificate(arr):
    key = arr.canonical_key()
    if key not in _CERT_CACHE:
        _CERT_CACHE[key] = certify_inductively_free(arr)
    return _CERT_CACHE[key]


def characteristic_polynomial(arr):
    return cached_lattice(arr).characteristic_polynomial()


# -----------------------------------------------------------------------------
# automatic computation

@dataclass
class PsiResult:
    status: str                       # "ok" or "unknown"
    psi: BivariatePolynomial = None
    method_trace: list = field(default_factory=list)
    reduced: BivariatePolynomial = None
    chi_check: bool = False
    nodes: int = 0

    @property
    def ok(self):
        return self.status == "ok"


DEFAULT_PSI_BUDGET = 500


class _PsiSearch:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0
        self.memo = {}

    def run(self, arr, trace, parent_hint=None):
        key = arr.canonical_key()
        if key in self.memo:
            return self.memo[key]
        if self.nodes >= self.budget:
            return None
        self.nodes += 1

        cert = cached_certificate(arr)
        if cert.is_free:
            psi = psi_free(cert.exponents)
            trace.append(("free-formula", None,
                          "exp %s" % (list(cert.exponents),)))
            self.memo[key] = psi
            return psi

        if arr.ell < 3:
            # rank <= 2 is always free, so this cannot happen unless the
            # freeness search was budget-starved.
            self.memo[key] = None
            return None

        psi = self._try_deletion(arr, trace, parent_hint)
        if psi is None:
            psi = self._try_addition(arr, trace)
        self.memo[key] = psi
        return psi

    def _try_deletion(self, arr, trace, parent_hint):
        """View arr as a free parent minus one hyperplane."""
        for gamma in _parent_candidates(arr, parent_hint):
            try:
                parent = arr.add(gamma)
            except Exception:
                continue
            pcert = cached_certificate(parent)
            if not pcert.is_free:
                continue
            h = len(parent) - 1
            restricted = parent.restrict(h)
            sub_trace = []
            psi_r = self.run(restricted, sub_trace)
            if psi_r is None:
                continue
            d = len(arr) - len(restricted)
            psi = psi_deletion(psi_free(pcert.exponents), psi_r, d)
            trace.append(("deletion", gamma,
                          "parent exp %s, d=%d" % (list(pcert.exponents), d)))
            trace.extend(sub_trace)
            return psi
        return None

    def _try_addition(self, arr, trace):
        """View arr as a free deletion plus its restriction."""
        for h in range(len(arr)):
            dcert = cached_certificate(arr.delete(h))
            if not dcert.is_free:
                continue
            sub_trace = []
            psi_r = self.run(arr.restrict(h), sub_trace)
            if psi_r is None:
                continue
            psi = psi_addition(psi_free(dcert.exponents), psi_r)
            trace.append(("addition", h,
                          "deletion exp %s" % (list(dcert.exponents),)))
            trace.extend(sub_trace)
            return psi
        return None


def _parent_candidates(arr, parent_hint):
    """Forms gamma to try as the deleted hyperplane of a free parent.

    sums/differences of pairs of existing forms, most frequently
    generated first; an explicit hint goes to the front of the queue.
    """
    existing = set(arr.forms)
    counts = {}
    forms = arr.forms
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            for combo in (
                    tuple(a + b for a, b in zip(forms[i], forms[j])),
                    tuple(a - b for a, b in zip(forms[i], forms[j]))):
                if not any(combo):
                    continue
                cf = canonical_form(combo)
                if cf in existing:
                    continue
                counts[cf] = counts.get(cf, 0) + 1
    order = sorted(counts, key=lambda f: (-counts[f], f))
    if parent_hint is not None:
        hint = canonical_form(parent_hint)
        if hint not in existing:
            order = [hint] + [f for f in order if f != hint]
    return order


def psi_auto(arr, budget=DEFAULT_PSI_BUDGET, parent_hint=None):
    """Search for a certified computation tree for Psi(arr; x, t).

    Every rule application carries the freeness certificate that
    licenses it; the result is always cross-checked against the lattice
    characteristic polynomial.  Status "unknown" means no licensed tree
    was found within the budget, never that Psi does not exist.
    """
    search = _PsiSearch(budget)
    trace = []
    psi = search.run(arr, trace, parent_hint=parent_hint)
    if psi is None:
        return PsiResult("unknown", method_trace=trace, nodes=search.nodes)
    chi_ok = chi_from_psi(psi, arr.ell) == [
        Fraction(c) for c in characteristic_polynomial(arr)]
    return PsiResult("ok", psi=psi, method_trace=trace,
                     reduced=psi.substitute("t", Fraction(-1)),
                     chi_check=chi_ok, nodes=search.nodes)


# -----------------------------------------------------------------------------
# the dual polynomial

def phi_from_psi(psi, n_hyperplanes, ell, cutoff):
    """Invert Psi(x,t) = x^n (t(x-1)-1)^ell Phi(x, -t/(t(x-1)-1)).

    Writing Psi = sum_j c_j(x) t^j, the substitution inverts to

        x^n Phi(x,s) = (-1)^ell sum_j c_j(x) s^j (s(x-1)+1)^(ell-j),

    a polynomial identity.  The return value is the x-truncation of
    x^n * Phi (note the shift by x^n: Phi itself may carry x-degrees
    down to -n) with the second variable of each entry playing the role
    of s.  The identity is verified exactly by resubstitution before
    returning.
    """
    if psi.degree_t > ell:
        raise InconsistentInput("t-degree exceeds the ambient dimension")
    s_factor = T * (X - ONE) + ONE  # s(x-1)+1 with T standing in for s
    cjs = [psi.coeff_of_t(j) for j in range(ell + 1)]
    p = ZERO
    for j, cj in enumerate(cjs):
        p = p + cj * T ** j * s_factor ** (ell - j)
    if ell % 2:
        p = p * Fraction(-1)
    # round trip: substitute s -> -t/(t(x-1)-1) and clear denominators,
    # i.e. check sum_j p_j(x) (-t)^j (t(x-1)-1)^(ell-j) == x^n Psi / x^n.
    back = ZERO
    for j in range(p.degree_t + 1):
        pj = p.coeff_of_t(j)
        back = back + pj * (T * Fraction(-1)) ** j * _T_SUBST ** (ell - j)
    if back != psi:
        raise InconsistentInput(
            "substitution does not round-trip; input is not a valid "
            "Psi for the given n and ell")
    return TruncatedSeries.from_polynomial(p, cutoff)


# -----------------------------------------------------------------------------
# conjecture checks on the reduced polynomial

@dataclass
class ConjectureReport:
    degree: int
    n_hyperplanes: int
    degree_equals_n: bool
    monic: bool
    palindromic: bool
    geometric_sum_exponents: tuple = None  # multiset d_i, or None

    def as_dict(self):
        return {
            "degree": self.degree,
            "n_hyperplanes": self.n_hyperplanes,
            "degree_equals_n": self.degree_equals_n,
            "monic": self.monic,
            "palindromic": self.palindromic,
            "splits_as_product_of_geometric_sums":
                list(self.geometric_sum_exponents)
                if self.geometric_sum_exponents is not None else None,
        }


def _coeff_list(reduced):
    return [reduced.coeff(i, 0) for i in range(reduced.degree_x + 1)]


def _divide_coeffs(num, den):
    """Quotient of coefficient lists over Q, or None if not divisible."""
    num = list(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    return q if not any(num[:len(den) - 1]) else None


def _split_geometric(coeffs):
    """Exponents d_i with product of (1+x+...+x^{d_i}) = coeffs, or None."""
    if not coeffs or coeffs[0] != 1:
        return None
    if len(coeffs) == 1:
        return ()
    for d in range(1, len(coeffs)):
        rest = _divide_coeffs(coeffs, [Fraction(1)] * (d + 1))
        if rest is None:
            continue
        tail = _split_geometric(rest)
        if tail is not None:
            return tuple(sorted((d,) + tail))
    return None


def conjecture_checks(reduced, n_hyperplanes):
    """Degree/monic/palindromic report for a reduced polynomial."""
    coeffs = _coeff_list(reduced)
    deg = len(coeffs) - 1
    monic = coeffs[-1] == 1
    palin = coeffs == coeffs[::-1]
    split = _split_geometric(coeffs)
    return ConjectureReport(
        degree=deg, n_hyperplanes=n_hyperplanes,
        degree_equals_n=(deg == n_hyperplanes), monic=monic,
        palindromic=palin, geometric_sum_exponents=split)
