"""Inductive freeness certification.

The search runs depth first in the deletion direction: to certify A we
look for a hyperplane H so that A' = A - H and A^H are both certified
free with exp(A') = exp(A^H) + {e} as multisets, which yields
exp(A) = exp(A^H) + {e+1}.  Rank <= 2 arrangements are always free and
serve as the base case.  A characteristic polynomial that does not split
into nonnegative integer linear factors is a proof of non-freeness
(Terao's factorization) and doubles as pruning inside the recursion.

The answer is one of Free / NotFree / Unknown; Unknown only appears when
the node budget runs out, since inductive freeness is strictly weaker
than freeness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .lattice import FlatLattice, char_poly_as_factors

FREE = "Free"
NOT_FREE = "NotFree"
UNKNOWN = "Unknown"

DEFAULT_BUDGET = 20000


@dataclass
class FreenessCertificate:
    status: str
    exponents: tuple = None      # sorted, padded with 0s to length ell
    witness: str = ""            # human-readable reason
    trace: list = field(default_factory=list)  # (depth, label, detail)
    nodes: int = 0

    @property
    def is_free(self):
        return self.status == FREE


def factorization_test(arr, lattice=None):
    """Exponent candidates from chi, or None if chi does not split.

    A None answer certifies NotFree; a non-None answer says nothing by
    itself but pins down the exponents if the arrangement is free.
    """
    if lattice is None:
        lattice = FlatLattice(arr)
    return char_poly_as_factors(lattice.characteristic_polynomial())


def _base_exponents(arr, rank):
    """Exponents for rank <= 2, padded with zeros to ambient dimension."""
    exps = [0] * arr.ell
    n = len(arr)
    if rank >= 1:
        exps[0] = 1
    if rank == 2:
        exps[1] = n - 1
    return tuple(sorted(exps))


class _Search:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0
        self.memo = {}
        self.exhausted = False

    def run(self, arr, trace):
        """Sorted exponent tuple if certified free, NOT_FREE, or UNKNOWN."""
        key = arr.canonical_key()
        if key in self.memo:
            return self.memo[key]
        if self.nodes >= self.budget:
            self.exhausted = True
            return UNKNOWN
        self.nodes += 1

        rank = arr.rank()
        if rank <= 2:
            res = _base_exponents(arr, rank)
            self.memo[key] = res
            trace.append(("base", None, "rank %d, exp %s"
                          % (rank, list(res))))
            return res

        split = factorization_test(arr)
        if split is None:
            self.memo[key] = NOT_FREE
            trace.append(("chi-no-split", None,
                          "%d forms in K^%d" % (len(arr), arr.ell)))
            return NOT_FREE

        for h in range(len(arr)):
            sub = self.run(arr.delete(h), trace)
            if sub is NOT_FREE or sub is UNKNOWN:
                continue
            res = self.run(arr.restrict(h), trace)
            if res is NOT_FREE or res is UNKNOWN:
                continue
            leftover = _addition_leftover(sub, res)
            if leftover is None:
                continue
            exps = tuple(sorted(res + (leftover + 1,)))
            self.memo[key] = exps
            trace.append(("add", h,
                          "exp(A')=%s, exp(A^H)=%s -> exp %s"
                          % (list(sub), list(res), list(exps))))
            return exps

        # chi splits but no induction found: inductive freeness is only a
        # sufficient condition, so this is not a non-freeness proof.
        self.memo[key] = UNKNOWN
        return UNKNOWN


def _addition_leftover(exp_deleted, exp_restricted):
    """The single exponent of A' not matched in exp(A^H), if any.

    exp(A^H) lives one dimension lower, so its stored tuple has one
    fewer slot once the padding zeros are aligned; we compare as
    multisets after dropping one zero from the deleted side.
    """
    cd = Counter(exp_deleted)
    cr = Counter(exp_restricted)
    # padding: exp_deleted has ell entries, exp_restricted ell-1
    diff = cd - cr
    if cr - cd:
        return None
    rest = sorted(diff.elements())
    if len(rest) != 1:
        return None
    return rest[0]


def certify_inductively_free(arr, budget=DEFAULT_BUDGET):
    """Search for an inductive freeness certificate of `arr`."""
    search = _Search(budget)
    trace = []
    res = search.run(arr, trace)
    if res is UNKNOWN:
        if search.exhausted:
            witness = "node budget %d exhausted" % budget
        else:
            witness = ("chi splits but no addition-deletion certificate "
                       "was found")
        return FreenessCertificate(UNKNOWN, witness=witness,
                                   trace=trace, nodes=search.nodes)
    if res is NOT_FREE:
        return FreenessCertificate(
            NOT_FREE,
            witness=("characteristic polynomial has no factorization "
                     "into nonnegative integer roots"),
            trace=trace, nodes=search.nodes)
    return FreenessCertificate(FREE, exponents=res,
                               witness="inductive certificate",
                               trace=trace, nodes=search.nodes)
