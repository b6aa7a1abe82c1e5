"""Exact and modular linear algebra over the integers.

Two complementary engines:

* an exact nullspace/rank computation that runs row reduction modulo a
  sequence of word-size primes, reconstructs the canonical reduced kernel
  basis over Q by CRT + rational reconstruction, and then *proves* the
  result by checking M @ K == 0 modulo enough fresh primes to exceed an a
  priori bound on the entries of the product.  Together with the trivial
  bound rank(M mod p) <= rank(M) this certifies the kernel dimension in
  both directions.

* a fast rank-only computation modulo two fixed 13-bit primes for matrices
  too large for reconstruction.  The elimination is blocked so that the
  bulk of the work is done by plain float64 BLAS matrix products: with
  entries below 2**13 and an inner dimension bounded by the block size,
  every product is far below 2**53 and therefore exact.  Rank mod p never
  exceeds the rational rank, and a rank drop needs p to divide the gcd of
  all top-size minors, so the maximum over the two primes is the rational
  rank except with vanishing probability; the structural cross-checks in
  the calling modules (closed-form rows, exactness identities) would
  expose such an event.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

# Fixed prime schedules keep every output bit-for-bit reproducible.
PRIMES13 = (8191, 8179)
PRIMES31 = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237,
    2147483179, 2147483171, 2147483137, 2147483123, 2147483077,
    2147483069, 2147483059, 2147483053, 2147483033, 2147483029,
)

# Column blocking keeps float64 products exact: both factors < 2**13, so
# each dot product is < 2**26 * BLOCK < 2**53.
BLOCK = 120


class LinalgError(Exception):
    pass


def _as_mod_matrix(rows, ncols, p):
    m = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row:
            m[i, j] = (m[i, j] + v) % p
    return m


def rref_mod(mat, p):
    """In-place reduced row echelon form mod p. Returns (rank, pivot_cols)."""
    nr, nc = mat.shape
    r = 0
    pivots = []
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            mat[[r, pr]] = mat[[pr, r]]
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        col = mat[:, c].copy()
        col[r] = 0
        tgt = np.nonzero(col)[0]
        if len(tgt):
            mat[tgt] = (mat[tgt] - np.outer(col[tgt], mat[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots


_UPDATE_CHUNK = 1500  # trailing columns per BLAS product, bounds temporaries


def rank_mod_blocked(mat, p):
    """Rank of an int64 matrix mod p (p < 2**13), BLAS-blocked elimination.

    The panel factorization delays reduction: multipliers and pivot rows
    are kept reduced, so a panel entry grows by at most p**2 < 2**26 per
    step and stays well inside int64 for a whole block.  The trailing
    update is a single exact float64 product per block.  Destroys `mat`.
    """
    nr, nc = mat.shape
    r = 0
    c0 = 0
    while c0 < nc and r < nr:
        c1 = min(c0 + BLOCK, nc)
        width = c1 - c0
        sub = mat[r:, c0:c1]
        below = nr - r
        mult = np.zeros((below, width), dtype=np.int64)
        invs = []
        q = 0  # pivots found in this block
        for c in range(width):
            colred = sub[q:, c] % p
            nz = np.nonzero(colred)[0]
            if len(nz) == 0:
                continue
            pr = q + int(nz[0])
            if pr != q:
                sub[[q, pr]] = sub[[pr, q]]
                mult[[q, pr]] = mult[[pr, q]]
                mat[r + q, c1:], mat[r + pr, c1:] = (
                    mat[r + pr, c1:].copy(), mat[r + q, c1:].copy())
            sub[q] %= p
            inv = pow(int(sub[q, c]), p - 2, p)
            sub[q] = (sub[q] * inv) % p
            col = sub[q + 1:, c] % p
            tgt = np.nonzero(col)[0]
            if len(tgt):
                sub[q + 1 + tgt] -= np.outer(col[tgt], sub[q])
            mult[q + 1:, q] = col
            invs.append(inv)
            q += 1
        if q and c1 < nc:
            # Replay the block row operations on the trailing columns.
            trail = mat[r:r + q, c1:]
            for j in range(q):
                if j:
                    trail[j] = (trail[j] - mult[j, :j] @ trail[:j]) % p
                trail[j] = (trail[j] * invs[j]) % p
            rest = mat[r + q:, c1:]
            if rest.shape[0]:
                lower = mult[q:, :q].astype(np.float64)
                tf = trail.astype(np.float64)
                for s in range(0, rest.shape[1], _UPDATE_CHUNK):
                    e = min(rest.shape[1], s + _UPDATE_CHUNK)
                    upd = np.dot(lower, tf[:, s:e]).astype(np.int64)
                    rest[:, s:e] -= upd
                    rest[:, s:e] %= p
        r += q
        c0 = c1
    return r


def rank_mod(rows, ncols, p):
    """Rank mod p of a matrix given as rows of (col, value) pairs."""
    mat = _as_mod_matrix(rows, ncols, p)
    if mat.size == 0:
        return 0
    if ncols <= 600 and mat.shape[0] <= 2000:
        rank, _ = rref_mod(mat, p)
        return rank
    return rank_mod_blocked(mat, p)


def kernel_dim_modular(rows, ncols):
    """Kernel dimension over Q, computed mod the two fixed 26-bit primes.

    rank mod p never exceeds the rational rank, so taking the max over the
    primes gives the exact kernel dimension unless both primes divide the
    same leading minor chain.
    """
    if ncols == 0:
        return 0
    best = 0
    for p in PRIMES13:
        best = max(best, rank_mod(rows, ncols, p))
    return ncols - best


def _rational_reconstruct(a, m):
    """Unique n/d = a (mod m) with |n|, d <= sqrt(m/2), or None."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def nullspace_exact(rows, ncols):
    """Provably exact rational kernel basis of an integer matrix.

    `rows` is a list of rows, each a list of (col, int) pairs.  Returns
    (kernel_dim, basis) where basis is a list of Fraction tuples in
    reduced-echelon canonical form (identity on the free columns).
    """
    if ncols == 0:
        return 0, []
    if not rows:
        return ncols, [tuple(Fraction(int(i == j)) for j in range(ncols))
                       for i in range(ncols)]

    residues = {}  # (row_of_R, col) -> list of residues per prime
    pivots_ref = None
    used = []
    basis = None
    for idx, p in enumerate(PRIMES31):
        mat = _as_mod_matrix(rows, ncols, p)
        rank, pivots = rref_mod(mat, p)
        if pivots_ref is None:
            pivots_ref = pivots
        elif pivots != pivots_ref:
            # One of the primes lost rank; restart with the larger profile.
            if rank > len(pivots_ref) or (rank == len(pivots_ref)
                                          and pivots < pivots_ref):
                pivots_ref = pivots
                residues.clear()
                used = []
            else:
                continue
        used.append(p)
        free = [c for c in range(ncols) if c not in set(pivots_ref)]
        for i in range(len(pivots_ref)):
            for c in free:
                residues.setdefault((i, c), []).append(int(mat[i, c]))
        # Attempt reconstruction once at least two primes agree.
        if len(used) < 2:
            continue
        modulus = 1
        for q in used:
            modulus *= q
        basis = _try_reconstruct(residues, pivots_ref, free, used,
                                 modulus, ncols)
        if basis is not None:
            break
    if basis is None:
        raise LinalgError("rational reconstruction did not converge")
    _verify_kernel(rows, ncols, basis, used)
    return len(basis), basis


def _try_reconstruct(residues, pivots, free, primes, modulus, ncols):
    # CRT per entry, then rational reconstruction.
    crt_mults = []
    for q in primes:
        rest = modulus // q
        crt_mults.append(rest * pow(rest, -1, q))
    entries = {}
    for key, vals in residues.items():
        a = 0
        for v, mult in zip(vals, crt_mults):
            a += v * mult
        a %= modulus
        f = _rational_reconstruct(a, modulus)
        if f is None:
            return None
        entries[key] = f
    basis = []
    piv_set = set(pivots)
    for c in free:
        vec = [Fraction(0)] * ncols
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -entries[(i, c)]
        basis.append(tuple(vec))
    return basis


def _verify_kernel(rows, ncols, basis, used_primes):
    """Prove M @ K == 0 by checking modulo fresh primes past an entry bound."""
    if not basis:
        return
    scaled = []
    max_k = 1
    for vec in basis:
        den = 1
        for f in vec:
            den = den * f.denominator // gcd(den, f.denominator)
        ivec = [int(f * den) for f in vec]
        scaled.append(ivec)
        max_k = max(max_k, max(abs(v) for v in ivec))
    max_row = max((max((abs(v) for _, v in row), default=1) for row in rows),
                  default=1)
    bound = 2 * ncols * max_row * max_k
    fresh = [p for p in PRIMES31 if p not in used_primes]
    kmat_cols = len(scaled)
    check_modulus = 1
    i = 0
    while check_modulus <= bound:
        if i >= len(fresh):
            raise LinalgError("not enough primes to certify the kernel")
        p = fresh[i]
        i += 1
        check_modulus *= p
        kmod = np.array([[v % p for v in vec] for vec in scaled],
                        dtype=np.int64).T  # ncols x kdim
        mmod = _as_mod_matrix(rows, ncols, p)
        prod = _mul_mod_31(mmod, kmod, p)
        if np.any(prod):
            raise LinalgError("kernel verification failed mod %d" % p)


def _mul_mod_31(a, b, p):
    """(a @ b) % p for entries < 2**31 using 16-bit limb splitting."""
    a_hi, a_lo = np.divmod(a, 1 << 16)
    b64 = b.astype(np.float64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # Chunk the inner dimension so float64 accumulation stays exact.
    n = a.shape[1]
    chunk = max(1, min(n, (1 << 52) // ((1 << 16) * p)))
    for s in range(0, n, chunk):
        e = min(n, s + chunk)
        hi = np.dot(a_hi[:, s:e].astype(np.float64), b64[s:e])
        lo = np.dot(a_lo[:, s:e].astype(np.float64), b64[s:e])
        out = (out + ((np.mod(hi, p).astype(np.int64) << 16)
                      + np.mod(lo, p).astype(np.int64))) % p
    return out


def kernel_dim(rows, ncols, exact=None):
    """Kernel dimension of an integer matrix (rows of (col, val) pairs).

    exact=None picks the certified path when the matrix is small enough
    for rational reconstruction to be cheap.
    """
    if exact is None:
        exact = ncols * max(1, len(rows)) <= 250_000
    if exact:
        dim, _ = nullspace_exact(rows, ncols)
        return dim
    return kernel_dim_modular(rows, ncols)


# ---------------------------------------------------------------------------
# Small exact eliminations used for flats / canonical forms.

def row_content(row):
    g = 0
    for v in row:
        g = gcd(g, abs(v))
    return g or 1


def reduce_row(row):
    g = row_content(row)
    row = [v // g for v in row]
    for v in row:
        if v:
            if v < 0:
                row = [-u for u in row]
            break
    return row


def integer_rref(rows):
    """Fraction-free reduced echelon form with content-reduced rows.

    Input: list of integer lists.  Returns (canonical_rows, rank); the
    canonical rows are pivot-positive, content 1, and fully reduced, so
    equal row spans give identical output.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return (), 0
    ncols = len(mat[0])
    r = 0
    pivots = []
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        mat[r] = reduce_row(mat[r])
        pv = mat[r][c]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [pv * a - f * b for a, b in zip(mat[i], mat[r])]
                if any(mat[i]):
                    mat[i] = reduce_row(mat[i])
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = [row for row in mat[:r]]
    return tuple(tuple(row) for row in out), r


def integer_rank(rows):
    return integer_rref(rows)[1]


def in_row_span(rows, vec):
    """True iff vec lies in the rational row span of rows."""
    _, r1 = integer_rref(list(rows))
    _, r2 = integer_rref(list(rows) + [list(vec)])
    return r1 == r2
