from fractions import Fraction

import pytest

from arrinv.arrangement import builtin, concurrent_lines
from arrinv.errors import DimensionTooSmall, InconsistentInput
from arrinv.lattice import FlatLattice
from arrinv.polyring import BivariatePolynomial, geometric_sum, ONE, X, T
from arrinv.stengine import (chi_from_psi, conjecture_checks, phi_from_psi,
                             psi_addition, psi_auto, psi_deletion, psi_free,
                             psi_generic, reduced_free)
from arrinv.verify import (X3_DELETE_X_INNER_CONSISTENT,
                           X3_DELETE_X_REDUCED_CONSISTENT,
                           X3_DELETE_Y_BLOCKS, X3_DELETE_Y_REDUCED, _poly,
                           _x_poly)


def _chi(arr):
    return FlatLattice(arr).characteristic_polynomial()


def test_free_formula_boolean():
    # exponents (1,1): (-tx+1)^2
    psi = psi_free((1, 1))
    assert psi == (ONE - T * X) * (ONE - T * X)
    assert reduced_free((1, 1)) == (ONE + X) * (ONE + X)


def test_free_formula_zero_exponent():
    # a zero exponent contributes a bare (-t) factor
    psi = psi_free((0, 1))
    assert psi == (-T) * (ONE - T * X)


def test_chi_specialization_of_free_formula():
    for name in ("x3", "boolean3", "boolean4"):
        arr = builtin(name)
        r = psi_auto(arr)
        assert r.ok
        assert chi_from_psi(r.psi, arr.ell) == \
            [Fraction(c) for c in _chi(arr)]


def test_addition_vs_free():
    # boolean3 = boolean2-in-K^3 plus z; both sides land on the same psi
    arr = builtin("boolean3")
    dele = arr.delete(2)
    res = arr.restrict(2)
    lhs = psi_addition(psi_auto(dele).psi, psi_auto(res).psi)
    assert lhs == psi_auto(arr).psi


def test_deletion_recovers_x3_example():
    # delete y from the rank-4 free arrangement; d = 9 - 6 = 3
    arr = builtin("x3")
    psi_a = psi_free((1, 3, 3, 3))
    psi_h = psi_auto(arr.restrict(1)).psi
    got = psi_deletion(psi_a, psi_h, 3)
    assert got == _poly(_blocks_to_map(X3_DELETE_Y_BLOCKS))
    assert got.substitute("t", -1) == _x_poly(X3_DELETE_Y_REDUCED)


def _blocks_to_map(blocks):
    out = {}
    for j, coeffs in blocks.items():
        for i, c in enumerate(coeffs):
            if c:
                out[(i, j)] = c
    return out


def test_deletion_of_x_frozen_regression():
    # engine values for the other deletion, cross-checked against the
    # brute-force kernel dimensions; guards against sign regressions
    arr = builtin("x3")
    r = psi_auto(arr.delete(0), parent_hint=(1, 0, 0, 0))
    assert r.ok
    assert r.psi == (ONE - T * X) * _poly(X3_DELETE_X_INNER_CONSISTENT)
    assert r.reduced == _x_poly(X3_DELETE_X_REDUCED_CONSISTENT)


def test_psi_auto_path_independence():
    arr = builtin("x3").delete(1)
    base = psi_auto(arr).psi
    perm = list(range(len(arr)))
    perm.reverse()
    from arrinv.arrangement import Arrangement
    shuffled = Arrangement(arr.ell, [arr.forms[i] for i in perm])
    assert psi_auto(shuffled).psi == base


def test_psi_generic():
    assert psi_generic(3) == psi_auto(builtin("three_generic")).psi
    with pytest.raises(DimensionTooSmall):
        psi_generic(1)


def test_generic_plus_one_members():
    for ell in (2, 3, 4):
        arr = builtin("generic_plus_one%d" % ell)
        r = psi_auto(arr)
        assert r.ok
        assert chi_from_psi(r.psi, ell) == [Fraction(c) for c in _chi(arr)]


def test_phi_round_trip():
    arr = builtin("boolean3")
    r = psi_auto(arr)
    series = phi_from_psi(r.psi, len(arr), arr.ell, cutoff=10)
    assert series is not None
    bad = r.psi + BivariatePolynomial.monomial(0, arr.ell + 1)
    with pytest.raises(InconsistentInput):
        phi_from_psi(bad, len(arr), arr.ell, cutoff=10)


def test_conjecture_checks_free_vs_not():
    free = conjecture_checks(reduced_free((1, 3, 3, 3)), 10)
    assert free.monic and free.palindromic and free.degree_equals_n
    assert sorted(free.geometric_sum_exponents) == [1, 3, 3, 3]
    deleted = psi_auto(builtin("x3_h_y")).reduced
    rep = conjecture_checks(deleted, 9)
    assert rep.monic and rep.degree == 9
    assert not rep.palindromic


def test_reduced_free_is_product_of_geometric_sums():
    exps = (1, 2, 3)
    expected = ONE
    for d in exps:
        expected = expected * geometric_sum(d + 1)
    assert reduced_free(exps) == expected
