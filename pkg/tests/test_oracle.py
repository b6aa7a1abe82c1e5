from math import comb

from arrinv.arrangement import Arrangement, builtin
from arrinv.oracle import (bseq_exactness_check, default_cutoff, dim_Dp,
                           dim_Dp_basis, euler_exactness_check,
                           fr_predicted_hilbert, hilbert_table,
                           promote_to_polynomial, psi_truncated_from_table,
                           terao_B_membership_check, wedge_degrees)
from arrinv.stengine import psi_auto, psi_free


def test_p_zero_and_p_ell_closed_forms():
    arr = builtin("boolean3")
    for d in range(6):
        assert dim_Dp(arr, 0, d) == comb(d + 2, 2)
        assert dim_Dp(arr, 3, d) == (comb(d - 3 + 2, 2) if d >= 3 else 0)


def test_boolean2_table():
    table = hilbert_table(builtin("boolean2"), cutoff=3)
    assert table.dims[1] == [0, 2, 4, 6]
    assert table.dims[2] == [0, 0, 1, 2]


def test_x3_p1_matches_free_series():
    # free with exponents (1,3,3,3): Hilb D^1 = (x+3x^3)/(1-x)^4
    arr = builtin("x3")
    for d in range(7):
        expected = comb(d - 1 + 3, 3) + (3 * comb(d - 3 + 3, 3)
                                         if d >= 3 else 0)
        if d < 1:
            expected = 0
        assert dim_Dp(arr, 1, d) == expected


def test_spog_restriction_dims():
    # yzw(y+z)(y+w)(z+w): predicted numerator (x+3x^3-x^4)/(1-x)^3
    arr = builtin("x3").restrict(0)
    got = [dim_Dp(arr, 1, d) for d in range(5)]
    assert got == [0, 1, 3, 9, 18]
    assert dim_Dp(arr, 1, 4) == 18


def test_exact_and_modular_paths_agree():
    arr = builtin("x3").restrict(0)
    for p in (1, 2):
        for d in range(6):
            assert dim_Dp(arr, p, d, exact=True) == \
                dim_Dp(arr, p, d, exact=False)


def test_basis_elements_satisfy_defining_conditions():
    arr = builtin("three_generic")
    basis = dim_Dp_basis(arr, 1, 2)
    assert len(basis) == dim_Dp(arr, 1, 2)


def test_euler_p0_pascal():
    arr = builtin("x3")
    assert euler_exactness_check(arr, 0, 0, 6) == [0] * 7


def test_bseq_boolean2():
    # deg B = 0; the defect column is minus dim S-bar_d = -1 in the raw
    # report convention, i.e. all zeros after accounting for D^0(A^H)
    arr = builtin("boolean2")
    assert bseq_exactness_check(arr, 1, 1, 4) == [0] * 5


def test_terao_b_membership_x3():
    arr = builtin("x3")
    assert all(terao_B_membership_check(arr, 0, 5))


def test_wedge_degrees():
    assert sorted(wedge_degrees((1, 3, 3, 3), 1)) == [1, 3, 3, 3]
    assert sorted(wedge_degrees((1, 3, 3, 3), 2)) == [4, 4, 4, 6, 6, 6]
    assert wedge_degrees((1, 2), 0) == [0]


def test_fr_prediction_spog():
    # POexp (1,3,3) with level 3 in 3 variables: (x+3x^3-x^4)/(1-x)^3
    series = fr_predicted_hilbert([1, 3, 3], [0], 3, 3, 8)
    got = [int(c) for c in series.rational_coefficients()]
    assert got[:5] == [0, 1, 3, 9, 18]


def test_psi_truncation_promotes_for_free_member():
    arr = builtin("boolean2")
    table = hilbert_table(arr, cutoff=8)
    poly = promote_to_polynomial(psi_truncated_from_table(table))
    assert poly == psi_free((1, 1))


def test_monotonicity_under_deletion():
    arr = builtin("three_generic")
    dele = arr.delete(3)
    for p in (1, 2):
        for d in range(5):
            assert dim_Dp(dele, p, d) >= dim_Dp(arr, p, d)


def test_default_cutoff():
    arr = builtin("boolean3")
    assert default_cutoff(arr) == len(arr) + arr.ell + 2
