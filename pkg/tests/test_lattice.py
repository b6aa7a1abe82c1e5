import random

from arrinv.arrangement import Arrangement, builtin
from arrinv.lattice import FlatLattice, char_poly_as_factors


def _chi(arr):
    return FlatLattice(arr).characteristic_polynomial()


def test_boolean_chi():
    # chi = (t-1)^n in K^n
    assert _chi(builtin("boolean3")) == [-1, 3, -3, 1]


def test_concurrent_lines_chi():
    from arrinv.arrangement import concurrent_lines
    # n >= 2 lines through the origin in K^2: chi = t^2 - n t + (n - 1)
    for n in range(2, 7):
        assert _chi(concurrent_lines(n)) == [n - 1, -n, 1]


def test_x3_chi():
    assert _chi(builtin("x3")) == [27, -54, 36, -10, 1]


def test_t_minus_one_divides_chi():
    for name in ("x3", "x3_h_y", "three_generic", "generic_plus_one3"):
        chi = _chi(builtin(name))
        assert sum(chi) == 0  # chi(1) = 0 for nonempty central arrangements


def test_deletion_restriction_identity():
    rng = random.Random(7)
    for name in ("x3", "three_generic", "boolean4"):
        arr = builtin(name)
        for h in rng.sample(range(len(arr)), min(3, len(arr))):
            chi_a = _chi(arr)
            chi_del = _chi(arr.delete(h))
            chi_res = _chi(arr.restrict(h))
            padded = chi_res + [0] * (len(chi_a) - len(chi_res))
            assert chi_del == [a + r for a, r in zip(chi_a, padded)]


def test_mobius_alternates_in_sign():
    arr = builtin("x3")
    lat = FlatLattice(arr)
    mu = lat.mobius()
    for f in lat.flats():
        assert mu[f.bitset] != 0
        assert (mu[f.bitset] > 0) == (f.codim % 2 == 0)


def test_betti_from_chi():
    lat = FlatLattice(builtin("x3"))
    assert lat.betti_numbers() == [1, 10, 36, 54, 27]
    assert sum(lat.betti_numbers()) == 128  # chi(-1) up to sign


def test_closure_and_flat_of():
    arr = builtin("x3")
    lat = FlatLattice(arr)
    f = lat.closure([0, 1])
    assert f.codim == 2
    assert 0 in f.indices() and 1 in f.indices()
    # x=0, y=0 also forces x+y=0
    assert 4 in f.indices()


def test_localization_mobius_matches_interval():
    arr = builtin("x3")
    lat = FlatLattice(arr)
    mu = lat.mobius()
    for f in lat.flats():
        if f.codim == 0:
            continue
        loc = arr.localize(f.rows)
        loc_lat = FlatLattice(loc)
        loc_mu = loc_lat.mobius()
        top = [g for g in loc_lat.flats() if g.codim == f.codim]
        assert len(top) == 1
        assert loc_mu[top[0].bitset] == mu[f.bitset]


def test_char_poly_as_factors():
    assert char_poly_as_factors([-1, 3, -3, 1]) == [1, 1, 1]
    assert char_poly_as_factors([27, -54, 36, -10, 1]) == [1, 3, 3, 3]
    # t^2 - t - 1 has no integer roots
    assert char_poly_as_factors([-1, -1, 1]) is None
