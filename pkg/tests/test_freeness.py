from arrinv.arrangement import Arrangement, builtin, concurrent_lines
from arrinv.freeness import (FREE, NOT_FREE, UNKNOWN,
                             certify_inductively_free, factorization_test)


def test_boolean_is_free():
    cert = certify_inductively_free(builtin("boolean4"))
    assert cert.status == FREE
    assert cert.exponents == (1, 1, 1, 1)


def test_rank_two_base_case():
    cert = certify_inductively_free(concurrent_lines(5))
    assert cert.status == FREE
    assert cert.exponents == (1, 4)


def test_x3_exponents():
    cert = certify_inductively_free(builtin("x3"))
    assert cert.status == FREE
    assert cert.exponents == (1, 3, 3, 3)


def test_x3_deletions_are_not_free():
    # deleting any single hyperplane from this free arrangement breaks
    # the integer factorization of chi, so both deletions are NotFree
    for name in ("x3_h_y", "x3_h_x"):
        cert = certify_inductively_free(builtin(name))
        assert cert.status == NOT_FREE, (name, cert.status, cert.witness)
        assert "factorization" in cert.witness


def test_x3_restriction_is_free():
    cert = certify_inductively_free(builtin("x3").restrict(1))
    assert cert.status == FREE
    assert cert.exponents == (1, 2, 3)


def test_generic_is_not_free_in_rank_3():
    # 5 generic planes in K^3: chi has no integer factorization
    arr = Arrangement(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1),
                          (1, 1, 1), (1, 2, 3)])
    cert = certify_inductively_free(arr)
    assert cert.status == NOT_FREE


def test_budget_exhaustion_is_unknown():
    cert = certify_inductively_free(builtin("x3"), budget=3)
    assert cert.status == UNKNOWN
    assert "budget" in cert.witness


def test_factorization_test_matches_certificate():
    for name in ("x3", "boolean3"):
        arr = builtin(name)
        roots = factorization_test(arr)
        cert = certify_inductively_free(arr)
        assert cert.status == FREE
        assert roots is not None
        assert tuple(sorted(r for r in roots if r)) == \
            tuple(sorted(e for e in cert.exponents if e))
    assert factorization_test(builtin("x3_h_y")) is None


def test_trace_is_recorded():
    cert = certify_inductively_free(builtin("x3"))
    ops = {entry[0] for entry in cert.trace}
    assert "base" in ops and "add" in ops
