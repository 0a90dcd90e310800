import pytest

from hlpoly import hl_an, partitions as pt
from hlpoly.errors import LengthMismatch
from hlpoly.poly import LaurentPoly, V
from hlpoly.ratfn import substitute


def t():
    return V("t")


def test_p_base_cases():
    assert hl_an.hl_p_branching((0,), 1) == LaurentPoly.const(1)
    assert hl_an.hl_p_branching((1, 0), 2) == V("x1") + V("x2")
    expect = V("x1") ** 2 + V("x2") ** 2 + (1 - t()) * V("x1") * V("x2")
    assert hl_an.hl_p_branching((2, 0), 2) == expect


def test_q_base_cases():
    assert hl_an.hl_q_branching((0,), 1) == LaurentPoly.const(1)
    assert hl_an.hl_q_branching((1,), 1) == (1 - t()) * V("x1")


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        hl_an.hl_p_branching((1,), 2)
    with pytest.raises(LengthMismatch):
        hl_an.hl_p_group_sum((1, 0), 1)


def test_group_sum_hand_example():
    # lam=(1,0): x1(x1-t x2)/(x1-x2) + x2(x2-t x1)/(x2-x1) = x1+x2
    assert hl_an.hl_p_group_sum((1, 0), 2) == V("x1") + V("x2")


def test_group_sum_zero_partition():
    for n in (1, 2, 3):
        assert hl_an.hl_p_group_sum((0,) * n, n) == LaurentPoly.const(1)


def test_routes_agree_n2():
    for lam in pt.enumerate_partitions(2, 4):
        b = hl_an.hl_p_branching(lam, 2)
        s = hl_an.hl_p_group_sum(lam, 2)
        f = hl_an.hl_p_group_sum(lam, 2, full_group=True)
        assert b == s == f


def test_routes_agree_n3_sample():
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 0)]:
        b = hl_an.hl_p_branching(lam, 3)
        s = hl_an.hl_p_group_sum(lam, 3)
        f = hl_an.hl_p_group_sum(lam, 3, full_group=True)
        assert b == s == f


def test_q_is_b_times_p():
    for lam in pt.enumerate_partitions(2, 4):
        q = hl_an.hl_q_branching(lam, 2)
        p = hl_an.hl_p_branching(lam, 2)
        assert q == pt.b_coeff(lam) * p


def test_symmetry_under_transpositions():
    for lam in [(2, 1, 0), (3, 2, 0), (1, 1, 1)]:
        p = hl_an.hl_p_branching(lam, 3)
        for (a, b) in [(1, 2), (2, 3)]:
            swapped = substitute(p, {f"x{a}": V(f"x{b}"), f"x{b}": V(f"x{a}")})
            assert swapped == p


def test_homogeneity():
    for lam in pt.enumerate_partitions(3, 5):
        p = hl_an.hl_p_branching(lam, 3)
        w = pt.weight(lam)
        for m, _ in p.terms.items():
            assert sum(e for v, e in m if v.startswith("x")) == w


def test_skew_examples():
    assert hl_an.hl_skew_p((2, 1), (1,)) == V("x1") ** 2
    assert hl_an.hl_skew_p((1,), (1,)) == LaurentPoly.const(1)
    assert hl_an.hl_skew_p((1,), (3,)) == LaurentPoly.zero()


def test_schur_specialization():
    for lam in pt.enumerate_partitions(3, 5):
        p = hl_an.hl_p_branching(lam, 3)
        at_t0 = substitute(p, {"t": 0}).as_poly()
        assert at_t0 == hl_an.schur_bialternant(lam, 3)
