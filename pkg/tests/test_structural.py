import pytest

from hlpoly import structural as st
from hlpoly.errors import IdentityViolated
from hlpoly.poly import V
from hlpoly.ratfn import RatFn
from hlpoly.spinops import LinOp, bits_keys, r_on_legs


def test_yang_baxter():
    assert "ok" in st.check_yang_baxter()


def test_unitarity():
    assert "ok" in st.check_unitarity()


def test_unitarity_scalar_value():
    x, y, t = RatFn(V("x1")), RatFn(V("x2")), RatFn(V("t"))
    lhs = r_on_legs(2, 0, 1, x / y).then(r_on_legs(2, 1, 0, y / x))
    scalar = (y - t * x) * (x - t * y) / ((y - x) * (x - y))
    assert lhs == LinOp.identity(bits_keys(2)).scale(scalar)


def test_rll_all_pairings():
    assert "ok" in st.check_rll(cap=3)
    assert "ok" in st.check_rll_star(cap=3)
    assert "ok" in st.check_rlstar_lstar(cap=3)


def test_boundary_rll():
    assert "ok" in st.check_boundary_rll(cap=3)


def test_reflection():
    assert "ok" in st.check_reflection()


def test_fish():
    assert "ok" in st.check_fish()


def test_vanishing_lemma():
    assert "ok" in st.check_vanishing_lemma(1)
    assert "ok" in st.check_vanishing_lemma(2)


def test_check_structural_dispatch():
    assert "ok" in st.check_structural("fish")
    with pytest.raises(ValueError):
        st.check_structural("nonsense")


def test_renormalized_r_unitarity():
    x, y = RatFn(V("x1")), RatFn(V("x2"))
    lhs = (r_on_legs(2, 0, 1, x / y, renorm=True)
           .then(r_on_legs(2, 1, 0, y / x, renorm=True)))
    assert lhs == LinOp.identity(bits_keys(2))
