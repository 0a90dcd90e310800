import pytest

from hlpoly import hl_an, partitions as pt, tboson as tb
from hlpoly.errors import LengthMismatch
from hlpoly.poly import LaurentPoly, V


def strip(lam):
    return tuple(p for p in lam if p)


def plain_partitions(maxw):
    out = []
    for w in range(maxw + 1):
        for lam in pt.enumerate_partitions(w, w):
            s = strip(lam)
            if s not in out and sum(s) <= maxw:
                out.append(s)
    return out


def test_vacuum_row_is_one():
    # <0| T(x) |0> restricted to sites >= 1: T_+ kills it, T_- gives 1
    zero = (0, 0, 0)
    assert tb.transfer_element("T_plus", V("x1"), zero, zero) == LaurentPoly.zero()
    assert tb.transfer_element("T_minus", V("x1"), zero, zero) == LaurentPoly.const(1)


def test_tstar_row_is_skew_q():
    # <mu| calT*(x) |lam> = Q_{lam/mu}(x) over sites 1..M
    nsites = 6
    for lam in plain_partitions(4):
        for mu in plain_partitions(4):
            got = tb.row_calT_element(
                True, V("x1"),
                tb.occupations(mu, nsites, include_zero=False),
                tb.occupations(lam, nsites, include_zero=False))
            assert got == hl_an.hl_skew_q(lam, mu)


def test_t_row_is_skew_p():
    nsites = 6
    for lam in plain_partitions(4):
        for mu in plain_partitions(4):
            got = tb.row_calT_element(
                False, V("x1"),
                tb.occupations(lam, nsites, include_zero=False),
                tb.occupations(mu, nsites, include_zero=False))
            assert got == hl_an.hl_skew_p(lam, mu)


def test_particle_conservation():
    nsites = 4
    lam = tb.occupations((2, 1), nsites, include_zero=False)
    for kind, delta in (("T_plus", 1), ("T_minus", 0),
                        ("Tstar_plus", 0), ("Tstar_minus", -1)):
        tile, left, right = tb._EDGE[kind]
        sites = tb.bulk_sites(tile, V("x1"), nsites, False)
        outs = tb.apply_row({lam: LaurentPoly.const(1)}, sites, left, right)
        for st in outs:
            assert sum(st) - sum(lam) == delta


def test_t_row_vanishes_unless_interlacing():
    nsites = 5
    for lam in plain_partitions(3):
        for mu in plain_partitions(3):
            got = tb.row_calT_element(
                False, V("x1"),
                tb.occupations(lam, nsites, include_zero=False),
                tb.occupations(mu, nsites, include_zero=False))
            if not pt.interlaces(lam, mu):
                assert got.is_zero()


def test_p_lattice_examples():
    assert tb.hl_p_lattice((1, 0), 2) == V("x1") + V("x2")
    assert tb.hl_p_lattice((0, 0, 0), 3) == LaurentPoly.const(1)


def test_p_lattice_matches_branching():
    for lam in pt.enumerate_partitions(3, 5):
        assert tb.hl_p_lattice(lam, 3) == hl_an.hl_p_branching(lam, 3)


def test_p_lattice_width_independence():
    for lam in [(2, 1, 0), (3, 0, 0)]:
        w0 = lam[0] + 2
        assert tb.hl_p_lattice(lam, 3, width=w0) == tb.hl_p_lattice(lam, 3, width=w0 + 1)


def test_q_lattice_examples():
    got = tb.hl_q_lattice((0,), 1, with_alpha=True)
    assert got == 1 - V("u") * V("t")
    assert tb.hl_q_lattice((1,), 1, with_alpha=False) == (1 - V("t")) * V("x1")


def test_q_lattice_matches_branching():
    for lam in pt.enumerate_partitions(2, 4):
        got = tb.hl_q_lattice(lam, 2, with_alpha=False)
        assert got == hl_an.hl_q_branching(lam, 2)


def test_q_lattice_alpha_prefactor():
    from hlpoly.ratfn import substitute
    for lam in [(0, 0), (1, 0), (2, 2)]:
        full = tb.hl_q_lattice(lam, 2, with_alpha=True)
        bare = tb.hl_q_lattice(lam, 2, with_alpha=False)
        m0 = pt.multiplicity(lam, 0)
        pref = LaurentPoly.const(1)
        for j in range(1, m0 + 1):
            pref = pref * (1 - V("u") * V("t", j))
        assert full == pref * bare
        # u -> 1 reduces the prefactor to prod (1 - t^j)
        at1 = substitute(full, {"u": 1}).as_poly()
        classical = LaurentPoly.const(1)
        for j in range(1, m0 + 1):
            classical = classical * (1 - V("t", j))
        assert at1 == classical * bare


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        tb.hl_p_lattice((1,), 2)


def test_even_state_exchange_small():
    for mu in [(0, 0), (1, 0), (1, 1), (2, 1), (0, 3), (2, 1, 1)]:
        tb.check_even_state_exchange(mu, shifted0=False)


def test_even_state_exchange_shifted():
    for mu in [(0, 0), (1, 0), (1, 1, 2), (3, 1)]:
        tb.check_even_state_exchange(mu, shifted0=True)
