import pytest

from hlpoly import sixvertex as sv
from hlpoly.errors import SizeTooLarge
from hlpoly.poly import LaurentPoly, V, fprod
from hlpoly.ratfn import RatFn, substitute


def t():
    return V("t")


def test_dw_base_value():
    z1 = sv.normalized_pf("DW_hybrid", 1)
    assert z1 == 1 - V("u") * t() + (V("u") - 1) * t() * V("x1") * V("y1")


def test_dw_raw_matches_lemma_shape():
    # raw = x1 y1 (1 - ut + (u-1)t x1 y1) / (1 - x1 y1)
    raw = sv.enumerate_pf("DW_hybrid", 1)
    num = V("x1") * V("y1") * (1 - V("u") * t() + (V("u") - 1) * t() * V("x1") * V("y1"))
    assert raw == RatFn(num, 1 - V("x1") * V("y1"))


def test_closed_forms_match_enumeration():
    assert sv.normalized_pf("DW_hybrid", 1) == sv.closed_dw(1)
    assert sv.normalized_pf("DW_hybrid", 2) == sv.closed_dw(2)
    assert sv.normalized_pf("OS", 2) == sv.closed_os(2)
    assert sv.normalized_pf("U", 1) == sv.closed_u(1)
    assert sv.normalized_pf("U", 2) == sv.closed_u(2)


def test_dw_u_to_one_is_classical_dwpf():
    for n in (1, 2):
        hybrid_at_1 = substitute(sv.normalized_pf("DW_hybrid", n), {"u": 1}).as_poly()
        assert hybrid_at_1 == sv.closed_dw(n, u_one=True)


def test_os_base_and_alpha_minus_weights():
    z2 = sv.normalized_pf("OS", 2)
    assert z2 == 1 - V("u") * t() + (V("u") - 1) * t() * V("x1") * V("x2")


def test_u_base():
    assert sv.normalized_pf("U", 1) == 1 - t()


def test_uu_base():
    assert sv.normalized_pf("UU", 1) == (1 - t()) * (1 - V("z") ** 2)


def test_uo_base():
    assert sv.normalized_pf("UO", 2) == (1 - t()) * (1 - t() * V("z")) * (1 + V("z"))


def test_uu_vanishes_at_unit_z():
    for n in (1, 2):
        for zval in (1, -1):
            assert sv.normalized_pf("UU", n, subs={"z": zval}).is_zero()


def test_property_suites_small():
    assert sv.property_suite("DW", 1)
    assert sv.property_suite("DW", 2)
    assert sv.property_suite("OS", 2)
    assert sv.property_suite("U", 1)
    assert sv.property_suite("U", 2)
    assert sv.property_suite("UU", 1)
    assert sv.property_suite("UO", 2)


def test_kuperberg_specializations_small():
    assert "ok" in sv.kuperberg_checks("UU", 1)
    assert "ok" in sv.kuperberg_checks("UO", 2)


def test_uniqueness_checks():
    assert sv.uniqueness_check("DW", 2)
    assert sv.uniqueness_check("DW", 1)
    assert sv.uniqueness_check("OS", 2)
    assert sv.uniqueness_check("U", 2)


def test_size_guard():
    with pytest.raises(SizeTooLarge):
        sv.enumerate_pf("UU", 3)


def test_dw_matches_bosonic_expectation():
    # the hybrid lattice equals the vacuum expectation
    # <0;a| T*_-(y_1)...T*_-(y_n) T_+(x_n)...T_+(x_1) |0;a>
    from hlpoly import tboson as tb
    from hlpoly.poly import LaurentPoly

    n = 2
    nsites = 4
    states = {(0,) * nsites: LaurentPoly.const(1)}
    for i in range(1, n + 1):
        sites = tb.bulk_sites("dark", V(f"x{i}"), nsites, shifted0=True)
        states = tb.apply_row(states, sites, tb.HOLE, tb.PARTICLE)
    for j in range(n, 0, -1):
        sites = tb.bulk_sites("light", V(f"y{j}"), nsites, shifted0=True)
        states = tb.apply_row(states, sites, tb.PARTICLE, tb.HOLE)
    vac = states.get((0,) * nsites, LaurentPoly.zero())
    # the width-limited bosonic lattice misses exactly the partitions with
    # parts beyond the cutoff, whose x-degree is at least nsites; so the
    # deviation from the six-vertex rational value sits in high degrees only
    raw = sv.enumerate_pf("DW_hybrid", n)
    diff = vac * raw.den - raw.num
    for mono, _ in diff.terms.items():
        degs = dict(mono)
        xdeg = degs.get("x1", 0) + degs.get("x2", 0)
        assert xdeg >= nsites
