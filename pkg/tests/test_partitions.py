import pytest

from hlpoly import partitions as pt
from hlpoly.errors import NotInterlacing, OddMultiplicity
from hlpoly.poly import LaurentPoly, V
from hlpoly.ratfn import RatFn


def t(e=1):
    return V("t", e)


def test_multiplicity_footnote_example():
    lam = (5, 4, 2, 0, 0)
    assert len(lam) == 5
    assert pt.multiplicity(lam, 0) == 2
    assert pt.multiplicity((3, 3, 3), 3) == 3
    assert pt.multiplicity((), 7) == 0


def test_b_coeff():
    assert pt.b_coeff((1, 1, 0)) == (1 - t()) * (1 - t(2))
    assert pt.b_coeff((0, 0, 0)) == LaurentPoly.const(1)
    assert pt.b_coeff((2, 1)) == (1 - t()) ** 2


def test_b_even_coeff():
    assert pt.b_even_coeff((1, 1)) == 1 - t()
    assert pt.b_even_coeff((2, 2, 2, 2)) == (1 - t()) * (1 - t(3))
    with pytest.raises(OddMultiplicity):
        pt.b_even_coeff((2, 1, 1))


def test_v_coeff():
    assert pt.v_coeff((0,)) == RatFn(1)
    assert pt.v_coeff((0, 0)) == RatFn(1 + t())
    assert pt.v_coeff((2, 1)) == RatFn(1)


def test_interlaces():
    assert pt.interlaces((3, 1), (2, 1))
    assert not pt.interlaces((3, 1), (4,))
    assert pt.interlaces((2, 2), (2,))
    assert pt.interlaces((), (0,))
    assert not pt.interlaces((1,), (3,))


def test_phi_psi_values():
    assert pt.phi_psi((2, 1), (1,), "phi") == 1 - t()
    assert pt.phi_psi((1,), (1,), "psi") == LaurentPoly.const(1)
    assert pt.phi_psi((1, 0), (0, 0), "psi0") == 1 - t(2)
    with pytest.raises(NotInterlacing):
        pt.phi_psi((1,), (3,), "phi")


def test_enumerate_basic():
    assert pt.enumerate_partitions(1, 2) == [(0,), (1,), (2,)]
    assert pt.enumerate_partitions(2, 2, even_only=True) == [(0, 0), (1, 1)]
    assert pt.enumerate_partitions(0, 5) == [()]


def test_enumerate_against_slow_generator():
    def slow(length, max_weight):
        if length == 0:
            return [()]
        out = set()
        # recursive descent on the largest part
        def rec(rest, largest, acc):
            if len(acc) == length:
                out.add(tuple(acc))
                return
            for p in range(min(largest, rest), -1, -1):
                rec(rest - p, p, acc + [p])
        rec(max_weight, max_weight, [])
        return sorted(out, key=lambda lam: (sum(lam), lam))

    for length in range(4):
        for w in range(5):
            fast = pt.enumerate_partitions(length, w)
            assert fast == slow(length, w)
            assert len(set(fast)) == len(fast)


def test_even_only_matches_conjugate_criterion():
    for lam in pt.enumerate_partitions(4, 6):
        even_mults = all(m % 2 == 0 for m in pt.multiplicities(lam).values())
        conj_even = all(p % 2 == 0 for p in pt.conjugate(lam))
        # conjugate parts even <=> all multiplicities of nonzero parts even;
        # with the stored length even, m_0 evenness follows iff the rest is
        if even_mults:
            assert conj_even
    evens = pt.enumerate_partitions(4, 6, even_only=True)
    for lam in evens:
        assert all(p % 2 == 0 for p in pt.conjugate(lam))
        assert pt.multiplicity(lam, 0) % 2 == 0


def test_multiplicity_sum_is_length():
    for lam in pt.enumerate_partitions(3, 5):
        assert sum(pt.multiplicities(lam).values()) == len(lam)


def test_interlacing_below():
    got = list(pt.interlacing_below((2, 1), 2))
    for mu in got:
        assert pt.interlaces((2, 1), mu)
    assert set(got) == {(2, 1), (1, 1), (2, 0), (1, 0)}
    below = list(pt.interlacing_below((2, 1), 1))
    assert below == [] or all(pt.interlaces((2, 1), mu) for mu in below)
    assert list(pt.interlacing_below((2, 0), 1)) == [(2,), (1,), (0,)]
