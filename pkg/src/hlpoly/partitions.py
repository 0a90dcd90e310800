"""Partition combinatorics with explicitly stored zero parts.

A partition is a tuple of weakly decreasing nonnegative integers; parts of
size zero are stored and counted by the length.  (5,4,2,0,0) has length 5
and m_0 = 2.  This convention puts zero parts on the same footing as the
rest, which is what the coefficient factories below require.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .errors import NotInterlacing, OddMultiplicity
from .poly import LaurentPoly
from .ratfn import RatFn

Partition = Tuple[int, ...]


def check(lam) -> Partition:
    lam = tuple(int(p) for p in lam)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts not weakly decreasing in {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def multiplicity(lam: Partition, j: int) -> int:
    """m_j: the number of parts equal to j, zero parts included."""
    return sum(1 for p in lam if p == j)


def multiplicities(lam: Partition) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def _t(exp: int) -> LaurentPoly:
    return LaurentPoly.var("t", exp)


def b_coeff(lam: Partition) -> LaurentPoly:
    """b_lam = prod over part sizes j >= 1 of (1-t)...(1-t^{m_j})."""
    out = LaurentPoly.const(1)
    for j, m in multiplicities(lam).items():
        if j >= 1:
            for i in range(1, m + 1):
                out = out * (1 - _t(i))
    return out


def b_even_coeff(lam: Partition) -> LaurentPoly:
    """b^ev_lam over j >= 1; every m_j (j >= 1) must be even."""
    out = LaurentPoly.const(1)
    for j, m in multiplicities(lam).items():
        if j >= 1:
            if m % 2:
                raise OddMultiplicity(f"m_{j} = {m} is odd in {lam}")
            for i in range(1, m // 2 + 1):
                out = out * (1 - _t(2 * i - 1))
    return out


def v_coeff(lam: Partition) -> RatFn:
    """v_lam = prod over all part sizes (zero included) of the t-factorials
    [m]_t! = prod_{j=1}^{m} (1-t^j)/(1-t)."""
    out = RatFn(1)
    for _, m in multiplicities(lam).items():
        for j in range(1, m + 1):
            out = out * RatFn(1 - _t(j), 1 - _t(1))
    return out


def interlaces(lam: Partition, mu: Partition) -> bool:
    """lam >= mu >= lam-shifted: lam_i >= mu_i >= lam_{i+1} for all i."""
    n = max(len(lam), len(mu)) + 1

    def part(p, i):
        return p[i] if i < len(p) else 0

    for i in range(n):
        if not (part(lam, i) >= part(mu, i) >= part(lam, i + 1)):
            return False
    return True


def phi_psi(lam: Partition, mu: Partition, kind: str) -> LaurentPoly:
    """The branching coefficients phi, psi (part sizes >= 1) and their
    zero-inclusive variants phi0, psi0 (part sizes >= 0)."""
    if not interlaces(lam, mu):
        raise NotInterlacing(f"{lam} does not interlace {mu}")
    lo = 0 if kind.endswith("0") else 1
    ml, mm = multiplicities(lam), multiplicities(mu)
    sizes = set(ml) | set(mm)
    out = LaurentPoly.const(1)
    for j in sizes:
        if j < lo:
            continue
        a, b = ml.get(j, 0), mm.get(j, 0)
        if kind in ("phi", "phi0") and b + 1 == a:
            out = out * (1 - _t(a))
        elif kind in ("psi", "psi0") and b == a + 1:
            out = out * (1 - _t(b))
    return out


def enumerate_partitions(length: int, max_weight: int,
                         even_only: bool = False) -> List[Partition]:
    """All partitions with exactly `length` stored parts (zeros counted) and
    weight <= max_weight; with even_only, all multiplicities m_j (j >= 0)
    must be even.  Ordered by weight, then lexicographically."""
    out: List[Partition] = []

    def rec(prefix: List[int], remaining: int, budget: int, cap: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(cap, budget), -1, -1):
            prefix.append(p)
            rec(prefix, remaining - 1, budget - p, p)
            prefix.pop()

    rec([], length, max_weight, max_weight)
    if even_only:
        out = [lam for lam in out
               if all(m % 2 == 0 for m in multiplicities(lam).values())]
    out.sort(key=lambda lam: (weight(lam), lam))
    return out


def enumerate_by_largest_part(length: int, max_part: int) -> List[Partition]:
    """All partitions with the stored length and parts bounded by max_part."""
    out: List[Partition] = []

    def rec(prefix: List[int], remaining: int, cap: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(cap, -1, -1):
            prefix.append(p)
            rec(prefix, remaining - 1, p)
            prefix.pop()

    rec([], length, max_part)
    out.sort(key=lambda lam: (weight(lam), lam))
    return out


def interlacing_below(lam: Partition, length: int) -> Iterator[Partition]:
    """All mu with the given stored length such that lam interlaces mu."""
    n = len(lam)

    def part(i):
        return lam[i] if i < n else 0

    if any(p > 0 for p in lam[length + 1:]):
        return  # interlacing forces mu_i >= lam_{i+1}, impossible here

    def rec(prefix: List[int], i: int):
        if i == length:
            yield tuple(prefix)
            return
        hi = min(part(i), prefix[-1]) if prefix else part(i)
        lo = part(i + 1)
        for p in range(hi, lo - 1, -1):
            prefix.append(p)
            yield from rec(prefix, i + 1)
            prefix.pop()

    yield from rec([], 0)
