"""Type-A Hall-Littlewood polynomials P and Q by two independent routes.

Route 1 (branching): one variable at a time over interlacing chains, with
the psi/phi coefficients; zero parts are carried explicitly so the chain
shrinks the stored length by one at each step.

Route 2 (group sum): symmetrization over coset representatives of S_n (or
the full group divided by v_lam), computed over rational functions and then
certified polynomial by exact division.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Tuple

from .errors import LengthMismatch
from .linalg import SqMatrix, det
from .partitions import (Partition, interlaces, interlacing_below, phi_psi,
                         v_coeff, weight)
from .poly import LaurentPoly, V, fprod
from .ratfn import RatFn


def _xs(n: int):
    return [V(f"x{i}") for i in range(1, n + 1)]


def hl_skew_p(lam: Partition, mu: Partition, xvar: str = "x1") -> LaurentPoly:
    """One-variable skew P_{lam/mu}; the zero polynomial when the two do not
    interlace."""
    if not interlaces(lam, mu):
        return LaurentPoly.zero()
    return V(xvar, weight(lam) - weight(mu)) * phi_psi(lam, mu, "psi")


def hl_skew_q(lam: Partition, mu: Partition, xvar: str = "x1") -> LaurentPoly:
    if not interlaces(lam, mu):
        return LaurentPoly.zero()
    return V(xvar, weight(lam) - weight(mu)) * phi_psi(lam, mu, "phi")


@lru_cache(maxsize=None)
def _p_branch(lam: Partition, n: int) -> LaurentPoly:
    if n == 0:
        return LaurentPoly.const(1) if not lam else LaurentPoly.zero()
    out = LaurentPoly.zero()
    for mu in interlacing_below(lam, n - 1):
        out = out + hl_skew_p(lam, mu, f"x{n}") * _p_branch(mu, n - 1)
    return out


def hl_p_branching(lam: Partition, n: int) -> LaurentPoly:
    """P_lam(x_1..x_n; t) with the stored length equal to n."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    return _p_branch(lam, n)


@lru_cache(maxsize=None)
def _q_branch(lam: Partition, n: int) -> LaurentPoly:
    if n == 0:
        return LaurentPoly.const(1) if not lam else LaurentPoly.zero()
    out = LaurentPoly.zero()
    for mu in interlacing_below(lam, n - 1):
        out = out + hl_skew_q(lam, mu, f"x{n}") * _q_branch(mu, n - 1)
    return out


def hl_q_branching(lam: Partition, n: int) -> LaurentPoly:
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    return _q_branch(lam, n)


def _coset_reps(lam: Partition):
    """Distinct rearrangements of lam (coset representatives of S_n/S_n^lam)."""
    return sorted(set(permutations(lam)), reverse=True)


def _group_term(arrangement: Tuple[int, ...]) -> RatFn:
    """x^arrangement times prod over (i,j) with part_i > part_j of
    (x_i - t x_j)/(x_i - x_j)."""
    n = len(arrangement)
    t = V("t")
    num = fprod(V(f"x{i+1}", arrangement[i]) for i in range(n))
    den = LaurentPoly.const(1)
    for i in range(n):
        for j in range(n):
            if arrangement[i] > arrangement[j]:
                num = num * (V(f"x{i+1}") - t * V(f"x{j+1}"))
                den = den * (V(f"x{i+1}") - V(f"x{j+1}"))
    return RatFn(num, den)


def _perm_term(lam: Partition, sigma: Tuple[int, ...]) -> RatFn:
    """The full-group summand: sigma applied to x^lam prod_{i<j}
    (x_i - t x_j)/(x_i - x_j)."""
    n = len(lam)
    t = V("t")
    num = fprod(V(f"x{sigma[i]}", lam[i]) for i in range(n))
    den = LaurentPoly.const(1)
    for i in range(n):
        for j in range(i + 1, n):
            num = num * (V(f"x{sigma[i]}") - t * V(f"x{sigma[j]}"))
            den = den * (V(f"x{sigma[i]}") - V(f"x{sigma[j]}"))
    return RatFn(num, den)


def hl_p_group_sum(lam: Partition, n: int, full_group: bool = False) -> LaurentPoly:
    """P_lam(x_1..x_n; t) as a symmetric-group sum.

    With full_group the sum runs over all n! permutations and is divided by
    v_lam(t); otherwise over distinct rearrangements only.  Either way the
    result is certified to be a polynomial by exact division (NotDivisible
    here would signal an implementation bug).
    """
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    vandermonde = [V(f"x{i}") - V(f"x{j}")
                   for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
    acc = RatFn(0)
    if full_group:
        for sigma in permutations(range(1, n + 1)):
            acc = (acc + _perm_term(lam, sigma)).reduce_by(vandermonde)
        acc = acc / v_coeff(lam)
    else:
        for arr in _coset_reps(lam):
            acc = (acc + _group_term(arr)).reduce_by(vandermonde)
    return acc.as_poly()


def schur_bialternant(lam: Partition, n: int) -> LaurentPoly:
    """Schur polynomial s_lam(x_1..x_n) by the ratio of alternants; used as
    the independent t=0 oracle."""
    lam = tuple(lam)
    if len(lam) > n:
        lam_sorted = lam
        if any(p > 0 for p in lam_sorted[n:]):
            return LaurentPoly.zero()
        lam = lam[:n]
    lam = tuple(lam) + (0,) * (n - len(lam))
    num = det(SqMatrix.build(n, lambda i, j: RatFn(V(f"x{i+1}", lam[j] + n - 1 - j))
                             if lam[j] + n - 1 - j else RatFn(1)))
    den = det(SqMatrix.build(n, lambda i, j: RatFn(V(f"x{i+1}", n - 1 - j))
                             if n - 1 - j else RatFn(1)))
    return (num / den).as_poly()
