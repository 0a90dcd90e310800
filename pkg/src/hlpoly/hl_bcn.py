"""BC_n (hyperoctahedral) Hall-Littlewood polynomials K and L.

Two routes: a genuine branching rule available at gamma = delta = 0, and
the signed-permutation (hyperoctahedral) sum at general boundary
parameters.  Both are certified polynomial by exact division.  The raw
normalization of the sum is reported as-is: the empty partition at n = 1
evaluates to 1 - gamma*delta, not 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Tuple

from .errors import LengthMismatch
from .linalg import SqMatrix, det
from .partitions import (Partition, interlaces, multiplicities, phi_psi,
                         v_coeff, weight)
from .poly import LaurentPoly, V, fprod
from .ratfn import RatFn


def _interlacing_between(nu: Partition, lam: Partition, length: int):
    """All mu with the given stored length and nu <= mu <= lam (interlacing
    both ways)."""
    n = len(lam)

    def lpart(i):
        return lam[i] if i < n else 0

    def npart(i):
        return nu[i] if i < len(nu) else 0

    if any(p > 0 for p in lam[length + 1:]):
        return
    out = []

    def rec(prefix, i):
        if i == length:
            cand = tuple(prefix)
            if interlaces(cand, nu):
                out.append(cand)
            return
        hi = min(lpart(i), prefix[-1]) if prefix else lpart(i)
        lo = lpart(i + 1)
        for p in range(hi, lo - 1, -1):
            prefix.append(p)
            rec(prefix, i + 1)
            prefix.pop()

    rec([], 0)
    return out


def k_skew_one_var(lam: Partition, nu: Partition, xname: str = "x1") -> LaurentPoly:
    """One-variable skew K_{lam/nu}(x^{+-1}; t) at gamma = delta = 0.

    Sums over intermediate mu with stored length l(lam) and l(lam)-1, with
    prefactors x and -t/x respectively; the result is certified to be a
    Laurent polynomial symmetric under x <-> 1/x by exact division.
    """
    lam, nu = tuple(lam), tuple(nu)
    if len(nu) != len(lam) - 1:
        # normalize nu's zero-padding to stored length l(lam)-1
        stripped = tuple(p for p in nu if p)
        if len(stripped) > max(len(lam) - 1, 0):
            if not interlaces(lam, stripped):
                return LaurentPoly.zero()
            raise LengthMismatch(
                f"skew pair needs l(nu) = l(lam)-1, got {lam}/{nu}")
        nu = stripped + (0,) * (len(lam) - 1 - len(stripped))
    x, xb, t = V(xname), V(xname, -1), V("t")
    num = LaurentPoly.zero()
    L = len(lam)
    for length, pref in ((L, x), (L - 1, -t * xb)):
        if length < 0:
            continue
        for mu in _interlacing_between(nu, lam, length) or []:
            xpow = 2 * weight(mu) - weight(lam) - weight(nu)
            num = num + pref * V(xname, xpow) \
                * phi_psi(lam, mu, "psi0") * phi_psi(mu, nu, "psi0")
    if num.is_zero():
        return LaurentPoly.zero()
    return RatFn(num, x - t * xb).as_poly()


@lru_cache(maxsize=None)
def _k_branch(lam: Partition, n: int) -> LaurentPoly:
    if n == 0:
        return LaurentPoly.const(1) if not lam else LaurentPoly.zero()
    out = LaurentPoly.zero()
    seen = set()
    # nu runs over stored-length n-1 partitions below lam in dominance of
    # parts; bound parts by lam_1 since K_{lam/nu} vanishes beyond it
    cap = lam[0] if lam else 0

    def gen(prefix, i):
        if i == n - 1:
            yield tuple(prefix)
            return
        hi = prefix[-1] if prefix else cap
        for p in range(hi, -1, -1):
            prefix.append(p)
            yield from gen(prefix, i + 1)
            prefix.pop()

    for nu in gen([], 0):
        if nu in seen:
            continue
        seen.add(nu)
        skew = k_skew_one_var(lam, nu, f"x{n}")
        if not skew.is_zero():
            out = out + skew * _k_branch(nu, n - 1)
    return out


def k_branching(lam: Partition, n: int) -> LaurentPoly:
    """K_lam(x_1^{+-1}..x_n^{+-1}; t) at gamma = delta = 0 via branching."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    return _k_branch(lam, n)


def _hyp_term(lam: Partition, sigma: Tuple[int, ...], signs: Tuple[int, ...],
              gamma, delta, pair_rule: str) -> RatFn:
    """One summand of the hyperoctahedral sum, with X_i = x_{sigma(i)}^{eps_i}.

    pair_rule 'strict' restricts the (X_i - t X_j)/(X_i - X_j) product to
    pairs with lam_i > lam_j (coset form); 'all' uses every i < j pair
    (full-group form).
    """
    n = len(lam)
    t = V("t")

    def xv(i, e=1):
        return V(f"x{sigma[i]}", signs[i] * e)

    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for i in range(n):
        num = num * xv(i, lam[i]) * (1 - gamma * xv(i, -1)) * (1 - delta * xv(i, -1))
        den = den * (1 - xv(i, -2))
    for i in range(n):
        for j in range(n):
            if pair_rule == "strict":
                hit = lam[i] > lam[j]
            else:
                hit = i < j
            if hit:
                num = num * (xv(i) - t * xv(j))
                den = den * (xv(i) - xv(j))
    for i in range(n):
        for j in range(i + 1, n):
            num = num * (1 - t * xv(i, -1) * xv(j, -1))
            den = den * (1 - xv(i, -1) * xv(j, -1))
    return RatFn(num, den)


def _hyp_reduction_factors(n: int):
    facs = []
    for i in range(1, n + 1):
        facs.append(1 - V(f"x{i}", 2))
        facs.append(1 - V(f"x{i}", -2))
        facs.append(V(f"x{i}", 2) - 1)
        for j in range(1, n + 1):
            if i < j:
                for (a, b) in product((1, -1), repeat=2):
                    facs.append(1 - V(f"x{i}", a) * V(f"x{j}", b))
                    facs.append(V(f"x{i}", a) - V(f"x{j}", b))
    return facs


def k_hyperoctahedral(lam: Partition, n: int, gamma=0, delta=0,
                      use_full_group: bool = False) -> LaurentPoly:
    """K_lam by summation over signed permutations, general gamma/delta."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    gamma = gamma if isinstance(gamma, LaurentPoly) else LaurentPoly.const(gamma)
    delta = delta if isinstance(delta, LaurentPoly) else LaurentPoly.const(delta)
    facs = _hyp_reduction_factors(n)
    identity = tuple(range(1, n + 1))
    if use_full_group:
        summands = [(lam, sigma, "all") for sigma in permutations(identity)]
    else:
        # one representative per coset: distinct rearrangements, positional x's
        summands = [(arr, identity, "strict")
                    for arr in sorted(set(permutations(lam)), reverse=True)]
    acc = RatFn(0)
    for parts, sigma, rule in summands:
        for signs in product((1, -1), repeat=n):
            acc = (acc + _hyp_term(parts, sigma, signs, gamma, delta, rule)).reduce_by(facs)
    if use_full_group:
        acc = acc / v_coeff(lam)
        acc = acc.reduce_by(facs + [1 - V("t", k) for k in range(1, n + 1)])
    return acc.as_poly()


def l_from_k(lam: Partition, k: LaurentPoly) -> LaurentPoly:
    """L_lam = prod_{j=1}^{m_0} (1 - t^j) * b_lam(t) * K_lam at
    gamma = delta = 0."""
    from .partitions import b_coeff
    m0 = multiplicities(tuple(lam)).get(0, 0)
    pref = fprod(1 - V("t", j) for j in range(1, m0 + 1))
    return pref * b_coeff(tuple(lam)) * k


def symplectic_character(lam: Partition, n: int) -> LaurentPoly:
    """sp_lam(x_1^{+-1}..x_n^{+-1}) by the Weyl determinant ratio; the
    independent t = 0 oracle for K."""
    lam = tuple(lam) + (0,) * (n - len(lam))

    def alt(shifts):
        def entry(i, j):
            e = shifts[j]
            return RatFn(V(f"x{i+1}", e) - V(f"x{i+1}", -e))
        return det(SqMatrix.build(n, entry))

    num = alt([lam[j] + n - j for j in range(n)])
    den = alt([n - j for j in range(n)])
    return (num / den).as_poly()
