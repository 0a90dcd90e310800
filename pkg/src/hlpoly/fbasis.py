"""Factorizing F matrices and twisted column transfer matrices.

Everything here acts on small tensor products of two-dimensional legs
(n <= 3, or 2n <= 6 for the BC contexts).  The F matrix is built from the
explicit single-descent sum; its inverse goes through F* and the diagonal
Delta factors.  Twisted columns are produced both from the explicit
subset-sum formula and by direct conjugation F S F^{-1}, and the two are
asserted equal.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .errors import Mismatch
from .partitions import Partition, multiplicities
from .poly import LaurentPoly, V, fprod
from .ratfn import RatFn
from .spinops import LinOp, bits_keys, product_k_covector, r_on_legs
from .tboson import Site, tile_options

Key = Tuple[int, ...]


def _proj(nlegs: int, particles: frozenset) -> LinOp:
    """Projector onto the basis state with particles exactly on the given
    legs (0-based)."""
    entries = {}
    for key in bits_keys(nlegs):
        if all((key[p] == 1) == (p in particles) for p in range(nlegs)):
            entries[(key, key)] = RatFn(1)
    return LinOp(entries)


def r_sigma(order: Sequence[int], target: Sequence[int], xs: Dict[int, RatFn],
            nlegs: int) -> LinOp:
    """Wiring operator taking lines listed left-to-right as `order` into the
    arrangement `target`; each adjacent swap of labels (u, v) contributes
    the renormalized vertex on legs (u, v) at ratio x_u / x_v.

    Labels are 0-based leg indices.  All reduced decompositions agree by
    the Yang-Baxter equation (tested, not assumed).
    """
    seq = list(order)
    pos = {lab: i for i, lab in enumerate(target)}
    op = LinOp.identity(bits_keys(nlegs))
    changed = True
    while changed:
        changed = False
        for p in range(len(seq) - 1):
            u, v = seq[p], seq[p + 1]
            if pos[u] > pos[v]:
                op = op.then(r_on_legs(nlegs, u, v, xs[u] / xs[v], renorm=True))
                seq[p], seq[p + 1] = v, u
                changed = True
    return op


def rcal(x_ratio: RatFn) -> LinOp:
    """The two-leg renormalized R matrix."""
    return r_on_legs(2, 0, 1, x_ratio, renorm=True)


def _descent_perms(order: Sequence[int], i: int):
    """Permutations of `order` that ascend, descend once at position i (1-based),
    then ascend again; yielded as full rearranged label tuples."""
    n = len(order)
    idx = list(range(n))
    for head in combinations(idx, i):
        tail = tuple(k for k in idx if k not in head)
        if not tail or not head:
            continue
        if head[-1] > tail[0]:
            yield tuple(order[k] for k in head), tuple(order[k] for k in tail)


def f_matrix(order: Sequence[int], xs: Dict[int, RatFn], nlegs: int) -> LinOp:
    """The factorizing F matrix for the listed leg order."""
    n = len(order)
    total = LinOp({})
    for i in range(n + 1):
        total = total + _proj(nlegs, frozenset(order[:i]))
    for i in range(1, n):
        for head, tail in _descent_perms(order, i):
            rho_order = head + tail
            rop = r_sigma(rho_order, order, xs, nlegs)
            total = total + _proj(nlegs, frozenset(head)).then(rop)
    return total


def f_star(order: Sequence[int], xs: Dict[int, RatFn], nlegs: int) -> LinOp:
    """The dual F* with inverted wirings and complementary projectors."""
    n = len(order)

    def proj_compl(holes: frozenset) -> LinOp:
        return _proj(nlegs, frozenset(order) - holes)

    total = LinOp({})
    for i in range(n + 1):
        total = total + proj_compl(frozenset(order[:i]))
    for i in range(1, n):
        for head, tail in _descent_perms(order, i):
            rho_order = head + tail
            rinv = r_sigma_inverse(rho_order, order, xs, nlegs)
            total = total + rinv.then(proj_compl(frozenset(head)))
    return total


def r_sigma_inverse(order: Sequence[int], target: Sequence[int],
                    xs: Dict[int, RatFn], nlegs: int) -> LinOp:
    """Inverse wiring: by unitarity, reverse the word with inverted ratios."""
    seq = list(order)
    pos = {lab: i for i, lab in enumerate(target)}
    word = []
    changed = True
    while changed:
        changed = False
        for p in range(len(seq) - 1):
            u, v = seq[p], seq[p + 1]
            if pos[u] > pos[v]:
                word.append((u, v))
                seq[p], seq[p + 1] = v, u
                changed = True
    op = LinOp.identity(bits_keys(nlegs))
    for (u, v) in reversed(word):
        op = op.then(r_on_legs(nlegs, v, u, xs[v] / xs[u], renorm=True))
    return op


def delta_product(order: Sequence[int], xs: Dict[int, RatFn], nlegs: int) -> LinOp:
    """prod_{k<l} Delta_{kl}: diagonal with the b-weights
    (x_l - x_k)/(x_l - t x_k) whenever legs k < l carry (particle, hole),
    and symmetrically."""
    t = RatFn(V("t"))
    entries = {}
    for key in bits_keys(nlegs):
        w = RatFn(1)
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                ka, kb = order[a], order[b]
                ia, ib = key[ka], key[kb]
                if ia == ib:
                    continue
                if ia > ib:
                    w = w * (xs[kb] - xs[ka]) / (xs[kb] - t * xs[ka])
                else:
                    w = w * (xs[ka] - xs[kb]) / (xs[ka] - t * xs[kb])
        entries[(key, key)] = w
    return LinOp(entries)


def f_inverse(order: Sequence[int], xs: Dict[int, RatFn], nlegs: int) -> LinOp:
    """F^{-1} = F* . prod Delta^{-1} (checked against F in the tests)."""
    fs = f_star(order, xs, nlegs)
    dp = delta_product(order, xs, nlegs)
    inv_entries = {k: RatFn(1) / v for k, v in dp.entries.items()}
    return fs.then(LinOp(inv_entries))


def standard_xs(n: int) -> Dict[int, RatFn]:
    return {i: RatFn(V(f"x{i+1}")) for i in range(n)}


def bc_xs(n: int) -> Dict[int, RatFn]:
    """Leg parameters (x_1, 1/x_1, ..., x_n, 1/x_n) on legs (0..2n-1)."""
    out = {}
    for i in range(n):
        out[2 * i] = RatFn(V(f"x{i+1}"))
        out[2 * i + 1] = RatFn(V(f"x{i+1}", -1))
    return out


# ---------------------------------------------------------------------------
# Column operators and their twists
# ---------------------------------------------------------------------------

def column_op(params: List[LaurentPoly], m_top: int, m_bot: int,
              kind: str = "dark", bparam=None) -> LinOp:
    """<m_bot| tile_n(params[n-1]) ... tile_1(params[0]) |m_top> as an
    operator on the legs; leg k carries params[k], tiles stacked with leg 0
    uppermost (it acts on the boson first)."""
    nlegs = len(params)
    entries = {}
    for key in bits_keys(nlegs):
        stack = [(0, m_top, (), LaurentPoly.const(1))]
        while stack:
            leg, m, out_bits, w = stack.pop()
            if leg == nlegs:
                if m == m_bot:
                    k = (key, out_bits)
                    prev = entries.get(k)
                    total = RatFn(w)
                    entries[k] = total if prev is None else prev + total
                continue
            site = Site(kind, params[leg], bparam=bparam)
            for eout, m2, tw in tile_options(site, key[leg], m):
                if m2 < 0:
                    continue
                stack.append((leg + 1, m2, out_bits + (eout,), w * tw))
    return LinOp({k: v for k, v in entries.items() if not v.is_zero()})


def twisted_column_explicit(m: int, params: List[LaurentPoly]) -> LinOp:
    """The subset-sum formula for the twisted column S~^{[m,0]}."""
    n = len(params)
    t = V("t")
    entries: Dict[Tuple[Key, Key], RatFn] = {}
    for subset in combinations(range(n), m):
        sset = set(subset)
        for key in bits_keys(n):
            if any(key[i] != 0 for i in subset):
                continue
            out = tuple(1 if i in sset else key[i] for i in range(n))
            w = RatFn(fprod(params[i] for i in subset))
            for j in range(n):
                if j in sset:
                    continue
                if key[j] == 0:  # particle legs outside the subset weigh 1
                    wj = RatFn(params[j])
                    for k in subset:
                        wj = wj * (RatFn(params[j]) - RatFn(t) * RatFn(params[k])) \
                            / (RatFn(params[j]) - RatFn(params[k]))
                    w = w * wj
            kk = (key, out)
            prev = entries.get(kk)
            entries[kk] = w if prev is None else prev + w
    return LinOp(entries)


_F_CACHE: Dict[int, Tuple[LinOp, LinOp]] = {}


def _standard_f_pair(n: int) -> Tuple[LinOp, LinOp]:
    pair = _F_CACHE.get(n)
    if pair is None:
        xs = standard_xs(n)
        order = tuple(range(n))
        pair = (f_matrix(order, xs, n), f_inverse(order, xs, n))
        _F_CACHE[n] = pair
    return pair


def twisted_column(m: int, n: int) -> LinOp:
    """S~^{[m,0]}(x_1..x_n): both the explicit formula and the conjugation
    F S F^{-1}; asserts they agree and returns the twisted operator."""
    params = [V(f"x{i}") for i in range(1, n + 1)]
    explicit = twisted_column_explicit(m, params)
    f, finv = _standard_f_pair(n)
    s = column_op(params, m_top=0, m_bot=m)
    conj = finv.then(s).then(f)
    if not (conj == explicit):
        conj = f.then(s).then(finv)
        if not (conj == explicit):
            raise Mismatch(f"twisted column [{m},0] n={n}: conjugation "
                           "disagrees with the explicit formula")
    return explicit


def twisted_b_column(gamma: LaurentPoly, n: int) -> LinOp:
    """B~^{[0,0]}(gamma) on 2n legs: computed by conjugation and compared
    with the diagonal prod (1, 1 - gamma x_i)."""
    params = []
    for i in range(1, n + 1):
        params.extend([V(f"x{i}"), V(f"x{i}", -1)])
    xs = bc_xs(n)
    order = tuple(range(2 * n))
    b = column_op(params, 0, 0, kind="bdark", bparam=gamma)
    f = f_matrix(order, xs, 2 * n)
    finv = f_inverse(order, xs, 2 * n)
    conj = finv.then(b).then(f)
    expect = LinOp({(key, key):
                    RatFn(fprod(1 - gamma * params[i]
                                for i in range(2 * n) if key[i] == 1))
                    for key in bits_keys(2 * n)})
    if not (conj == expect):
        conj = f.then(b).then(finv)
        if not (conj == expect):
            raise Mismatch(f"twisted boundary column n={n} disagrees with "
                           "the diagonal form")
    return expect


def twisted_boundary(n: int) -> Dict[Key, RatFn]:
    """<K~| = <K| F^{-1} on 2n legs, compared against the sign-vector sum."""
    xs = bc_xs(n)
    order = tuple(range(2 * n))
    kk = product_k_covector(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])
    formula = twisted_boundary_formula(n)
    zero = RatFn(0)
    for op in (f_inverse(order, xs, 2 * n), f_matrix(order, xs, 2 * n)):
        direct = op.apply_covector(kk)
        keys = set(direct) | set(formula)
        if all(direct.get(k, zero) == formula.get(k, zero) for k in keys):
            return formula
    raise Mismatch(f"twisted boundary n={n} disagrees with the sign-vector sum")


def twisted_boundary_formula(n: int) -> Dict[Key, RatFn]:
    """The explicit sign-vector sum for <K~|, including the overall
    prod (x_i - t/x_i) prefactor."""
    t = RatFn(V("t"))
    pref = RatFn(fprod(V(f"x{i}") - V("t") * V(f"x{i}", -1)
                       for i in range(1, n + 1)))
    out: Dict[Key, RatFn] = {}
    from itertools import product as iproduct
    for eps in iproduct((1, -1), repeat=n):
        w = RatFn(1)
        for k in range(n):
            xk = RatFn(V(f"x{k+1}", eps[k]))
            w = w * xk / (RatFn(1) - xk * xk)
        for k in range(n):
            for l in range(k + 1, n):
                xk = RatFn(V(f"x{k+1}", eps[k]))
                xl = RatFn(V(f"x{l+1}", eps[l]))
                w = w * (RatFn(1) - t * xk * xl) / (RatFn(1) - xk * xl)
        key = []
        for k in range(n):
            # <-eps|_k on leg k, <eps|_kbar on leg kbar; <+1| pairs with hole
            key.append(1 if eps[k] == 1 else 0)
            key.append(0 if eps[k] == 1 else 1)
        key = tuple(key)
        val = pref * w
        prev = out.get(key)
        out[key] = val if prev is None else prev + val
    return out


# ---------------------------------------------------------------------------
# Reconstruction of P and K from twisted columns
# ---------------------------------------------------------------------------

def p_from_twisted_columns(lam: Partition, n: int) -> LaurentPoly:
    """prod x_i * P_lam via <holes| prod_i S~^{[m_i,0]} |particles>."""
    lam = tuple(lam)
    mult = multiplicities(lam)
    params = [V(f"x{i}") for i in range(1, n + 1)]
    cov: Dict[Key, RatFn] = {(0,) * n: RatFn(1)}
    top = lam[0] if lam else 0
    for i in range(top + 1):
        op = twisted_column_explicit(mult.get(i, 0), params)
        cov = op.apply_covector(cov)
    val = cov.get((1,) * n, RatFn(0))
    return val.as_poly()


def k_from_twisted_columns(lam: Partition, n: int, gamma=None, delta=None) -> LaurentPoly:
    """prod (x_i - t/x_i) * K_lam via the twisted double-column picture."""
    lam = tuple(lam)
    mult = multiplicities(lam)
    gamma = LaurentPoly.zero() if gamma is None else gamma
    delta = LaurentPoly.zero() if delta is None else delta
    params = []
    for i in range(1, n + 1):
        params.extend([V(f"x{i}"), V(f"x{i}", -1)])
    cov = twisted_boundary_formula(n)
    for bp in (gamma, delta):
        if not bp.is_zero():
            op = LinOp({(key, key):
                        RatFn(fprod(1 - bp * params[i]
                                    for i in range(2 * n) if key[i] == 1))
                        for key in bits_keys(2 * n)})
            cov = op.apply_covector(cov)
    top = lam[0] if lam else 0
    for i in range(top + 1):
        op = twisted_column_explicit(mult.get(i, 0), params)
        cov = op.apply_covector(cov)
    val = cov.get((1,) * (2 * n), RatFn(0))
    return val.as_poly()
