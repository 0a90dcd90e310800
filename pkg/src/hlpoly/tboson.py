"""The integrable t-boson lattice as an executable object.

Rows are ordered products of tiles over sites; a tile's Boltzmann weight
depends on its kind (dark L, light L*, boundary B / B*), the horizontal
edge states (left, right), and the occupation at the top of the tile.
Operators act from the top state (ket) to the bottom state, so a dark row
with a particle on its far-right edge grows partitions downward.

The formal shift u = t^alpha at site 0 is realized by using 1 - u t^m in
place of 1 - t^m in every weight touching that site; occupations there are
stored relative to alpha and may be negative.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import IdentityViolated, LengthMismatch, NotDivisible
from .partitions import Partition, multiplicities, weight
from .poly import LaurentPoly, V, fprod
from .ratfn import RatFn

State = Tuple[int, ...]
Weights = Dict[State, LaurentPoly]

HOLE, PARTICLE = 0, 1


class Site:
    """One lattice site inside a row: kind, spectral parameter, options."""

    __slots__ = ("kind", "x", "shifted", "bparam")

    def __init__(self, kind: str, x: LaurentPoly, shifted: bool = False,
                 bparam: Optional[LaurentPoly] = None):
        self.kind = kind
        self.x = x
        self.shifted = shifted
        self.bparam = bparam


def _ann(m_top: int, shifted: bool) -> LaurentPoly:
    """Annihilation weight 1 - t^m (or 1 - u t^m at the shifted site)."""
    if shifted:
        return 1 - V("u") * V("t", m_top) if m_top else 1 - V("u")
    if m_top <= 0:
        return LaurentPoly.zero()
    return 1 - V("t", m_top)


def _tpow(m_top: int, shifted: bool) -> LaurentPoly:
    if shifted:
        return V("u") * V("t", m_top) if m_top else V("u")
    return V("t", m_top) if m_top else LaurentPoly.const(1)


def tile_options(site: Site, edge_in: int, m_top: int):
    """Yield (edge_out, m_bottom, weight) for every admissible tile."""
    k, x, sh, g = site.kind, site.x, site.shifted, site.bparam
    one = LaurentPoly.const(1)
    if k == "dark":
        if edge_in == HOLE:
            yield (HOLE, m_top, x)
            yield (PARTICLE, m_top + 1, x)
        else:
            w = _ann(m_top, sh)
            if not w.is_zero():
                yield (HOLE, m_top - 1, w)
            yield (PARTICLE, m_top, one)
    elif k == "light":
        if edge_in == HOLE:
            yield (HOLE, m_top, one)
            yield (PARTICLE, m_top + 1, one)
        else:
            w = _ann(m_top, sh)
            if not w.is_zero():
                yield (HOLE, m_top - 1, w * x)
            yield (PARTICLE, m_top, x)
    elif k == "bdark":
        if edge_in == HOLE:
            yield (HOLE, m_top, _tpow(m_top, sh))
            if g is not None and not g.is_zero():
                yield (PARTICLE, m_top + 1, g * x * _tpow(m_top, sh))
        else:
            w = _ann(m_top, sh)
            if not w.is_zero():
                yield (HOLE, m_top - 1, w)
            gw = one - (g * x * _tpow(m_top, sh) if g is not None else LaurentPoly.zero())
            if not gw.is_zero():
                yield (PARTICLE, m_top, gw)
    elif k == "blight":
        if edge_in == HOLE:
            yield (HOLE, m_top, x * _tpow(m_top, sh))
            if g is not None and not g.is_zero():
                yield (PARTICLE, m_top + 1, g * _tpow(m_top, sh))
        else:
            w = _ann(m_top, sh)
            if not w.is_zero():
                yield (HOLE, m_top - 1, x * w)
            gw = x - (g * _tpow(m_top, sh) if g is not None else LaurentPoly.zero())
            if not gw.is_zero():
                yield (PARTICLE, m_top, gw)
    else:
        raise ValueError(f"unknown tile kind {k}")


def apply_row(states: Weights, sites: List[Site], left: int, right: int) -> Weights:
    """Push a weighted set of top states through one row of tiles."""
    out: Weights = {}
    for in_state, in_w in states.items():
        stack = [(0, left, (), LaurentPoly.const(1))]
        while stack:
            i, edge, acc, w = stack.pop()
            if i == len(sites):
                if edge == right:
                    st = acc
                    prev = out.get(st)
                    total = w * in_w
                    out[st] = total if prev is None else prev + total
                continue
            m_top = in_state[i]
            for eout, m_bot, tw in tile_options(sites[i], edge, m_top):
                if m_bot < 0 and not sites[i].shifted:
                    continue
                stack.append((i + 1, eout, acc + (m_bot,), w * tw))
    return {s: w for s, w in out.items() if not w.is_zero()}


# ---------------------------------------------------------------------------
# Row factories
# ---------------------------------------------------------------------------

def bulk_sites(kind: str, x: LaurentPoly, nsites: int, shifted0: bool) -> List[Site]:
    return [Site(kind, x, shifted=(i == 0 and shifted0)) for i in range(nsites)]


def occupations(lam: Partition, nsites: int, include_zero: bool) -> State:
    """Occupation tuple of a partition over sites 0..nsites-1 (or 1..nsites
    when the zeroth site is excluded)."""
    mult = multiplicities(lam)
    first = 0 if include_zero else 1
    if any(j >= first + nsites for j, m in mult.items() if m):
        raise ValueError("lattice too short for this partition")
    return tuple(mult.get(first + i, 0) for i in range(nsites))


_EDGE = {"T_plus": ("dark", HOLE, PARTICLE),
         "T_minus": ("dark", PARTICLE, PARTICLE),
         "Tstar_plus": ("light", HOLE, HOLE),
         "Tstar_minus": ("light", PARTICLE, HOLE)}


def transfer_element(kind: str, x: LaurentPoly, out_state: State,
                     in_state: State, shifted0: bool = False) -> LaurentPoly:
    """Single-row matrix element <out| T |in> over sites 0..M."""
    tile, left, right = _EDGE[kind]
    sites = bulk_sites(tile, x, len(in_state), shifted0)
    res = apply_row({tuple(in_state): LaurentPoly.const(1)}, sites, left, right)
    return res.get(tuple(out_state), LaurentPoly.zero())


def row_calT_element(star: bool, x: LaurentPoly, out_state: State,
                     in_state: State) -> LaurentPoly:
    """<out| (T_+ + T_-) |in> (or the starred version) on sites 1..M."""
    kinds = ("Tstar_plus", "Tstar_minus") if star else ("T_plus", "T_minus")
    return (transfer_element(kinds[0], x, out_state, in_state)
            + transfer_element(kinds[1], x, out_state, in_state))


# ---------------------------------------------------------------------------
# Lattice oracles for the four Hall-Littlewood families
# ---------------------------------------------------------------------------

def hl_p_lattice(lam: Partition, n: int, width: Optional[int] = None) -> LaurentPoly:
    """P_lam(x_1..x_n; t) by exhaustive lattice-path enumeration of
    <lam;alpha| T_+(x_n) ... T_+(x_1) |0;alpha>, divided by prod x_i."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    nsites = (width if width is not None else (lam[0] if lam else 0) + 2)
    states: Weights = {(0,) * nsites: LaurentPoly.const(1)}
    for i in range(1, n + 1):
        sites = bulk_sites("dark", V(f"x{i}"), nsites, shifted0=True)
        states = apply_row(states, sites, HOLE, PARTICLE)
    target = occupations(lam, nsites, include_zero=True)
    val = states.get(target, LaurentPoly.zero())
    res = RatFn(val, fprod(V(f"x{i}") for i in range(1, n + 1))).as_poly()
    if "u" in res.variables():
        raise IdentityViolated("hl_p_lattice result depends on the formal shift")
    return res


def hl_q_lattice(lam: Partition, n: int, with_alpha: bool = True) -> LaurentPoly:
    """Q_lam via <0;alpha| T*_-(x_1) ... T*_-(x_n) |lam;alpha>.

    With with_alpha the prefactor prod_{j=1}^{m_0} (1 - u t^j) stays in the
    result (u formal); otherwise it is divided out exactly.
    """
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    nsites = (lam[0] if lam else 0) + 2
    states: Weights = {occupations(lam, nsites, include_zero=True): LaurentPoly.const(1)}
    for i in range(n, 0, -1):
        sites = bulk_sites("light", V(f"x{i}"), nsites, shifted0=True)
        states = apply_row(states, sites, PARTICLE, HOLE)
    val = states.get((0,) * nsites, LaurentPoly.zero())
    res = RatFn(val, fprod(V(f"x{i}") for i in range(1, n + 1))).as_poly()
    if with_alpha:
        return res
    m0 = multiplicities(lam).get(0, 0)
    pref = fprod(1 - V("u") * V("t", j) for j in range(1, m0 + 1))
    return RatFn(res, pref).as_poly() if m0 else res


def _double_row(states: Weights, a_sites: List[Site], abar_sites: List[Site],
                right: int) -> Weights:
    """One double row: a-row (top) then abar-row, K-covector on the left.

    The covector has components (hole, particle) -> 1 and (particle, hole)
    -> -t on the (a, abar) left edges.
    """
    out: Weights = {}
    for (sa, sabar, kw) in ((HOLE, PARTICLE, LaurentPoly.const(1)),
                            (PARTICLE, HOLE, -V("t"))):
        mid = apply_row(states, a_sites, sa, right)
        if not mid:
            continue
        low = apply_row(mid, abar_sites, sabar, right)
        for st, w in low.items():
            prev = out.get(st)
            total = w * kw
            out[st] = total if prev is None else prev + total
    return {s: w for s, w in out.items() if not w.is_zero()}


def _bc_sites(kind_bulk: str, kind_b: str, x: LaurentPoly, nbulk: int,
              gamma: LaurentPoly, delta: LaurentPoly) -> List[Site]:
    return ([Site(kind_b, x, bparam=gamma), Site(kind_b, x, bparam=delta)]
            + [Site(kind_bulk, x) for _ in range(nbulk)])


def k_lattice(lam: Partition, n: int, gamma=0, delta=0,
              width: Optional[int] = None) -> LaurentPoly:
    """K_lam(x^{+-1}; t; gamma, delta) from the double-row lattice, divided
    exactly by prod (x_i - t/x_i)."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    gamma = _coerce_param(gamma)
    delta = _coerce_param(delta)
    nbulk = (width if width is not None else (lam[0] if lam else 0) + 2)
    states: Weights = {(0,) * (nbulk + 2): LaurentPoly.const(1)}
    for i in range(1, n + 1):
        x, xb = V(f"x{i}"), V(f"x{i}", -1)
        a = _bc_sites("dark", "bdark", x, nbulk, gamma, delta)
        abar = _bc_sites("dark", "bdark", xb, nbulk, gamma, delta)
        states = _double_row(states, a, abar, PARTICLE)
    target = (0, 0) + occupations(lam, nbulk, include_zero=True)
    val = states.get(target, LaurentPoly.zero())
    den = fprod(V(f"x{i}") - V("t") * V(f"x{i}", -1) for i in range(1, n + 1))
    return RatFn(val, den).as_poly()


def l_lattice(lam: Partition, n: int, gamma=0, delta=0,
              width: Optional[int] = None) -> LaurentPoly:
    """L_lam(x^{+-1}; t; gamma, delta) from the starred double-row lattice."""
    lam = tuple(lam)
    if len(lam) != n:
        raise LengthMismatch(f"stored length {len(lam)} != n = {n}")
    gamma = _coerce_param(gamma)
    delta = _coerce_param(delta)
    nbulk = (width if width is not None else (lam[0] if lam else 0) + 2)
    states: Weights = {(0, 0) + occupations(lam, nbulk, include_zero=True):
                       LaurentPoly.const(1)}
    for i in range(n, 0, -1):
        x, xb = V(f"x{i}"), V(f"x{i}", -1)
        a = _bc_sites("light", "blight", x, nbulk, gamma, delta)
        abar = _bc_sites("light", "blight", xb, nbulk, gamma, delta)
        states = _double_row(states, a, abar, HOLE)
    val = states.get((0,) * (nbulk + 2), LaurentPoly.zero())
    den = fprod(V(f"x{i}", -1) - V("t") * V(f"x{i}") for i in range(1, n + 1))
    return RatFn(val, den).as_poly()


def _coerce_param(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, RatFn):
        return v.as_poly()
    return LaurentPoly.const(v)


# ---------------------------------------------------------------------------
# Even-state exchange (the Littlewood workhorse)
# ---------------------------------------------------------------------------

def _even_coeff(state: State, shifted0: bool) -> RatFn:
    """c_lam(alpha, t) for an all-even occupation state."""
    out = RatFn(1)
    for i, m in enumerate(state):
        if i == 0 and shifted0:
            if m >= 0:
                for j in range(1, m // 2 + 1):
                    out = out * RatFn(1 - V("u") * V("t", 2 * j - 1))
            else:
                for j in range(1, (-m) // 2 + 1):
                    out = out / RatFn(1 - V("u") * V("t", 1 - 2 * j))
        else:
            for j in range(1, m // 2 + 1):
                out = out * RatFn(1 - V("t", 2 * j - 1))
    return out


def _even_outs(states: Weights) -> List[Tuple[State, LaurentPoly]]:
    return [(s, w) for s, w in states.items() if all(m % 2 == 0 for m in s)]


def check_even_state_exchange(mu: State, shifted0: bool = False) -> None:
    """Verify the T / T* exchange across the even-multiplicity boundary
    vector for the state mu; raises IdentityViolated on failure."""
    mu = tuple(mu) + (0, 0)
    x = V("x9")  # a spectral parameter not colliding with site labels
    start: Weights = {mu: LaurentPoly.const(1)}

    def even_out(kind: str) -> Tuple[Optional[State], LaurentPoly]:
        tile, left, right = _EDGE[kind]
        sites = bulk_sites(tile, x, len(mu), shifted0)
        res = apply_row(start, sites, left, right)
        evens = _even_outs(res)
        if len(evens) > 1:
            raise IdentityViolated(f"multiple even out-states under {kind}: {evens}")
        return evens[0] if evens else (None, LaurentPoly.zero())

    for grow, shrink, tag in (("T_minus", "Tstar_plus", "net-0"),
                              ("T_plus", "Tstar_minus", "net-1")):
        sp, vp = even_out(grow)
        sm, vm = even_out(shrink)
        lhs = (_even_coeff(sp, shifted0) * RatFn(vp)) if sp is not None else RatFn(0)
        rhs = (_even_coeff(sm, shifted0) * RatFn(vm)) if sm is not None else RatFn(0)
        if not (lhs == rhs):
            raise IdentityViolated(
                f"even-state exchange ({tag}) fails for mu={mu}: {lhs!r} != {rhs!r}")
