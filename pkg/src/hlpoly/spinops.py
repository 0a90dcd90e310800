"""Sparse linear operators on tensor products of two-dimensional legs,
optionally augmented by a bosonic occupation slot.

Keys are tuples: leg states (0 = hole, 1 = particle) with an optional
trailing occupation number.  Entries are rational functions.  Matrix
products follow the written order of the paper's operator strings: in
`a.then(b)`, `a` is applied first, matching the row convention where the
left/top index of every printed matrix is the incoming one.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, Iterable, Tuple

from .poly import LaurentPoly, V
from .ratfn import RatFn
from .tboson import Site, tile_options

Key = Tuple[int, ...]


class LinOp:
    __slots__ = ("entries",)

    def __init__(self, entries: Dict[Tuple[Key, Key], RatFn] | None = None):
        self.entries = entries or {}

    @staticmethod
    def identity(keys: Iterable[Key]) -> "LinOp":
        return LinOp({(k, k): RatFn(1) for k in keys})

    def then(self, other: "LinOp") -> "LinOp":
        by_in: Dict[Key, list] = {}
        for (i, o), v in other.entries.items():
            by_in.setdefault(i, []).append((o, v))
        out: Dict[Tuple[Key, Key], RatFn] = {}
        for (i, m), v in self.entries.items():
            for (o, w) in by_in.get(m, ()):
                key = (i, o)
                prod_v = v * w
                prev = out.get(key)
                out[key] = prod_v if prev is None else prev + prod_v
        return LinOp({k: v for k, v in out.items() if not v.is_zero()})

    def __add__(self, other: "LinOp") -> "LinOp":
        out = dict(self.entries)
        for k, v in other.entries.items():
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
        return LinOp({k: v for k, v in out.items() if not v.is_zero()})

    def scale(self, c) -> "LinOp":
        c = RatFn.of(c)
        return LinOp({k: v * c for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinOp):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        zero = RatFn(0)
        return all(self.entries.get(k, zero) == other.entries.get(k, zero)
                   for k in keys)

    def entry(self, i: Key, o: Key) -> RatFn:
        return self.entries.get((i, o), RatFn(0))

    def apply_covector(self, cov: Dict[Key, RatFn]) -> Dict[Key, RatFn]:
        out: Dict[Key, RatFn] = {}
        for (i, o), v in self.entries.items():
            c = cov.get(i)
            if c is None:
                continue
            term = c * v
            prev = out.get(o)
            out[o] = term if prev is None else prev + term
        return {k: v for k, v in out.items() if not v.is_zero()}

    def apply_vector(self, vec: Dict[Key, RatFn]) -> Dict[Key, RatFn]:
        """Contract on the out index: (M v)[i] = sum_o M[i,o] v[o]."""
        out: Dict[Key, RatFn] = {}
        for (i, o), m in self.entries.items():
            c = vec.get(o)
            if c is None:
                continue
            term = m * c
            prev = out.get(i)
            out[i] = term if prev is None else prev + term
        return {k: v for k, v in out.items() if not v.is_zero()}

    def __repr__(self):
        return f"LinOp({len(self.entries)} entries)"


def bits_keys(nlegs: int):
    return [tuple(b) for b in product((0, 1), repeat=nlegs)]


def r_table(z: RatFn, renorm: bool = False,
             cleared: bool = False) -> Dict[Tuple[int, int, int, int], RatFn]:
    """Six-vertex R weights: (in_a, in_b) -> (out_a, out_b) with ratio z =
    x_a / x_b.  With renorm the overall (1-tz)/(1-z) is divided out so that
    unitarity reads R(z) R(1/z) = 1; with cleared all weights are scaled by
    (1-z), making them polynomial (useful when an overall factor is
    irrelevant, e.g. for vanishing arguments)."""
    t = RatFn(V("t"))
    one = RatFn(1)
    if cleared:
        tbl = {(0, 0, 0, 0): one - t * z, (1, 1, 1, 1): one - t * z,
               (0, 1, 0, 1): t * (one - z), (1, 0, 1, 0): one - z,
               (0, 1, 1, 0): (one - t) * z, (1, 0, 0, 1): one - t}
        return tbl
    a = (one - t * z) / (one - z)
    b = (one - t) * z / (one - z)
    c = (one - t) / (one - z)
    tbl = {(0, 0, 0, 0): a, (1, 1, 1, 1): a,
           (0, 1, 0, 1): t, (1, 0, 1, 0): one,
           (0, 1, 1, 0): b, (1, 0, 0, 1): c}
    if renorm:
        return {k: v / a for k, v in tbl.items()}
    return tbl


def r_on_legs(nlegs: int, a: int, b: int, z: RatFn, renorm: bool = False,
              cleared: bool = False) -> LinOp:
    """Embed the R vertex acting on legs (a, b) into an nlegs operator."""
    tbl = r_table(z, renorm, cleared)
    entries = {}
    for key in bits_keys(nlegs):
        ia, ib = key[a], key[b]
        for (ta, tb, oa, ob), w in tbl.items():
            if (ta, tb) != (ia, ib):
                continue
            out = list(key)
            out[a], out[b] = oa, ob
            entries[(key, tuple(out))] = w
    return LinOp(entries)


def boson_keys(nlegs: int, mrange) -> list:
    return [bits + (m,) for bits in bits_keys(nlegs) for m in mrange]


def r_on_legs_boson(nlegs: int, a: int, b: int, z: RatFn, mrange,
                    renorm: bool = False) -> LinOp:
    """R on legs (a, b), identity on the trailing boson slot."""
    tbl = r_table(z, renorm)
    entries = {}
    for key in boson_keys(nlegs, mrange):
        ia, ib = key[a], key[b]
        for (ta, tb, oa, ob), w in tbl.items():
            if (ta, tb) != (ia, ib):
                continue
            out = list(key)
            out[a], out[b] = oa, ob
            entries[(key, tuple(out))] = w
    return LinOp(entries)


def l_on_leg_boson(nlegs: int, leg: int, site: Site, mrange) -> LinOp:
    """A tile operator acting on one leg and the boson slot."""
    entries = {}
    mset = set(mrange)
    for key in boson_keys(nlegs, mrange):
        edge_in, m_in = key[leg], key[-1]
        for eout, m_out, w in tile_options(site, edge_in, m_in):
            if m_out < 0 and not site.shifted:
                continue
            if m_out not in mset:
                continue
            out = list(key)
            out[leg], out[-1] = eout, m_out
            entries[(key, tuple(out))] = RatFn.of(w)
    return LinOp(entries)


def k_component(sa: int, sabar: int) -> LaurentPoly:
    """<K| component on the (a, abar) pair: (hole, particle) -> 1,
    (particle, hole) -> -t, zero otherwise."""
    if (sa, sabar) == (0, 1):
        return LaurentPoly.const(1)
    if (sa, sabar) == (1, 0):
        return -V("t")
    return LaurentPoly.zero()


def product_k_covector(nlegs: int, pairs) -> Dict[Key, RatFn]:
    """Tensor product of <K| covectors over the given (a, abar) leg pairs;
    every leg must belong to exactly one pair."""
    out: Dict[Key, RatFn] = {}
    for key in bits_keys(nlegs):
        w = LaurentPoly.const(1)
        for (a, abar) in pairs:
            w = w * k_component(key[a], key[abar])
            if w.is_zero():
                break
        if not w.is_zero():
            out[key] = RatFn(w)
    return out
