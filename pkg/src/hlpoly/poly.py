"""Sparse multivariate Laurent polynomials over exact rationals.

A polynomial is a dict mapping monomials to nonzero Fraction coefficients.
A monomial is a sorted tuple of (variable, exponent) pairs with nonzero
integer exponents, which may be negative.  The zero polynomial is the empty
dict.  All arithmetic is exact; no floats ever appear.

Variables are drawn from a fixed alphabet: x1, x2, ..., y1, y2, ..., and the
single-letter parameters t, u, z, g, d, s, plus the auxiliary square roots
w (w^2 = z) and r (r^2 = t) used for half-integer specializations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import NotDivisible

Mono = Tuple[Tuple[str, int], ...]

_CLASS_RANK = {"x": 0, "y": 1, "t": 2, "u": 3, "z": 4, "g": 5, "d": 6,
               "s": 7, "w": 8, "r": 9}


def var_key(name: str) -> Tuple[int, int]:
    """Sort key for a variable name: block rank then numeric index."""
    head = name[0]
    if head not in _CLASS_RANK:
        raise ValueError(f"unknown variable {name!r}")
    idx = int(name[1:]) if len(name) > 1 else 0
    return (_CLASS_RANK[head], idx)


def _mono(pairs: Iterable[Tuple[str, int]]) -> Mono:
    kept = [(v, e) for v, e in pairs if e != 0]
    kept.sort(key=lambda p: var_key(p[0]))
    return tuple(kept)


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        n = exps.get(v, 0) + e
        if n == 0:
            exps.pop(v, None)
        else:
            exps[v] = n
    return _mono(exps.items())


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b in the Laurent sense (always defined)."""
    return mono_mul(a, tuple((v, -e) for v, e in b))


def mono_cmp_key(m: Mono):
    """Total-order key for monomials (used only where true lex is not needed)."""
    return tuple((var_key(v), e) for v, e in m)


def _lex_greater(a: Mono, b: Mono) -> bool:
    """True if a > b in lex order on exponent vectors (var_key order)."""
    ia = ib = 0
    while ia < len(a) or ib < len(b):
        ka = var_key(a[ia][0]) if ia < len(a) else None
        kb = var_key(b[ib][0]) if ib < len(b) else None
        if ka is not None and (kb is None or ka < kb):
            ea, eb = a[ia][1], 0
            ia += 1
        elif kb is not None and (ka is None or kb < ka):
            ea, eb = 0, b[ib][1]
            ib += 1
        else:
            ea, eb = a[ia][1], b[ib][1]
            ia += 1
            ib += 1
        if ea != eb:
            return ea > eb
    return False


def mono_text(m: Mono) -> str:
    return " * ".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Mono, Fraction] | None = None):
        self.terms = terms or {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def const(c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({(): c} if c else {})

    @staticmethod
    def var(name: str, exp: int = 1) -> "LaurentPoly":
        var_key(name)  # validates
        if exp == 0:
            return LaurentPoly.const(1)
        return LaurentPoly({((name, exp),): Fraction(1)})

    @staticmethod
    def term(c, pairs: Iterable[Tuple[str, int]]) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly({_mono(pairs): c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): Fraction(1)}

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree(self, v: str) -> int:
        """Largest exponent of v (0 if v absent everywhere)."""
        best = None
        for m in self.terms:
            e = dict(m).get(v, 0)
            if best is None or e > best:
                best = e
        return 0 if best is None else best

    def low_degree(self, v: str) -> int:
        best = None
        for m in self.terms:
            e = dict(m).get(v, 0)
            if best is None or e < best:
                best = e
        return 0 if best is None else best

    def coeff_of(self, v: str, k: int) -> "LaurentPoly":
        """Coefficient of v^k, as a polynomial in the remaining variables."""
        out: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.pop(v, 0) == k:
                out[_mono(d.items())] = c
        return LaurentPoly(out)

    def split_by(self, v: str) -> Dict[int, "LaurentPoly"]:
        """Split into {exponent of v: coefficient polynomial}."""
        buckets: Dict[int, Dict[Mono, Fraction]] = {}
        for m, c in self.terms.items():
            d = dict(m)
            k = d.pop(v, 0)
            buckets.setdefault(k, {})[_mono(d.items())] = c
        return {k: LaurentPoly(t) for k, t in buckets.items()}

    def leading(self) -> Tuple[Mono, Fraction]:
        lt = None
        for m in self.terms:
            if lt is None or _lex_greater(m, lt):
                lt = m
        return lt, self.terms[lt]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            n = out.get(m)
            if n is None:
                out[m] = c
            else:
                n = n + c
                if n:
                    out[m] = n
                else:
                    del out[m]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Mono, Fraction] = {}
        for mb, cb in b.items():
            if not mb:
                for ma, ca in a.items():
                    n = out.get(ma, _F0) + ca * cb
                    if n:
                        out[ma] = n
                    else:
                        out.pop(ma, None)
                continue
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                n = out.get(m, _F0) + ca * cb
                if n:
                    out[m] = n
                else:
                    out.pop(m, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_single_term():
                [(m, c)] = self.terms.items()
                inv = LaurentPoly({tuple((v, -e) for v, e in m): 1 / c})
                return inv ** (-k)
            raise NotDivisible("negative power of a non-monomial polynomial")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ------------------------------------------------------

    def subs_poly(self, bindings: Dict[str, "LaurentPoly"]) -> "LaurentPoly":
        """Substitute polynomials for variables.

        Bindings of negative powers require the bound value to be a single
        term (a unit of the Laurent ring); general rational substitution
        lives in ratfn.substitute.
        """
        out = LaurentPoly.zero()
        cache: Dict[Tuple[str, int], LaurentPoly] = {}
        for m, c in self.terms.items():
            acc = LaurentPoly.const(c)
            for v, e in m:
                if v in bindings:
                    p = cache.get((v, e))
                    if p is None:
                        p = bindings[v] ** e
                        cache[(v, e)] = p
                    acc = acc * p
                else:
                    acc = acc * LaurentPoly.var(v, e)
            out = out + acc
        return out

    # -- printing / parsing ------------------------------------------------

    def sorted_terms(self):
        """Terms in descending lexicographic order on exponent vectors."""
        import functools

        def cmp(a, b):
            if a[0] == b[0]:
                return 0
            return -1 if _lex_greater(a[0], b[0]) else 1

        return sorted(self.terms.items(), key=functools.cmp_to_key(cmp))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m:
                parts.append(f"{c} * {mono_text(m)}")
            else:
                parts.append(str(c))
        return " + ".join(parts)

    @staticmethod
    def from_text(s: str) -> "LaurentPoly":
        s = s.strip()
        if s == "0":
            return LaurentPoly.zero()
        out = LaurentPoly.zero()
        for chunk in s.split(" + "):
            bits = [b.strip() for b in chunk.split("*")]
            c = Fraction(bits[0])
            pairs = []
            for b in bits[1:]:
                if "^" in b:
                    v, e = b.split("^")
                    pairs.append((v.strip(), int(e)))
                else:
                    pairs.append((b, 1))
            out = out + LaurentPoly.term(c, pairs)
        return out

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


_F0 = Fraction(0)


def _coerce(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return LaurentPoly.const(v)
    raise TypeError(f"cannot coerce {type(v)} to LaurentPoly")


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with p = q * r, or raise NotDivisible.

    Works in the Laurent ring by shifting both arguments into the ordinary
    polynomial range, then doing heap-driven leading-term division (sound
    and complete for exact division over an integral domain).
    """
    import heapq

    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    if q.is_single_term():
        [(mq, cq)] = q.terms.items()
        inv = tuple((v, -e) for v, e in mq)
        return LaurentPoly({mono_mul(m, inv): c / cq for m, c in p.terms.items()})

    def shift_of(poly: LaurentPoly) -> Mono:
        # normalize every variable's minimum exponent to exactly 0, so the
        # quotient (whose min exponents are the differences of the operands')
        # is an ordinary polynomial in the shifted frame
        lows: Dict[str, int] = {}
        for v in poly.variables():
            lows[v] = min(dict(m).get(v, 0) for m in poly.terms)
        return _mono({v: -e for v, e in lows.items() if e != 0}.items())

    sp, sq = shift_of(p), shift_of(q)
    pp = {mono_mul(m, sp): c for m, c in p.terms.items()}
    qq = [(m, c) for m, c in q.terms.items()]
    qq = [(mono_mul(m, sq), c) for m, c in qq]
    varlist = sorted({v for m in list(pp) + [m for m, _ in qq] for v, _ in m},
                     key=var_key)
    vidx = {v: k for k, v in enumerate(varlist)}

    def key(m: Mono):
        out = [0] * len(varlist)
        for v, e in m:
            out[vidx[v]] = -e
        return tuple(out)

    mq_best = min(qq, key=lambda mc: key(mc[0]))
    mq, cq = mq_best
    qq_rest = [(m, c) for m, c in qq if m != mq]
    heap = [(key(m), m) for m in pp]
    heapq.heapify(heap)
    quot: Dict[Mono, Fraction] = {}
    while heap:
        k, mp = heapq.heappop(heap)
        cp = pp.get(mp)
        if not cp:
            continue
        del pp[mp]
        m = mono_div(mp, mq)
        if any(e < 0 for _, e in m):
            raise NotDivisible("polynomials do not divide exactly")
        c = cp / cq
        quot[m] = c
        for (mq2, cq2) in qq_rest:
            mm = mono_mul(m, mq2)
            prev = pp.get(mm)
            if prev is None:
                pp[mm] = -c * cq2
                heapq.heappush(heap, (key(mm), mm))
            else:
                nv = prev - c * cq2
                if nv:
                    pp[mm] = nv
                else:
                    del pp[mm]
    # undo the shifts: p = pp / sp, q = qq / sq, so r = quot * sq / sp
    fix = mono_div(sq, sp)
    return LaurentPoly({mono_mul(m, fix): c for m, c in quot.items()})


def divides(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True if q divides p exactly."""
    try:
        exact_divide(p, q)
        return True
    except NotDivisible:
        return False


# Convenience shared constants
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.zero()


def V(name: str, exp: int = 1) -> LaurentPoly:
    """Shorthand variable constructor."""
    return LaurentPoly.var(name, exp)


def fprod(factors) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for f in factors:
        out = out * f
    return out
