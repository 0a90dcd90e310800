"""Rational functions: unreduced fractions of Laurent polynomials.

Equality is decided by cross-multiplication, so no multivariate gcd is ever
needed.  Growth of numerators/denominators is kept in check by a cheap
content reduction (integer content plus common monomial factors) and by
opportunistic trial division against caller-supplied factor lists, which is
enough because every denominator in this problem domain is an explicit
product of binomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable

from .errors import NotDivisible, ZeroDenominator
from .poly import LaurentPoly, Mono, _mono, exact_divide, mono_mul


def _content_reduce(num: LaurentPoly, den: LaurentPoly):
    """Strip common monomial and rational content from num/den."""
    if num.is_zero():
        return num, LaurentPoly.const(1) if not den.is_zero() else den
    lows: Dict[str, int] = {}
    first = True
    for poly in (num, den):
        for m in poly.terms:
            d = dict(m)
            if first:
                lows = dict(d)
                first = False
            else:
                for v in list(lows):
                    lows[v] = min(lows[v], d.get(v, 0))
                for v in list(d):
                    if v not in lows:
                        lows[v] = min(0, d[v])
            if not lows:
                break
    shift = _mono((v, -e) for v, e in lows.items())
    if shift:
        num = LaurentPoly({mono_mul(m, shift): c for m, c in num.terms.items()})
        den = LaurentPoly({mono_mul(m, shift): c for m, c in den.terms.items()})
    # rational content of the denominator: normalize its leading coeff to 1
    _, lc = den.leading()
    if lc != 1:
        inv = 1 / lc
        num = LaurentPoly({m: c * inv for m, c in num.terms.items()})
        den = LaurentPoly({m: c * inv for m, c in den.terms.items()})
    return num, den


class RatFn:
    """num / den with den never the zero polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.const(1)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        self.num, self.den = _content_reduce(num, den)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(v) -> "RatFn":
        if isinstance(v, RatFn):
            return v
        return RatFn(v)

    @staticmethod
    def var(name: str, exp: int = 1) -> "RatFn":
        return RatFn(LaurentPoly.var(name, exp))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> LaurentPoly:
        """Exact quotient num/den; raises NotDivisible when not polynomial."""
        if self.den.is_one():
            return self.num
        return exact_divide(self.num, self.den)

    def is_poly(self) -> bool:
        try:
            self.as_poly()
            return True
        except NotDivisible:
            return False

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatFn":
        other = RatFn.of(other)
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFn.of(other))

    def __rsub__(self, other):
        return RatFn.of(other) + (-self)

    def __mul__(self, other) -> "RatFn":
        other = RatFn.of(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFn":
        other = RatFn.of(other)
        if other.num.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFn.of(other) / self

    def __pow__(self, k: int) -> "RatFn":
        if k < 0:
            return RatFn(self.den, self.num) ** (-k)
        return RatFn(self.num ** k, self.den ** k)

    def inv(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        return RatFn(self.den, self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFn.of(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFn is not hashable (equality is by cross-multiplication)")

    # -- simplification ----------------------------------------------------

    def reduce_by(self, factors: Iterable[LaurentPoly]) -> "RatFn":
        """Cancel every supplied factor common to numerator and denominator."""
        num, den = self.num, self.den
        for f in factors:
            if f.is_zero() or f.is_one():
                continue
            while True:
                try:
                    n2 = exact_divide(num, f)
                    d2 = exact_divide(den, f)
                except NotDivisible:
                    break
                num, den = n2, d2
        return RatFn(num, den)

    def __repr__(self):
        if self.den.is_one():
            return f"RatFn({self.num.to_text()})"
        return f"RatFn(({self.num.to_text()}) / ({self.den.to_text()}))"


def substitute(p: LaurentPoly, bindings: Dict[str, "RatFn | LaurentPoly | int | Fraction"]) -> RatFn:
    """Exact substitution of rational functions for variables.

    Unbound variables pass through; raises ZeroDenominator when a negative
    power of a zero value is requested.
    """
    rbind = {v: RatFn.of(b) for v, b in bindings.items()}
    out = RatFn(0)
    cache: Dict[tuple, RatFn] = {}
    for m, c in p.terms.items():
        acc = RatFn(LaurentPoly.const(c))
        for v, e in m:
            if v in rbind:
                key = (v, e)
                pw = cache.get(key)
                if pw is None:
                    base = rbind[v]
                    if e < 0 and base.num.is_zero():
                        raise ZeroDenominator(f"negative power of zero for {v}")
                    pw = base ** e
                    cache[key] = pw
                acc = acc * pw
            else:
                acc = acc * RatFn(LaurentPoly.var(v, e))
        out = out + acc
    return out


def substitute_ratfn(f: RatFn, bindings) -> RatFn:
    num = substitute(f.num, bindings)
    den = substitute(f.den, bindings)
    if den.is_zero():
        raise ZeroDenominator("substitution sent the denominator to zero")
    return num / den
