"""Truncated power series in a grading variable, with exact coefficients.

`truncate_graded` realizes formal expansion of a rational function whose
denominator is invertible as a power series in the grading variable; the
Series class is the working representation for the identity harness, where
both sides of each identity are filtered by a bookkeeping variable.
"""

from __future__ import annotations

from typing import Dict

from .errors import NotDivisible, NotExpandable
from .poly import LaurentPoly, exact_divide
from .ratfn import RatFn


class Series:
    """Truncated series: {grade: coefficient poly}, grades 0..order kept.

    Coefficients are Laurent polynomials in the non-grading variables; the
    grading variable itself never appears inside a coefficient.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Dict[int, LaurentPoly], order: int):
        self.order = order
        self.coeffs = {k: p for k, p in coeffs.items()
                       if 0 <= k <= order and not p.is_zero()}

    @staticmethod
    def from_poly(p: LaurentPoly, var: str, order: int) -> "Series":
        return Series(p.split_by(var), order)

    @staticmethod
    def constant(p: LaurentPoly, order: int) -> "Series":
        return Series({0: p}, order)

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            out[k] = out.get(k, LaurentPoly.zero()) + p
        return Series(out, order)

    def __sub__(self, other: "Series") -> "Series":
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, p: LaurentPoly) -> "Series":
        return Series({k: c * p for k, c in self.coeffs.items()}, self.order)

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out: Dict[int, LaurentPoly] = {}
        for ka, pa in self.coeffs.items():
            for kb, pb in other.coeffs.items():
                k = ka + kb
                if k <= order:
                    out[k] = out.get(k, LaurentPoly.zero()) + pa * pb
        return Series(out, order)

    def divide_coeffs(self, q: LaurentPoly) -> "Series":
        """Exact coefficient-wise division by a grade-free polynomial."""
        return Series({k: exact_divide(p, q) for k, p in self.coeffs.items()},
                      self.order)

    def coeff(self, k: int) -> LaurentPoly:
        return self.coeffs.get(k, LaurentPoly.zero())

    def as_poly(self, var: str) -> LaurentPoly:
        out = LaurentPoly.zero()
        for k, p in self.coeffs.items():
            out = out + p * LaurentPoly.var(var, k) if k else out + p
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        for k in range(order + 1):
            if self.coeff(k) != other.coeff(k):
                return False
        return True

    def __repr__(self):
        parts = [f"[{k}] {p.to_text()}" for k, p in sorted(self.coeffs.items())]
        return "Series(" + "; ".join(parts) + f"; order={self.order})"


def expand_ratfn(f: RatFn, var: str, order: int) -> Series:
    """Series of num/den in `var` through the given order.

    The denominator's grade-0 part must be invertible as a formal power
    series.  When it is a single term (a unit of the Laurent ring) the
    recurrence stays polynomial; otherwise each coefficient is produced by
    certified exact division.
    """
    nparts = f.num.split_by(var)
    dparts = f.den.split_by(var)
    shift = min(dparts)
    if shift != 0:
        # factor the lowest denominator grade out of both sides
        dparts = {k - shift: p for k, p in dparts.items()}
        nparts = {k - shift: p for k, p in nparts.items()}
    if min(nparts, default=0) < 0:
        raise NotExpandable("pole in the grading variable at 0")
    d0 = dparts.get(0)
    if d0 is None or d0.is_zero():
        raise NotExpandable("denominator has zero grade-0 part")
    coeffs: Dict[int, LaurentPoly] = {}
    unit = d0.is_single_term()
    for k in range(order + 1):
        acc = nparts.get(k, LaurentPoly.zero())
        for j, dj in dparts.items():
            if 1 <= j <= k:
                prev = coeffs.get(k - j)
                if prev is not None:
                    acc = acc - dj * prev
        if acc.is_zero():
            continue
        if unit:
            coeffs[k] = exact_divide(acc, d0)
        else:
            try:
                coeffs[k] = exact_divide(acc, d0)
            except NotDivisible as exc:
                raise NotExpandable(
                    "series coefficients are not Laurent polynomials") from exc
    return Series(coeffs, order)


def truncate_graded(f: RatFn, grade_var: str, order: int) -> LaurentPoly:
    """Power-series expansion of f in grade_var through `order`, returned as
    a single Laurent polynomial in all variables."""
    return expand_ratfn(f, grade_var, order).as_poly(grade_var)
