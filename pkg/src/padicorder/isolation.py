"""Certified complex root isolation with exact rational boxes.

The subdivision engine is sympy's exact Collins-Krandick style isolator
(integer/rational arithmetic throughout, winding-style root counting on
rectangle boundaries); this module wraps it behind rational ComplexBox
values and enforces the contracts needed downstream: boxes of width at
most eps, pairwise disjoint as closed sets, one root per box, and nested
refinement when eps shrinks along a dyadic schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import ZZ
from sympy.polys.rootisolation import (
    dup_isolate_complex_roots_sqf,
    dup_isolate_real_roots_sqf,
)

from .errors import NotSquarefree
from .intervals import RationalInterval
from .intpoly import IntPolynomial, is_squarefree


@dataclass(frozen=True)
class ComplexBox:
    """An axis-aligned rational rectangle in the complex plane."""

    real: RationalInterval
    imag: RationalInterval

    @property
    def width(self) -> Fraction:
        return max(self.real.width, self.imag.width)

    def contains(self, re, im) -> bool:
        return self.real.contains(re) and self.imag.contains(im)

    def contains_box(self, other: "ComplexBox") -> bool:
        return self.real.contains_interval(other.real) and self.imag.contains_interval(
            other.imag
        )

    def overlaps(self, other: "ComplexBox") -> bool:
        return self.real.intersects(other.real) and self.imag.intersects(other.imag)

    def mod_squared_interval(self) -> RationalInterval:
        """Exact bounds of |z|^2 over the closed box."""

        def axis_min(iv: RationalInterval) -> Fraction:
            if iv.lo <= 0 <= iv.hi:
                return Fraction(0)
            return min(abs(iv.lo), abs(iv.hi))

        def axis_max(iv: RationalInterval) -> Fraction:
            return max(abs(iv.lo), abs(iv.hi))

        lo = axis_min(self.real) ** 2 + axis_min(self.imag) ** 2
        hi = axis_max(self.real) ** 2 + axis_max(self.imag) ** 2
        return RationalInterval(lo, hi)

    def straddles_unit_circle(self) -> bool:
        m2 = self.mod_squared_interval()
        return m2.lo <= 1 <= m2.hi

    def __str__(self):
        return f"{self.real} x {self.imag}"


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class _LiveRoot:
    """A sympy isolating interval being refined; converts to ComplexBox."""

    def __init__(self, obj, is_real: bool):
        self.obj = obj
        self.is_real = is_real

    def box(self) -> ComplexBox:
        if self.is_real:
            a, b = _frac(self.obj.a), _frac(self.obj.b)
            if a > b:
                a, b = b, a
            return ComplexBox(RationalInterval(a, b), RationalInterval(0, 0))
        o = self.obj
        return ComplexBox(
            RationalInterval(_frac(o.ax), _frac(o.bx)),
            RationalInterval(_frac(o.ay), _frac(o.by)),
        )

    def refine(self) -> bool:
        """One bisection step; False when the interval is already a point."""
        if self.is_real and self.obj.a == self.obj.b:
            return False
        self.obj = self.obj.refine()
        return True


def isolate_roots(f: IntPolynomial, eps) -> list[ComplexBox]:
    """Isolate all complex roots of a squarefree integer polynomial.

    Returns exactly deg(f) pairwise-disjoint closed boxes of width at
    most eps, each containing one root, sorted by (Re lo, Im lo).  The
    refinement schedule is deterministic bisection, so the boxes for
    eps/2 are contained in the boxes for eps.
    """
    if f.is_constant():
        return []
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} has a repeated factor")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")

    dup = [ZZ(c) for c in reversed(f.coeffs)]
    live = [
        _LiveRoot(iv, True)
        for iv in dup_isolate_real_roots_sqf(dup, ZZ, blackbox=True)
    ]
    live += [
        _LiveRoot(iv, False)
        for iv in dup_isolate_complex_roots_sqf(dup, ZZ, blackbox=True)
    ]
    assert len(live) == f.degree

    # Phase 1 (eps-independent): closed boxes may share boundary points as
    # returned; refine every box involved in an overlap until pairwise
    # disjoint.  Running this before the width phase keeps the whole
    # schedule monotone in eps, which makes dyadic refinements nest.
    while True:
        boxes = [r.box() for r in live]
        clashing = set()
        for i in range(len(live)):
            for j in range(i + 1, len(live)):
                if boxes[i].overlaps(boxes[j]):
                    clashing.update((i, j))
        if not clashing:
            break
        for i in sorted(clashing):
            live[i].refine()

    # Phase 2: shrink to the requested width.
    for r in live:
        while r.box().width > eps:
            r.refine()

    return sorted(
        (r.box() for r in live),
        key=lambda b: (b.real.lo, b.imag.lo, b.real.hi, b.imag.hi),
    )
