"""Haar-measure computation and certified integration on p-adic polydiscs.

Regions are cylinders ``center + p^depth * Zp^n`` with the normalization
mu(Zp^n) = 1, so a depth-m cylinder has measure exactly p^(-m*n).
Densities are |f|^(1/m) for a rational-coefficient polynomial f; their
integrals are computed by residue-class subdivision and returned as
certified rational enclosures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DepthZero, NonIntegralDensity
from .intervals import RationalInterval, p_power_enclosure
from .padic import rational_valuation, INF, _check_prime


# --- multivariate polynomials over Q ---------------------------------------


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial in n variables with exact rational coefficients."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def from_dict(cls, nvars: int, d: dict) -> "MultiPoly":
        terms = tuple(
            sorted(
                ((tuple(e), Fraction(c)) for e, c in d.items() if c != 0),
                key=lambda t: t[0],
            )
        )
        for e, _ in terms:
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
        return cls(nvars, terms)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls.from_dict(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls.from_dict(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def univariate(cls, coeffs) -> "MultiPoly":
        return cls.from_dict(1, {(i,): Fraction(c) for i, c in enumerate(coeffs)})

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms:
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) + c
        return MultiPoly.from_dict(self.nvars, d)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return MultiPoly.from_dict(self.nvars, d)

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly.from_dict(self.nvars, {e: k * c for e, k in self.terms})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, i: int) -> "MultiPoly":
        d: dict = {}
        for e, c in self.terms:
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                d[tuple(e2)] = d.get(tuple(e2), Fraction(0)) + c * e[i]
        return MultiPoly.from_dict(self.nvars, d)

    def compose(self, args: list["MultiPoly"]) -> "MultiPoly":
        """Substitute args[i] for variable i; args share a common nvars."""
        if len(args) != self.nvars:
            raise ValueError("wrong number of substitutions")
        nv = args[0].nvars
        out = MultiPoly.constant(nv, 0)
        powers: list[dict[int, MultiPoly]] = [
            {0: MultiPoly.constant(nv, 1)} for _ in args
        ]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * args[i]
            return cache[k]

        for e, c in self.terms:
            term = MultiPoly.constant(nv, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def min_p_valuation(self, p: int):
        """min over coefficients of v_p; INF for the zero polynomial."""
        if self.is_zero:
            return INF
        return min(rational_valuation(c, p) for _, c in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)


def _det(m: list[list[MultiPoly]]) -> MultiPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    nv = m[0][0].nvars
    out = MultiPoly.constant(nv, 0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


# --- domain types -----------------------------------------------------------


@dataclass(frozen=True)
class Cylinder:
    """center + p^depth * Zp^dimension."""

    prime: int
    dimension: int
    center: tuple[Fraction, ...]
    depth: int

    def __post_init__(self):
        _check_prime(self.prime)
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        center = tuple(Fraction(c) for c in self.center)
        if len(center) != self.dimension:
            raise ValueError("center has wrong dimension")
        if any(c.denominator % self.prime == 0 for c in center):
            raise ValueError("center must be p-integral")
        object.__setattr__(self, "center", center)

    @classmethod
    def unit_polydisc(cls, p: int, n: int = 1) -> "Cylinder":
        return cls(p, n, (Fraction(0),) * n, 0)

    def measure(self) -> Fraction:
        return Fraction(1, self.prime ** (self.depth * self.dimension))

    def children(self):
        """The p^n depth+1 sub-cylinders partitioning this one."""
        step = self.prime**self.depth
        for residues in itertools.product(range(self.prime), repeat=self.dimension):
            center = tuple(c + step * r for c, r in zip(self.center, residues))
            yield Cylinder(self.prime, self.dimension, center, self.depth + 1)

    def same_cylinder(self, other: "Cylinder") -> bool:
        """Equality as subsets of Qp^n (centers agree mod p^depth)."""
        if (self.prime, self.dimension, self.depth) != (
            other.prime,
            other.dimension,
            other.depth,
        ):
            return False
        return all(
            rational_valuation(a - b, self.prime) >= self.depth
            if a != b
            else True
            for a, b in zip(self.center, other.center)
        )


def cylinder_measure(c: Cylinder) -> Fraction:
    return c.measure()


@dataclass(frozen=True)
class PolyDensity:
    """The density |f|^(1/root_index); root_index 1 is the plain |f| case."""

    f: MultiPoly
    root_index: int = 1

    def __post_init__(self):
        if self.f.is_zero:
            raise ValueError("density polynomial must be nonzero")
        if self.root_index < 1:
            raise ValueError("root_index must be >= 1")


@dataclass(frozen=True)
class PolyMap:
    """Polynomial map with symbolically computed Jacobian determinant."""

    components: tuple[MultiPoly, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("empty map")
        nv = self.components[0].nvars
        if any(c.nvars != nv for c in self.components):
            raise ValueError("components disagree on variable count")

    @property
    def source_dim(self) -> int:
        return self.components[0].nvars

    @property
    def target_dim(self) -> int:
        return len(self.components)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls(tuple(MultiPoly.variable(n, i) for i in range(n)))

    def jacobian_det(self) -> MultiPoly:
        if self.target_dim != self.source_dim:
            raise ValueError("Jacobian determinant needs a square map")
        n = self.source_dim
        return _det(
            [[self.components[i].partial(j) for j in range(n)] for i in range(n)]
        )

    def __call__(self, point) -> tuple[Fraction, ...]:
        return tuple(c(point) for c in self.components)


# --- integration ------------------------------------------------------------


def _scale_bits(p: int, max_depth: int) -> int:
    # dyadic grid fine enough that kth-root enclosures err below p^-(D+2)
    return (max_depth + 2) * max(p.bit_length(), 1)


def _density_enclosure(p, valuation, m, bits) -> RationalInterval:
    """Enclosure of p^(-valuation/m)."""
    return p_power_enclosure(p, Fraction(-valuation, m), bits)


def integrate(
    d: PolyDensity, region: Cylinder, max_depth: int
) -> RationalInterval:
    """Certified enclosure of the integral of |f|^(1/m) over the region.

    Subdivides into residue-class cylinders; on a depth-k cylinder with
    center a and v_p(f(a)) < k the valuation of f is constant (because
    f(x) = f(a) mod p^k for p-integral f), so the contribution is exact.
    Cylinders unresolved at max_depth contribute [0, p^(-D/m) * measure].

    Coefficients only need to be p-integral up to a power of p: the
    p-part of the denominators is cleared first and the integral scaled
    by the corresponding exact power of |1/p^t| = p^t.
    """
    p, m = region.prime, d.root_index
    if max_depth <= region.depth:
        raise DepthZero("max_depth must exceed the region depth")
    f = d.f
    if f.nvars != region.dimension:
        raise NonIntegralDensity(
            f"density has {f.nvars} variables, region has {region.dimension}"
        )
    tmin = f.min_p_valuation(p)
    scale = RationalInterval.point(1)
    if tmin < 0:
        t = -int(tmin)
        f = f.scale(Fraction(p) ** t)
        scale = _density_enclosure(p, -Fraction(t), m, _scale_bits(p, max_depth))
    bits = _scale_bits(p, max_depth)

    def go(cyl: Cylinder) -> RationalInterval:
        fa = f(cyl.center)
        v = rational_valuation(fa, p)
        if v is not INF and v < cyl.depth:
            return _density_enclosure(p, v, m, bits).scale(cyl.measure())
        if cyl.depth >= max_depth:
            hi = _density_enclosure(p, max_depth, m, bits).hi * cyl.measure()
            return RationalInterval(Fraction(0), hi)
        total = RationalInterval.point(0)
        for child in cyl.children():
            total = total + go(child)
        return total

    return go(region) * scale


def pushforward_cylinder_measure(
    pi: PolyMap, base_cyl: Cylinder, d: PolyDensity, max_depth: int
) -> RationalInterval:
    """Enclosure of the integral of the density over pi^(-1)(base) inter Zp^n.

    For p-integral components, pi(x) = pi(a) mod p^k on a depth-k source
    cylinder, so membership of the whole cylinder in the preimage is
    decided exactly once the source depth reaches the base depth; there
    are no boundary cylinders.
    """
    p = base_cyl.prime
    if pi.target_dim != base_cyl.dimension:
        raise ValueError("map target dimension does not match base cylinder")
    if any(c.min_p_valuation(p) < 0 for c in pi.components):
        raise NonIntegralDensity("map components must be p-integral")
    source = Cylinder.unit_polydisc(p, pi.source_dim)

    def in_base(point) -> bool:
        img = pi(point)
        for y, c in zip(img, base_cyl.center):
            if y != c and rational_valuation(y - c, p) < base_cyl.depth:
                return False
        return True

    def split(cyl: Cylinder) -> RationalInterval:
        if cyl.depth >= base_cyl.depth:
            if not in_base(cyl.center):
                return RationalInterval.point(0)
            return integrate(d, cyl, max_depth)
        total = RationalInterval.point(0)
        for child in cyl.children():
            total = total + split(child)
        return total

    return split(source)


def _unit_jacobian_condition(phi: PolyMap, p: int) -> bool:
    """Sufficient condition: det J has a unit constant term and all other
    coefficients in pZp; rejects some valid maps, accepts no invalid one.
    """
    det = phi.jacobian_det()
    for e, c in det.terms:
        v = rational_valuation(c, p)
        if sum(e) == 0:
            if v != 0:
                return False
        elif v < 1:
            return False
    if not any(sum(e) == 0 for e, _ in det.terms):
        return False
    return True


def _bijective_on_polydisc(phi: PolyMap, p: int) -> bool:
    """Structural condition making phi a bijection of Zp^n: p-integral
    coefficients, linear part invertible mod p, and every coefficient of
    total degree >= 2 divisible by p (constant translations are fine).
    """
    n = phi.source_dim
    if phi.target_dim != n:
        return False
    linear = [[MultiPoly.constant(n, 0)] * n for _ in range(n)]
    for i, comp in enumerate(phi.components):
        for e, c in comp.terms:
            v = rational_valuation(c, p)
            if v < 0:
                return False
            deg = sum(e)
            if deg >= 2 and v < 1:
                return False
            if deg == 1:
                j = e.index(1)
                linear[i][j] = MultiPoly.constant(n, c)
    det_lin = _det(linear)
    value = det_lin((Fraction(0),) * n)
    return value != 0 and rational_valuation(value, p) == 0


def change_of_variables_check(
    phi: PolyMap, d: PolyDensity, p: int, max_depth: int
):
    """Compare both sides of the substitution identity on the unit polydisc.

    Left side integrates the density over phi(Zp^n) = Zp^n; the right
    side integrates |f(phi(x))|^(1/m) * |det J(x)| over Zp^n, realized as
    the single density |f(phi(x)) * det J(x)^m|^(1/m).  Returns
    (overlap, left interval, right interval).
    """
    from .errors import NonUnitJacobian

    n = phi.source_dim
    if not (_unit_jacobian_condition(phi, p) and _bijective_on_polydisc(phi, p)):
        raise NonUnitJacobian(
            "map does not satisfy the unit-Jacobian sufficient condition"
        )
    region = Cylinder.unit_polydisc(p, n)
    lhs = integrate(d, region, max_depth)
    m = d.root_index
    composed = d.f.compose(list(phi.components))
    rhs_poly = composed * (phi.jacobian_det() ** m)
    rhs = integrate(PolyDensity(rhs_poly, m), region, max_depth)
    return lhs.intersects(rhs), lhs, rhs


def scaling_law_check(
    c, d: PolyDensity, region: Cylinder, max_depth: int
):
    """Check integrate(|c*f|^(1/m)) against |c|_p^(1/m) * integrate(|f|^(1/m)).

    Returns (overlap, scaled-direct interval, scaled-reference interval).
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("scalar must be nonzero")
    p, m = region.prime, d.root_index
    lhs = integrate(PolyDensity(d.f.scale(c), m), region, max_depth)
    base = integrate(d, region, max_depth)
    factor = _density_enclosure(
        p, rational_valuation(c, p), m, _scale_bits(p, max_depth)
    )
    rhs = base * factor
    return lhs.intersects(rhs), lhs, rhs
