"""Section spaces over the projective line: the polynomial analogue of boxes.

A section of degree cap D over F_q is a polynomial of degree <= D; the
vanishing order at infinity is D minus the degree, so the rational points
are the q affine points plus infinity. P collects the sections vanishing at
no rational point (degree exactly dP, no affine root), G the nonzero sections
vanishing only at rational points (products of linear factors). Their product
A = PG satisfies |A| = |P||G|/(q-1) exactly, which the builder verifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, DegreeTooSmall, IdentityViolation, PivotNotInP, TooSmall
from .gf import GF
from .sets import ElementSet, PolyAmbient, growth_report, productset, sumset


@dataclass(frozen=True)
class SectionSet:
    """Deduplicated sections with shared (q, cap), plus provenance degrees."""

    elements: ElementSet
    d_p: int = None
    d_g: int = None

    @property
    def q(self):
        return self.elements.ambient.q

    @property
    def cap(self):
        return self.elements.ambient.cap

    @property
    def size(self):
        return self.elements.size

    def sorted(self):
        return self.elements.sorted()


def expected_p_size(q, d_p):
    """q^(dP+1) (1 - 1/q)^(q+1): the inclusion-exclusion count at genus 0."""
    val = Fraction(q) ** (d_p + 1) * (1 - Fraction(1, q)) ** (q + 1)
    assert val.denominator == 1
    return int(val)


def expected_g_size(q, d_g):
    """(q-1) * binom(dG + q, dG): split sections counted by root multisets."""
    return (q - 1) * math.comb(d_g + q, d_g)


def build_P_ff(q, d_p):
    """All sections of degree exactly dP with no root in F_q (cap dP).

    Requires dP >= q, the genus-0 threshold making the count exact.
    """
    if d_p < q:
        raise DegreeTooSmall(f"need dP >= q (= {q}), got {d_p}")
    gf = GF(q)
    ambient = PolyAmbient(q, d_p)
    members = []
    points = list(gf.elements())

    def rec(coeffs):
        if len(coeffs) == d_p:
            for lead in gf.units():
                poly = tuple(coeffs) + (lead,)
                if all(gf.poly_eval(poly, a) != 0 for a in points):
                    members.append(poly)
            return
        for c in gf.elements():
            rec(coeffs + [c])

    rec([])
    out = SectionSet(ElementSet(ambient, members), d_p=d_p)
    assert out.size == expected_p_size(q, d_p)
    return out


def build_G_ff(q, d_g):
    """All nonzero sections of cap dG splitting into linear factors over F_q.

    A section of degree e < dG vanishes to order dG - e at infinity, itself a
    rational point, so these are exactly the sections with all zeros rational:
    scalar times a degree <= dG product of (x - a) factors.
    """
    assert d_g >= 0
    gf = GF(q)
    ambient = PolyAmbient(q, d_g)
    members = set()
    points = list(gf.elements())

    def rec(poly, next_point_index, remaining):
        for scalar in gf.units():
            members.add(tuple(gf.mul(scalar, c) for c in poly) + (0,) * (d_g + 1 - len(poly)))
        if remaining == 0:
            return
        for idx in range(next_point_index, len(points)):
            a = points[idx]
            factor = (gf.neg(a), 1)
            rec(gf.poly_mul(poly, factor, d_g), idx, remaining - 1)

    rec((1,), 0, d_g)
    out = SectionSet(ElementSet(ambient, members), d_g=d_g)
    assert out.size == expected_g_size(q, d_g)
    return out


def build_A_ff(q, d_p, d_g):
    """A = P*G inside the cap-(dP+dG) space, verifying |A| = |P||G|/(q-1)."""
    p_set = build_P_ff(q, d_p)
    g_set = build_G_ff(q, d_g)
    a = productset(p_set.elements, g_set.elements)
    expected = p_set.size * g_set.size
    if expected % (q - 1) != 0 or a.size != expected // (q - 1):
        raise IdentityViolation(
            f"|PG| = {a.size} but |P||G|/(q-1) = {expected / (q - 1)}"
        )
    return SectionSet(a, d_p=d_p, d_g=d_g)


@dataclass(frozen=True)
class FfGrowthReport:
    growth: object
    sum_cap: int
    prod_cap: int
    sum_bound: int
    sum_bound_ok: bool

    def as_dict(self):
        out = self.growth.as_dict()
        out.update({
            "sumCap": self.sum_cap,
            "prodCap": self.prod_cap,
            "sumBound": self.sum_bound,
            "sumBoundOk": self.sum_bound_ok,
        })
        return out


def ff_growth_report(a):
    """Growth sizes of a built A = PG, with the Riemann-Roch sum envelope.

    A+A stays in the cap-(dP+dG) space, so |A+A| <= q^(dP+dG+1); the product
    set lives in the doubled cap. Any element escaping its cap would be an
    arithmetic bug and raises CapExceeded.
    """
    if a.d_p is None or a.d_g is None:
        raise TooSmall("growth report needs a set built by build_A_ff")
    q = a.q
    cap = a.cap
    gf = GF(q)
    sums = sumset(a.elements, a.elements)
    for vec in sums:
        if gf.poly_degree(vec) > cap:
            raise CapExceeded(f"sum {vec} exceeds cap {cap}")  # pragma: no cover
    prods = productset(a.elements, a.elements)
    bound = q ** (a.d_p + a.d_g + 1)
    if sums.size > bound:
        raise CapExceeded(f"|A+A| = {sums.size} exceeds q^(dP+dG+1) = {bound}")
    rep = growth_report(a.elements)
    return FfGrowthReport(
        growth=rep,
        sum_cap=cap,
        prod_cap=2 * cap,
        sum_bound=bound,
        sum_bound_ok=sums.size <= bound,
    )


def ff_to_rational(a, pivot):
    """Identify A with a subset of F_q(x) by dividing by a pivot from P.

    Division by a fixed nonzero section is a bijection compatible with sums
    and products, so growth sizes are unchanged; this returns the metadata
    note only and never recomputes anything.
    """
    gf = GF(a.q)
    pivot = tuple(pivot)
    p_candidates = build_P_ff(a.q, a.d_p) if a.d_p is not None else None
    if p_candidates is None or pivot + (0,) * (p_candidates.cap + 1 - len(pivot)) not in p_candidates.elements:
        raise PivotNotInP(f"{pivot} is not in the generating P")
    pivot_str = gf.poly_str(pivot)
    return {
        "pivot": pivot_str,
        "identification": [f"({gf.poly_str(vec)})/({pivot_str})" for vec in a.sorted()],
        "sizesInvariant": True,
    }
