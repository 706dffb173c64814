"""Assembly of the structured sets A = G*P and A = Bx(Y), with verification.

G is a unit box, P an additive box translated to sit around a positive
integer X, and A their product set. When the window ratio (X+r)/(X-r) stays
below the golden ratio no two distinct pairs (u, p) can collide, so A is a
direct product; the builder cross-checks that prediction and fails loudly on
any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boxes import (
    AdditiveBoxQuery,
    LogBoxQuery,
    abs_embedding_ge_scaled_exp,
    abs_embedding_le_scaled_exp,
    enum_additive_box,
    enum_unit_box,
)
from .errors import EnvelopeViolation, PredictionViolation, RadiusTooLarge
from .sets import ElementSet, RingAmbient, k_fold_product, k_fold_sum, productset, sumset


@dataclass(frozen=True)
class GPConstruction:
    ctx: object
    x: int
    r: Fraction
    y: Fraction
    units: ElementSet       # G
    interval_part: ElementSet  # P
    product: ElementSet     # A = G*P
    direct_product: bool

    @property
    def sizes(self):
        return {"G": self.units.size, "P": self.interval_part.size, "A": self.product.size}


def build_P(ctx, x, r):
    """The translate x + B+(r): all elements with every embedding in [x-r, x+r].

    Requires 0 <= r < x so every element is totally positive.
    """
    x = int(x)
    r = Fraction(r)
    assert x >= 1 and r >= 0
    if r >= x:
        raise RadiusTooLarge(f"radius {r} >= center {x}")
    return enum_additive_box(AdditiveBoxQuery(ctx, r, center=x))


def _ratio_below_golden(x, r):
    """Exact test (x+r)/(x-r) < (1+sqrt5)/2 via t^2 - t - 1 < 0 for t > 0."""
    t = (Fraction(x) + r) / (Fraction(x) - r)
    return t * t - t - 1 < 0


def build_GP(ctx, x, r, y):
    """Assemble G = Bx(y), P = x + B+(r), A = G*P, and verify directness.

    If (x+r)/(x-r) < phi then |A| = |G||P| is forced: a collision u1*p1 = u2*p2
    makes p1/p2 a unit with every embedding inside (1/phi, phi), hence 1.
    A false flag under that condition raises PredictionViolation.
    """
    r = Fraction(r)
    y = Fraction(y)
    units = enum_unit_box(LogBoxQuery(ctx, y))
    interval_part = build_P(ctx, x, r)
    product = productset(units, interval_part)
    direct = product.size == units.size * interval_part.size
    if _ratio_below_golden(Fraction(x), r) and not direct:
        raise PredictionViolation(
            f"window ratio below phi but |A|={product.size} != |G||P|="
            f"{units.size * interval_part.size}"
        )
    return GPConstruction(
        ctx=ctx, x=int(x), r=r, y=y,
        units=units, interval_part=interval_part, product=product,
        direct_product=direct,
    )


def build_mult_only(ctx, y):
    """The multiplicative-only set A = Bx(y)."""
    return enum_unit_box(LogBoxQuery(ctx, Fraction(y)))


@dataclass(frozen=True)
class EnvelopeReport:
    kind: str
    k: int
    sum_size: int
    sum_envelope_ok: bool
    product_size: int
    product_envelope_ok: bool
    gg_pp_size: int = None
    gg_psq_bound: int = None

    def as_dict(self):
        out = {
            "kind": self.kind,
            "k": self.k,
            "sumSize": self.sum_size,
            "sumEnvelopeOk": self.sum_envelope_ok,
            "productSize": self.product_size,
            "productEnvelopeOk": self.product_envelope_ok,
        }
        if self.gg_pp_size is not None:
            out["ggPpSize"] = self.gg_pp_size
            out["ggPsqBound"] = self.gg_psq_bound
        return out


def verify_gp_envelopes(construction):
    """Check, element by element, A+A inside B+(4x e^y) and AA inside GG*PP."""
    ctx = construction.ctx
    x, y = construction.x, construction.y
    a = construction.product
    sums = sumset(a, a)
    for vec in sums.sorted():
        for i in range(1, ctx.degree + 1):
            if not abs_embedding_le_scaled_exp(ctx, vec, i, 4 * x, y):
                raise EnvelopeViolation(f"sum {vec} escapes the additive envelope")
    gg = productset(construction.units, construction.units)
    pp = productset(construction.interval_part, construction.interval_part)
    prods = productset(a, a)
    if not prods.issubset(productset(gg, pp)):
        raise EnvelopeViolation("AA escapes GG*PP")
    return EnvelopeReport(
        kind="gp",
        k=2,
        sum_size=sums.size,
        sum_envelope_ok=True,
        product_size=prods.size,
        product_envelope_ok=True,
        gg_pp_size=gg.size * pp.size,
        gg_psq_bound=gg.size * construction.interval_part.size ** 2,
    )


def verify_mult_envelopes(ctx, units, y, k):
    """Check A^(k) inside Bx(kY) and kA inside B+(k e^Y), element by element."""
    y = Fraction(y)
    assert k >= 2
    kth_product = k_fold_product(units, k)
    for vec in kth_product.sorted():
        if abs(ctx.norm_vec(vec)) != 1:
            raise EnvelopeViolation(f"{vec} in the k-fold product is not a unit")
        for i in range(1, ctx.degree + 1):
            if not abs_embedding_le_scaled_exp(ctx, vec, i, 1, k * y):
                raise EnvelopeViolation(f"{vec} escapes the unit-box envelope")
            if not abs_embedding_ge_scaled_exp(ctx, vec, i, 1, -k * y):
                raise EnvelopeViolation(f"{vec} escapes the unit-box envelope")
    kth_sum = k_fold_sum(units, k)
    for vec in kth_sum.sorted():
        for i in range(1, ctx.degree + 1):
            if not abs_embedding_le_scaled_exp(ctx, vec, i, k, y):
                raise EnvelopeViolation(f"{vec} escapes the additive envelope")
    return EnvelopeReport(
        kind="mult-only",
        k=k,
        sum_size=kth_sum.size,
        sum_envelope_ok=True,
        product_size=kth_product.size,
        product_envelope_ok=True,
    )
