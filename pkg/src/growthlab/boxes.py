"""Enumeration of additive and multiplicative boxes in Z[theta].

An additive box B+(X) holds the elements whose embeddings all lie in
[-X, X] (optionally around a center); a unit box Bx(Y) holds the units whose
log-absolute embeddings all lie in [-Y, Y]. Membership at the boundary is
decided exactly, never by tolerance, so reported sizes are exact integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, SeparationViolation, UnsupportedDegree
from .field import AlgInt, EQ, GT, LT, decide_cmp, is_unit, regulator_rank1
from .intervals import Interval, exp_bracket
from .sets import ElementSet, RingAmbient


@dataclass(frozen=True)
class AdditiveBoxQuery:
    ctx: object
    radius: Fraction
    center: object = 0

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        object.__setattr__(self, "center", self.ctx.vec(self.center))


@dataclass(frozen=True)
class LogBoxQuery:
    ctx: object
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        assert self.radius > 0


def _coefficient_bounds(ctx, magnitude):
    """Per-coefficient search bounds for |sigma_i(alpha)| <= magnitude.

    The coefficient vector is V^(-1) applied to the embedding vector, where V
    is the root Vandermonde matrix; row j of V^(-1) consists of the degree-j
    coefficients of the Lagrange basis polynomials f(x)/((x - theta_i) f'(theta_i)).
    An upper bound for each row's L1 norm gives a certified search range.
    """
    d = ctx.degree
    fprime = [Fraction(c) for c in _derivative(ctx.spec.coeffs)]
    # refine enough that the f'(theta_i) intervals exclude zero
    rows = [Fraction(0)] * d
    for i in range(1, d + 1):
        while True:
            den = ctx.embedding_interval(fprime, i)
            if not (den.lo <= 0 <= den.hi):
                break
            ctx.refine()
        quots = _synthetic_quotient_intervals(ctx, i)
        den_abs = den.abs()
        inv_hi = 1 / den_abs.lo  # |1/f'(theta_i)| <= this
        for j in range(d):
            coeff_abs_hi = max(abs(quots[j].lo), abs(quots[j].hi))
            rows[j] += coeff_abs_hi * inv_hi
    return [int(math.floor(rows[j] * magnitude)) for j in range(d)]


def _derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _synthetic_quotient_intervals(ctx, i):
    """Interval coefficients of f(x) / (x - theta_i), Horner style, degree d-1."""
    d = ctx.degree
    f = list(ctx.spec.coeffs)
    iv = ctx.root_interval(i)
    out = [None] * d
    out[d - 1] = Interval.point(1)
    for j in range(d - 2, -1, -1):
        out[j] = out[j + 1] * iv + f[j + 1]
    return out


def _inside_symmetric_box(ctx, vec, i, radius):
    """Exact test of -radius <= sigma_i(vec) <= radius with an interval fast path."""
    iv = ctx.embedding_interval(vec, i)
    if -radius <= iv.lo and iv.hi <= radius:
        return True
    if iv.lo > radius or iv.hi < -radius:
        return False
    a = AlgInt(ctx, vec)
    if decide_cmp(a, i, radius) == GT:
        return False
    if decide_cmp(a, i, -radius) == LT:
        return False
    return True


def enum_additive_box(query):
    """All alpha in Z[theta] with |sigma_i(alpha - center)| <= radius for all i."""
    ctx = query.ctx
    radius = query.radius
    assert radius >= 0
    bounds = _coefficient_bounds(ctx, radius)
    members = []
    center = query.center
    for offset in itertools.product(*(range(-b, b + 1) for b in bounds)):
        if all(_inside_symmetric_box(ctx, offset, i, radius) for i in range(1, ctx.degree + 1)):
            members.append(ctx.add_vec(center, offset))
    return ElementSet(RingAmbient(ctx), members)


def _abs_embedding_vs_bracket(ctx, vec, i, bracket_fn):
    """-1 if |sigma_i(vec)| < b, +1 if > b, for a transcendental bracket b.

    The compared value must not itself be an element of the field (true for
    r * e^y with rational r > 0 and rational y != 0), so the loop terminates.
    """
    n = 12
    while True:
        b = bracket_fn(n)
        iv = ctx.embedding_interval(vec, i).abs()
        if iv.hi < b.lo:
            return -1
        if iv.lo > b.hi:
            return +1
        n *= 2
        ctx.refine()


def abs_embedding_le_scaled_exp(ctx, vec, i, scale, y):
    """Exact |sigma_i(vec)| <= scale * e^y for rationals scale > 0, y."""
    scale = Fraction(scale)
    y = Fraction(y)
    if y == 0:  # rational bound, decide exactly (equality possible)
        a = AlgInt(ctx, vec)
        if decide_cmp(a, i, scale) == GT:
            return False
        return decide_cmp(a, i, -scale) != LT
    return _abs_embedding_vs_bracket(ctx, vec, i, lambda n: exp_bracket(y, n) * scale) < 0


def abs_embedding_ge_scaled_exp(ctx, vec, i, scale, y):
    """Exact |sigma_i(vec)| >= scale * e^y for rationals scale > 0, y != 0."""
    scale = Fraction(scale)
    y = Fraction(y)
    assert y != 0
    return _abs_embedding_vs_bracket(ctx, vec, i, lambda n: exp_bracket(y, n) * scale) > 0


def enum_unit_box(query):
    """All units u of Z[theta] with e^-Y <= |sigma_i(u)| <= e^Y for all i.

    Candidates come from an additive box of certified radius >= e^Y; the exact
    two-sided log condition is then decided per embedding. |sigma_i(u)| can
    never equal e^(+-Y) for rational Y > 0, so every decision terminates.
    """
    ctx = query.ctx
    y = query.radius
    upper = exp_bracket(y, 24).hi
    candidates = enum_additive_box(AdditiveBoxQuery(ctx, upper))
    members = []
    for vec in candidates:
        if all(c == 0 for c in vec):
            continue
        if abs(ctx.norm_vec(vec)) != 1:
            continue
        ok = True
        for i in range(1, ctx.degree + 1):
            if not abs_embedding_le_scaled_exp(ctx, vec, i, 1, y):
                ok = False
                break
            if not abs_embedding_ge_scaled_exp(ctx, vec, i, 1, -y):
                ok = False
                break
        if ok:
            members.append(vec)
    return ElementSet(RingAmbient(ctx), members)


# -- unit separation --------------------------------------------------------------


@dataclass(frozen=True)
class SeparationReport:
    checked: int
    trivial: int
    witnesses: dict  # unit vector -> (embedding index, side)


def separation_check(ctx, units):
    """Witness, for each unit u outside {1, -1}, an embedding with
    |sigma_i(u)| outside the open interval (1/phi, phi), phi = (1+sqrt5)/2.

    Uses the exact reformulation: for t = |sigma_i(u)| > 0,
        t >= phi      iff  t^2 - t - 1 >= 0,
        t <= 1/phi    iff  t^2 + t - 1 <= 0,
    and t^2 - s*t = sigma_i(u^2 - s*u) with s the sign of sigma_i(u), so both
    tests are exact sign decisions on ring elements. A unit with no witness
    would contradict the norm argument, so it raises SeparationViolation.
    """
    one = ctx.vec(1)
    minus_one = ctx.neg_vec(one)
    witnesses = {}
    trivial = 0
    checked = 0
    for vec in sorted(units if not isinstance(units, ElementSet) else units.sorted()):
        vec = ctx.vec(vec)
        checked += 1
        if vec in (one, minus_one):
            trivial += 1
            continue
        found = None
        sq = ctx.mul_vec(vec, vec)
        for i in range(1, ctx.degree + 1):
            s = ctx.sign_at([Fraction(c) for c in vec], i)
            assert s != 0  # units are nonzero
            signed = tuple(s * c for c in vec)
            upper_test = ctx.sub_vec(ctx.sub_vec(sq, signed), one)   # t^2 - t - 1
            lower_test = ctx.sub_vec(ctx.add_vec(sq, signed), one)   # t^2 + t - 1
            if ctx.sign_at([Fraction(c) for c in upper_test], i) >= 0:
                found = (i, "above")
                break
            if ctx.sign_at([Fraction(c) for c in lower_test], i) <= 0:
                found = (i, "below")
                break
        if found is None:
            raise SeparationViolation(f"unit {vec} has every embedding inside (1/phi, phi)")
        witnesses[vec] = found
    return SeparationReport(checked=checked, trivial=trivial, witnesses=witnesses)


# -- counting-bound reports ---------------------------------------------------------


@dataclass(frozen=True)
class BallBoundReport:
    kind: str
    radius: Fraction
    count: int
    lower: float
    upper: float
    lower_ok: bool  # None when the lower bound is not checked
    upper_ok: bool

    def as_dict(self):
        return {
            "kind": self.kind,
            "radius": str(self.radius),
            "count": self.count,
            "lower": self.lower,
            "upper": self.upper,
            "lowerOk": self.lower_ok,
            "upperOk": self.upper_ok,
        }


def check_ball_bounds(ctx, kind, radius):
    """Measure a box and compare its size against the lattice counting bounds.

    Additive: radius^d * disc^(-1/2) <= count <= (2*radius + 1)^d, both sides
    decided exactly. Unit: count <= 10*(5Y+1)^(d-1) exactly; the lower bound
    Y^(d-1) / (sqrt(d) * regulator) is certified via the regulator interval
    and is only available at unit rank 1 (degree 2), else reported unchecked.
    """
    radius = Fraction(radius)
    d = ctx.degree
    if kind == "additive":
        count = enum_additive_box(AdditiveBoxQuery(ctx, radius)).size
        # count >= X^d / sqrt(disc)  <=>  count^2 * disc >= X^(2d)
        lower_ok = count * count * ctx.disc >= radius ** (2 * d)
        upper_ok = count <= (2 * radius + 1) ** d
        return BallBoundReport(
            kind="additive",
            radius=radius,
            count=count,
            lower=float(radius) ** d / math.sqrt(ctx.disc),
            upper=float((2 * radius + 1) ** d),
            lower_ok=lower_ok,
            upper_ok=upper_ok,
        )
    if kind == "unit":
        count = enum_unit_box(LogBoxQuery(ctx, radius)).size
        upper_ok = count <= 10 * (5 * radius + 1) ** (d - 1)
        lower_ok = None
        lower = None
        if d == 2:
            reg = regulator_rank1(ctx)
            # count >= Y^(d-1) / (sqrt(d) R)  <=>  count^2 * d * R^2 >= Y^(2(d-1))
            target = radius ** (2 * (d - 1))
            while True:
                if count * count * d * reg.lo * reg.lo >= target:
                    lower_ok = True
                    break
                if count * count * d * reg.hi * reg.hi < target:
                    lower_ok = False  # pragma: no cover
                    break
                reg = regulator_rank1(ctx, width=reg.width / 16)  # pragma: no cover
            lower = float(radius) ** (d - 1) / (math.sqrt(d) * float(reg))
        return BallBoundReport(
            kind="unit",
            radius=radius,
            count=count,
            lower=lower,
            upper=float(10 * (5 * radius + 1) ** (d - 1)),
            lower_ok=lower_ok,
            upper_ok=upper_ok,
        )
    raise ValueError(f"unknown box kind {kind!r}")


# -- central slab volumes --------------------------------------------------------------


@dataclass(frozen=True)
class SlabVolume:
    """vol_(d-1) of the hyperplane x1+...+xd = 0 inside [-r, r]^d, exactly.

    value = (2r)^(d-1) * sqrt(d) * density0, where density0 is the density at
    0 of a sum of d independent uniforms on [-1/2, 1/2] (an exact rational).
    """

    d: int
    r: Fraction
    density0: Fraction

    @property
    def rational_part(self):
        return (2 * self.r) ** (self.d - 1) * self.density0

    @property
    def value(self):
        return float(self.rational_part) * math.sqrt(self.d)

    @property
    def ratio(self):
        """value / (2r)^(d-1) = sqrt(d) * density0."""
        return math.sqrt(self.d) * float(self.density0)

    def ratio_between(self, lo, hi):
        """Exact test lo <= sqrt(d)*density0 <= hi for rational lo, hi >= 0."""
        sq = self.d * self.density0 * self.density0
        return Fraction(lo) ** 2 <= sq and sq <= Fraction(hi) ** 2

    def as_dict(self):
        return {
            "d": self.d,
            "r": str(self.r),
            "density0": str(self.density0),
            "rationalPart": str(self.rational_part),
            "value": self.value,
            "ratio": self.ratio,
        }


def _piecewise_antiderivative(pieces):
    """Continuous antiderivative of a contiguous piecewise polynomial, H(lo)=0."""
    out = []
    running = Fraction(0)
    for lo, hi, coeffs in pieces:
        integ = [Fraction(0)] + [Fraction(c, k + 1) for k, c in enumerate(coeffs)]
        const = running - _poly_eval(integ, lo)
        integ[0] += const
        out.append((lo, hi, integ))
        running = _poly_eval(integ, hi)
    return out, running


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_shift(coeffs, s):
    """p(x + s) exactly, Horner style."""
    out = []
    for c in reversed(coeffs):
        new = [Fraction(0)] * (len(out) + 1)
        for k, a in enumerate(out):
            new[k] += a * s
            new[k + 1] += a
        if not new:
            new = [Fraction(0)]
        new[0] += Fraction(c)
        out = new
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [Fraction(0)]


def _eval_antiderivative(pieces, total, x):
    lo0 = pieces[0][0]
    hi_last = pieces[-1][1]
    if x <= lo0:
        return Fraction(0)
    if x >= hi_last:
        return total
    for lo, hi, coeffs in pieces:
        if lo <= x <= hi:
            return _poly_eval(coeffs, x)
    raise AssertionError("gap in piecewise support")  # pragma: no cover


def _convolve_with_unit_uniform(pieces):
    """Density of (current sum) + uniform[-1/2, 1/2] as a piecewise polynomial."""
    anti, total = _piecewise_antiderivative(pieces)
    half = Fraction(1, 2)
    breaks = sorted({b for lo, hi, _ in pieces for b in (lo - half, lo + half, hi - half, hi + half)})
    out = []
    for a, b in zip(breaks, breaks[1:]):
        mid = (a + b) / 2
        upper = _piece_poly_at(anti, total, mid + half)
        lower = _piece_poly_at(anti, total, mid - half)
        up = _poly_shift(upper, half)
        lo_p = _poly_shift(lower, -half)
        diff = [Fraction(0)] * max(len(up), len(lo_p))
        for k, c in enumerate(up):
            diff[k] += c
        for k, c in enumerate(lo_p):
            diff[k] -= c
        while len(diff) > 1 and diff[-1] == 0:
            diff.pop()
        out.append((a, b, diff))
    return out


def _piece_poly_at(anti, total, x):
    """Antiderivative polynomial valid near x (constants outside the support)."""
    lo0 = anti[0][0]
    hi_last = anti[-1][1]
    if x <= lo0:
        return [Fraction(0)]
    if x >= hi_last:
        return [total]
    for lo, hi, coeffs in anti:
        if lo <= x <= hi:
            return list(coeffs)
    raise AssertionError("gap in piecewise support")  # pragma: no cover


def central_density(d):
    """Density at 0 of a sum of d independent uniforms on [-1/2, 1/2], exact."""
    assert d >= 1
    half = Fraction(1, 2)
    pieces = [(-half, half, [Fraction(1)])]
    for _ in range(d - 1):
        pieces = _convolve_with_unit_uniform(pieces)
    for lo, hi, coeffs in pieces:
        if lo <= 0 <= hi:
            return _poly_eval(coeffs, Fraction(0))
    raise AssertionError("0 outside support")  # pragma: no cover


def slab_volume(d, r):
    """Exact central slab volume via piecewise-polynomial convolution."""
    if d < 2:
        raise UnsupportedDegree("slab volume needs dimension >= 2")
    return SlabVolume(d=d, r=Fraction(r), density0=central_density(d))
