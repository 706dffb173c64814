"""Exact arithmetic in the order Z[theta] of a totally real field.

A field is presented by a monic integer polynomial f that is irreducible and
has all real roots. Elements are integer coefficient vectors in the power
basis 1, theta, ..., theta^(d-1). Real embeddings are kept as certified
isolating intervals with exact rational endpoints, refined on demand; every
comparison the library makes bottoms out in an exact sign decision here.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .errors import (
    IndexOutOfRange,
    MixedFields,
    NotMonic,
    NotTotallyReal,
    Reducible,
    UnsupportedDegree,
)
from .intervals import Interval, interval_dot, log_of_interval

LT, EQ, GT = -1, 0, 1

BUILTIN_FIELDS = {
    "sqrt2": [-2, 0, 1],
    "sqrt3": [-3, 0, 1],
    "golden": [-1, -1, 1],
    "zeta7plus": [-1, -2, 1, 1],
}


@dataclass(frozen=True)
class FieldSpec:
    """Monic integer minimal polynomial, ascending coefficients."""

    coeffs: tuple
    name: str = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @staticmethod
    def builtin(name):
        return FieldSpec(tuple(BUILTIN_FIELDS[name]), name=name)

    @staticmethod
    def from_json(text):
        obj = json.loads(text)
        return FieldSpec(tuple(obj["coeffs"]), name=obj.get("name"))


def _split_point(f, a, b):
    """A point in (a, b) where f does not vanish (rational roots are finite)."""
    for num, den in ((1, 2), (1, 4), (3, 4), (3, 8), (5, 8), (1, 8), (7, 8)):
        m = a + (b - a) * Fraction(num, den)
        if polys.evaluate(f, m) != 0:
            return m
    raise RuntimeError("could not find a split point")  # pragma: no cover


def _isolate_real_roots(f, expected):
    """Disjoint isolating intervals for all real roots of squarefree f, ascending."""
    chain = polys.sturm_chain(f)
    bound = polys.cauchy_root_bound(f) + Fraction(1, 2)
    stack = [(-bound, bound)]
    found = []
    while stack:
        a, b = stack.pop()
        n = polys.roots_in_halfopen(chain, a, b)
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        m = _split_point(f, a, b)
        stack.append((a, m))
        stack.append((m, b))
    if len(found) != expected:
        raise NotTotallyReal(f"expected {expected} real roots, found {len(found)}")
    found.sort()
    # tighten to sign-change brackets so later refinement is plain bisection
    out = []
    for a, b in found:
        fa, fb = polys.evaluate(f, a), polys.evaluate(f, b)
        assert fa != 0 and fb != 0 and (fa > 0) != (fb > 0)
        out.append(Interval(a, b))
    return out


class FieldContext:
    """Immutable field data plus a monotone-precision root cache.

    Refinement only ever shrinks the isolating intervals (bisection), so
    intervals observed at different precision levels nest.
    """

    def __init__(self, spec, roots, disc):
        self.spec = spec
        self.degree = spec.degree
        self.disc = disc
        self._f = [Fraction(c) for c in spec.coeffs]
        self._roots = roots
        self._powers = None

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self.spec.coeffs == other.spec.coeffs

    def __hash__(self):
        return hash(self.spec.coeffs)

    def __repr__(self):
        name = self.spec.name or "f=" + str(list(self.spec.coeffs))
        return f"FieldContext({name}, d={self.degree}, disc={self.disc})"

    # -- precision --------------------------------------------------------------

    def refine(self, steps=8):
        """Bisect every nondegenerate isolating interval `steps` times."""
        new = []
        for iv in self._roots:
            a, b = iv.lo, iv.hi
            if a == b:
                new.append(iv)
                continue
            fa = polys.evaluate(self._f, a)
            for _ in range(steps):
                m = (a + b) / 2
                fm = polys.evaluate(self._f, m)
                if fm == 0:
                    a = b = m
                    break
                if (fm > 0) == (fa > 0):
                    a, fa = m, fm
                else:
                    b = m
            new.append(Interval(a, b))
        self._roots = new
        self._powers = None

    def root_interval(self, i):
        """Isolating interval of the i-th embedding, 1-based ascending."""
        if not 1 <= i <= self.degree:
            raise IndexOutOfRange(f"embedding index {i} not in 1..{self.degree}")
        return self._roots[i - 1]

    def power_intervals(self, i):
        if self._powers is None:
            self._powers = []
            for iv in self._roots:
                row = [Interval.point(1)]
                for _ in range(self.degree - 1):
                    row.append(row[-1] * iv)
                self._powers.append(row)
        if not 1 <= i <= self.degree:
            raise IndexOutOfRange(f"embedding index {i} not in 1..{self.degree}")
        return self._powers[i - 1]

    # -- certified evaluation ------------------------------------------------------

    def embedding_interval(self, coeffs, i):
        return interval_dot(coeffs, self.power_intervals(i))

    def sign_at(self, coeffs, i):
        """Exact sign of p(theta_i) for rational p of degree < d.

        Since f is irreducible, a nonzero p of degree < d cannot vanish at a
        root of f, so refinement always terminates.
        """
        coeffs = polys.trim(list(coeffs))
        if not coeffs:
            return 0
        while True:
            iv = self.embedding_interval(coeffs, i)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            self.refine()

    # -- arithmetic on coefficient vectors -----------------------------------------

    def vec(self, value):
        """Canonical length-d integer tuple from an int, list, tuple, or AlgInt."""
        if isinstance(value, AlgInt):
            if value.ctx != self:
                raise MixedFields("element belongs to a different field")
            return value.coeffs
        if isinstance(value, int):
            return (value,) + (0,) * (self.degree - 1)
        t = tuple(int(c) for c in value)
        if len(t) > self.degree:
            raise ValueError(f"coefficient vector longer than degree {self.degree}")
        return t + (0,) * (self.degree - len(t))

    def add_vec(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg_vec(self, a):
        return tuple(-x for x in a)

    def sub_vec(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul_vec(self, a, b):
        prod = polys.mul(list(a), list(b))
        _, rem = polys.divmod_int_monic(prod, list(self.spec.coeffs))
        return tuple(rem) + (0,) * (self.degree - len(rem))

    def norm_vec(self, a):
        """Exact field norm: determinant of the multiplication-by-a matrix."""
        d = self.degree
        f = list(self.spec.coeffs)
        cols = []
        cur = list(a) + [0] * (d - len(a))
        for _ in range(d):
            cols.append(cur[:])
            cur = [0] + cur  # multiply by theta
            top = cur[d]
            if top:
                for k in range(d + 1):
                    cur[k] -= top * f[k]
            cur = cur[:d]
        matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
        return polys._bareiss_det(matrix)


def make_field(spec):
    """Validate a field presentation and isolate its real embeddings.

    Raises NotMonic, Reducible, or NotTotallyReal as appropriate. Degree-1
    input f = x - m is allowed and models the ordinary integers.
    """
    if isinstance(spec, (list, tuple)):
        spec = FieldSpec(tuple(spec))
    coeffs = list(spec.coeffs)
    if len(coeffs) < 2:
        raise NotMonic("polynomial must have degree at least 1")
    if coeffs[-1] != 1:
        raise NotMonic("leading coefficient must be 1")
    d = spec.degree
    if d == 1:
        root = Fraction(-coeffs[0])
        return FieldContext(spec, [Interval(root, root)], 1)

    g = polys.monic_gcd(coeffs, polys.derivative(coeffs))
    if polys.degree(g) >= 1:
        raise Reducible("polynomial has a repeated factor")
    if polys.count_real_roots(coeffs) != d:
        raise NotTotallyReal("polynomial does not have d distinct real roots")

    roots = _isolate_real_roots([Fraction(c) for c in coeffs], d)
    ctx = FieldContext(spec, roots, polys.discriminant_int(coeffs))
    _check_irreducible(ctx)
    return ctx


def _check_irreducible(ctx):
    """Certify irreducibility by ruling out every monic integer factor.

    A monic factor corresponds to a subset of the (isolated, real) roots
    whose elementary symmetric functions are all integers; candidate integer
    coefficients are read off certified intervals and checked by exact
    division, so the test is complete for totally real squarefree input.
    """
    d = ctx.degree
    f = list(ctx.spec.coeffs)
    for size in range(1, d // 2 + 1):
        for subset in itertools.combinations(range(1, d + 1), size):
            candidate = _integer_factor_candidate(ctx, subset)
            if candidate is None:
                continue
            _, rem = polys.divmod_int_monic(f, candidate)
            if not rem:
                raise Reducible(f"factor {candidate} divides the polynomial")


def _integer_factor_candidate(ctx, subset):
    """Integer coefficients of prod_{i in subset}(x - theta_i), or None.

    Returns None as soon as some coefficient interval excludes every integer;
    refines until each interval pins down at most one integer.
    """
    attempts = 0
    while True:
        prod = [Interval.point(1)]
        for i in subset:
            iv = ctx.root_interval(i)
            new = [Interval.point(0)] * (len(prod) + 1)
            for k, c in enumerate(prod):
                new[k] = new[k] + c * (-iv)
                new[k + 1] = new[k + 1] + c
            prod = new
        cand = []
        needs_refine = False
        for c in prod:
            lo_int = math.ceil(c.lo)
            hi_int = math.floor(c.hi)
            if lo_int > hi_int:
                return None  # no integer in the interval: not a factor
            if lo_int < hi_int:
                needs_refine = True
                break
            cand.append(lo_int)
        if not needs_refine:
            return cand
        attempts += 1
        if attempts > 64:  # pragma: no cover
            raise RuntimeError("factor candidate did not stabilize")
        ctx.refine()


class AlgInt:
    """Element of Z[theta] as an integer vector in the power basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = ctx.vec(coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, AlgInt)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.spec.coeffs, self.coeffs))

    def __repr__(self):
        return f"AlgInt{self.coeffs}"

    def _coerce(self, other):
        if isinstance(other, AlgInt):
            if other.ctx != self.ctx:
                raise MixedFields("operands belong to different fields")
            return other.coeffs
        if isinstance(other, int):
            return self.ctx.vec(other)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgInt(self.ctx, self.ctx.add_vec(self.coeffs, c))

    __radd__ = __add__

    def __neg__(self):
        return AlgInt(self.ctx, self.ctx.neg_vec(self.coeffs))

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgInt(self.ctx, self.ctx.sub_vec(self.coeffs, c))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgInt(self.ctx, self.ctx.mul_vec(self.coeffs, c))

    __rmul__ = __mul__

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)


def add(a, b):
    return a + b


def neg(a):
    return -a


def mul(a, b):
    return a * b


def norm(a):
    return a.ctx.norm_vec(a.coeffs)


def is_unit(a):
    return abs(norm(a)) == 1


def embed(a, i, width):
    """Certified interval of width <= `width` containing sigma_i(a)."""
    width = Fraction(width)
    assert width > 0
    ctx = a.ctx
    while True:
        iv = ctx.embedding_interval(a.coeffs, i)
        if iv.width <= width:
            return iv
        ctx.refine()


def decide_cmp(a, i, q):
    """Exact comparison of sigma_i(a) with a rational q: returns LT, EQ, or GT.

    EQ holds only when a - q is the zero vector, because a nonzero element of
    degree < d never equals a rational at a root of the irreducible f.
    """
    q = Fraction(q)
    ctx = a.ctx
    h = [Fraction(c) for c in a.coeffs]
    h[0] -= q
    return ctx.sign_at(h, i)


def regulator_rank1(ctx, width=Fraction(1, 10**8)):
    """Regulator of a real quadratic order: log of its fundamental unit > 1.

    Found by scanning unit boxes of growing radius; every nontrivial unit has
    log-embedding an exact integer multiple of the regulator, so the minimum
    over any nonempty box is the regulator itself.
    """
    from .boxes import LogBoxQuery, enum_unit_box  # local import, avoids a cycle

    if ctx.degree != 2:
        raise UnsupportedDegree("regulator scan implemented for degree 2 only")
    y = 1
    while True:
        units = enum_unit_box(LogBoxQuery(ctx, Fraction(y)))
        nontrivial = [u for u in units.sorted() if any(u[1:])]
        if nontrivial:
            break
        y += 1

    # |log| values of nontrivial units are integer multiples of the regulator,
    # which exceeds log(phi) > 0.48; at width << that, min-by-endpoint is exact.
    best = None
    for vec in nontrivial:
        logabs = _abs_log_embedding(ctx, vec, ctx.degree, min(width, Fraction(1, 100)))
        if best is None or logabs.lo < best.lo:
            best = logabs
    return best


def _abs_log_embedding(ctx, vec, i, width):
    while True:
        iv = ctx.embedding_interval(vec, i).abs()
        if iv.lo > 0:
            lg = log_of_interval(iv, terms=32)
            lg = lg.abs()
            if lg.width <= width:
                return lg
        ctx.refine()
