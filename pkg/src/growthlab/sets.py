"""Exact sumsets, product sets, k-fold sets, growth exponents, and energies.

An ElementSet lives in one of three ambients: a number ring Z[theta], a prime
field F_p, or a space of polynomials over F_q with a degree cap. Elements are
stored as canonical hashable values (integer tuples, residues, coefficient
tuples), so set sizes are exact by construction.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import MixedAmbient, TooSmall
from .gf import GF


@dataclass(frozen=True)
class RingAmbient:
    """Elements are integer power-basis vectors in ctx."""

    ctx: object

    def canon(self, x):
        return self.ctx.vec(x)

    def add(self, x, y):
        return self.ctx.add_vec(x, y)

    def sub(self, x, y):
        return self.ctx.sub_vec(x, y)

    def neg(self, x):
        return self.ctx.neg_vec(x)

    def mul(self, x, y):
        return self.ctx.mul_vec(x, y)

    @property
    def zero(self):
        return (0,) * self.ctx.degree

    def describe(self):
        return {"kind": "ring", "coeffs": list(self.ctx.spec.coeffs),
                "name": self.ctx.spec.name}


@dataclass(frozen=True)
class PrimeFieldAmbient:
    p: int

    def canon(self, x):
        return int(x) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    @property
    def zero(self):
        return 0

    def describe(self):
        return {"kind": "fp", "p": self.p}


@dataclass(frozen=True)
class PolyAmbient:
    """Polynomials over F_q of degree <= cap; the cap is part of the identity."""

    q: int
    cap: int

    def field(self):
        return GF(self.q)

    def canon(self, x):
        t = tuple(int(c) for c in x)
        if len(t) > self.cap + 1:
            if any(t[self.cap + 1:]):
                raise ValueError("coefficients above the degree cap")
            t = t[: self.cap + 1]
        t = t + (0,) * (self.cap + 1 - len(t))
        gf = self.field()
        if any(not 0 <= c < gf.q for c in t):
            raise ValueError("coefficient out of range for F_q")
        return t

    def add(self, x, y):
        gf = self.field()
        return tuple(gf.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y):
        gf = self.field()
        return tuple(gf.sub(a, b) for a, b in zip(x, y))

    def neg(self, x):
        gf = self.field()
        return tuple(gf.neg(a) for a in x)

    def mul(self, x, y):
        # product of sections lives in the cap-(capx+capy) space
        raise MixedAmbient("use productset(); section products change the cap")

    @property
    def zero(self):
        return (0,) * (self.cap + 1)

    def describe(self):
        return {"kind": "poly", "q": self.q, "cap": self.cap}


class ElementSet:
    """Deduplicated set of canonical elements in a single ambient."""

    __slots__ = ("ambient", "_members")

    def __init__(self, ambient, iterable=()):
        self.ambient = ambient
        self._members = frozenset(ambient.canon(x) for x in iterable)

    @property
    def size(self):
        return len(self._members)

    def __len__(self):
        return len(self._members)

    def __contains__(self, x):
        return self.ambient.canon(x) in self._members

    def __iter__(self):
        return iter(self._members)

    def __eq__(self, other):
        return (
            isinstance(other, ElementSet)
            and self.ambient == other.ambient
            and self._members == other._members
        )

    def __hash__(self):
        return hash((self.ambient, self._members))

    def __repr__(self):
        return f"ElementSet({self.ambient!r}, n={self.size})"

    def sorted(self):
        return sorted(self._members)

    def issubset(self, other):
        _require_same_ambient(self, other)
        return self._members <= other._members


def _require_same_ambient(a, b):
    if a.ambient != b.ambient:
        raise MixedAmbient(f"{a.ambient!r} vs {b.ambient!r}")


def sumset(a, b):
    _require_same_ambient(a, b)
    amb = a.ambient
    out = {amb.add(x, y) for x in a for y in b}
    return ElementSet(amb, out)


def difference_set(a, b):
    _require_same_ambient(a, b)
    amb = a.ambient
    return ElementSet(amb, (amb.sub(x, y) for x in a for y in b))


def productset(a, b):
    if isinstance(a.ambient, PolyAmbient) and isinstance(b.ambient, PolyAmbient):
        if a.ambient.q != b.ambient.q:
            raise MixedAmbient("section sets over different F_q")
        gf = a.ambient.field()
        target = PolyAmbient(a.ambient.q, a.ambient.cap + b.ambient.cap)
        out = {gf.poly_mul(x, y, target.cap) for x in a for y in b}
        return ElementSet(target, out)
    _require_same_ambient(a, b)
    amb = a.ambient
    return ElementSet(amb, (amb.mul(x, y) for x in a for y in b))


def k_fold_sum(a, k):
    assert k >= 1
    acc = a
    for _ in range(k - 1):
        acc = sumset(acc, a)
    return acc


def k_fold_product(a, k):
    assert k >= 1
    acc = a
    for _ in range(k - 1):
        acc = productset(acc, a)
    return acc


@dataclass(frozen=True)
class GrowthReport:
    n: int
    sum_size: int
    prod_size: int
    delta_plus: float
    delta_times: float
    solymosi: float

    def as_dict(self):
        return {
            "n": self.n,
            "sumSize": self.sum_size,
            "prodSize": self.prod_size,
            "deltaPlus": self.delta_plus,
            "deltaTimes": self.delta_times,
            "solymosi": self.solymosi,
        }


def growth_report(a):
    """Exact sum/product set sizes with log-ratio exponents.

    The Solymosi ratio |A+A|^2 |AA| / |A|^4 is informational only; nothing is
    asserted against it.
    """
    n = a.size
    if n < 2:
        raise TooSmall("growth exponents need at least 2 elements")
    s = sumset(a, a).size
    p = productset(a, a).size
    return GrowthReport(
        n=n,
        sum_size=s,
        prod_size=p,
        delta_plus=math.log(s) / math.log(n),
        delta_times=math.log(p) / math.log(n),
        solymosi=s * s * p / n**4,
    )


def _sum_representation_counts(a, k):
    """Counter of k-fold sums over ordered k-tuples."""
    amb = a.ambient
    counts = Counter({x: 1 for x in a})
    for _ in range(k - 1):
        nxt = Counter()
        for s, c in counts.items():
            for x in a:
                nxt[amb.add(s, x)] += c
        counts = nxt
    return counts


def additive_energy(a):
    """Number of ordered quadruples with x1 + x2 = x3 + x4."""
    counts = _sum_representation_counts(a, 2)
    return sum(c * c for c in counts.values())


@dataclass(frozen=True)
class RepresentationEnergy:
    count: int
    lower_bound: float


def representation_energy_k(a, k):
    """Ordered 2k-tuples with equal k-fold sums, with its Cauchy-Schwarz floor.

    count = sum over s of r_k(s)^2 >= |A|^(2k) / |kA|, always.
    """
    assert k >= 1
    counts = _sum_representation_counts(a, k)
    count = sum(c * c for c in counts.values())
    lower = a.size ** (2 * k) / len(counts)
    assert count >= lower
    return RepresentationEnergy(count=count, lower_bound=lower)
