"""Rational interval arithmetic and certified brackets for exp and log.

Intervals carry exact Fraction endpoints; every operation is outward-sound,
so a computed interval always contains the true value. Brackets for e^y and
log(x) tighten as the term count grows and never exclude the true value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        assert self.lo <= self.hi

    @staticmethod
    def point(x):
        x = Fraction(x)
        return Interval(x, x)

    @property
    def width(self):
        return self.hi - self.lo

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        return Interval(self.lo + other, self.hi + other)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Interval) else -Fraction(other))

    def __mul__(self, other):
        if isinstance(other, Interval):
            c = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
            return Interval(min(c), max(c))
        if other >= 0:
            return Interval(self.lo * other, self.hi * other)
        return Interval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def abs(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def contains(self, x):
        return self.lo <= x <= self.hi

    def strictly_below(self, x):
        return self.hi < x

    def strictly_above(self, x):
        return self.lo > x

    def __float__(self):
        return float((self.lo + self.hi) / 2)


def interval_evaluate(coeffs, iv):
    """Horner evaluation of a rational polynomial on an interval."""
    acc = Interval.point(0)
    for c in reversed(coeffs):
        acc = acc * iv + Fraction(c)
    return acc


def interval_dot(coeffs, powers):
    """Sum of coeffs[j] * powers[j]; powers are precomputed Intervals."""
    lo = Fraction(0)
    hi = Fraction(0)
    for c, p in zip(coeffs, powers):
        if c == 0:
            continue
        t = p * c
        lo += t.lo
        hi += t.hi
    return Interval(lo, hi)


# -- certified exp and log --------------------------------------------------------

def exp_bracket(y, terms=16):
    """Interval certified to contain e^y for rational y.

    Taylor partial sum plus a geometric tail bound; larger `terms` tightens.
    """
    y = Fraction(y)
    if y == 0:
        return Interval.point(1)
    if y < 0:
        return exp_bracket(-y, terms).reciprocal()
    n = max(terms, 2 * int(y) + 8)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(1, n + 1):
        term = term * y / k
        total += term
    # tail = sum_{k>n} y^k/k! <= term * (y/(n+1)) / (1 - y/(n+2))
    ratio = y / (n + 2)
    assert ratio < 1
    tail = term * (y / (n + 1)) / (1 - ratio)
    return Interval(total, total + tail)


def _atanh_bracket(z, terms):
    # atanh(z) for |z| < 1, series sum z^(2j+1)/(2j+1)
    total = Fraction(0)
    zz = z * z
    p = z
    for j in range(terms):
        total += p / (2 * j + 1)
        p *= zz
    tail = abs(p) / ((2 * terms + 1) * (1 - zz))
    return Interval(total - tail, total + tail)


def _ln2_bracket(terms):
    return _atanh_bracket(Fraction(1, 3), terms) * 2


def log_bracket(x, terms=24):
    """Interval certified to contain log(x) for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of nonpositive rational")
    k = 0
    while x > Fraction(3, 2):
        x /= 2
        k += 1
    while x < Fraction(3, 4):
        x *= 2
        k -= 1
    core = _atanh_bracket((x - 1) / (x + 1), terms) * 2
    if k == 0:
        return core
    return core + _ln2_bracket(terms) * k


def log_of_interval(iv, terms=24):
    """Certified log of a positive rational interval."""
    assert iv.lo > 0
    return Interval(log_bracket(iv.lo, terms).lo, log_bracket(iv.hi, terms).hi)
