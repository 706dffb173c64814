import math
from fractions import Fraction

import pytest

from growthlab.field import FieldSpec, make_field


@pytest.fixture(scope="session")
def sqrt2():
    return make_field(FieldSpec.builtin("sqrt2"))


@pytest.fixture(scope="session")
def sqrt3():
    return make_field(FieldSpec.builtin("sqrt3"))


@pytest.fixture(scope="session")
def golden():
    return make_field(FieldSpec.builtin("golden"))


@pytest.fixture(scope="session")
def zeta7():
    return make_field(FieldSpec.builtin("zeta7plus"))


@pytest.fixture(scope="session")
def line():
    """Degree-1 field f = x, modelling the ordinary integers."""
    return make_field(FieldSpec((0, 1), name="line"))


# -- independent oracles shared by several test modules ---------------------------


def quad_cmp(a, b, c, t):
    """Exact sign of (a + b*sqrt(c)) - t for integers a, b, c >= 2 and Fraction t.

    Pure integer/Fraction arithmetic; independent of the library's interval
    machinery.
    """
    t = Fraction(t)
    lhs = Fraction(a) - t  # compare -lhs vs b*sqrt(c)
    if b == 0:
        return 0 if lhs == 0 else (1 if lhs > 0 else -1)
    # a + b sqrt(c) - t > 0  <=>  b sqrt(c) > -lhs
    rhs = -lhs
    if b > 0:
        if rhs < 0:
            return 1
        return 1 if b * b * c > rhs * rhs else (-1 if b * b * c < rhs * rhs else 0)
    if rhs > 0:
        return -1
    return -1 if b * b * c > rhs * rhs else (1 if b * b * c < rhs * rhs else 0)


def quad_abs_le(a, b, c, bound):
    """Exact |a + b*sqrt(c)| <= bound."""
    return quad_cmp(a, b, c, bound) <= 0 and quad_cmp(a, b, c, -bound) >= 0


def oracle_box_sqrt(c, radius, span=None):
    """Elements a + b*sqrt(c) with both conjugates in [-radius, radius].

    Exhaustive exact scan; the two conjugates are a + b sqrt(c) and
    a - b sqrt(c).
    """
    radius = Fraction(radius)
    span = span or int(2 * radius + 4)
    out = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if quad_abs_le(a, b, c, radius) and quad_abs_le(a, -b, c, radius):
                out.append((a, b))
    return out


def oracle_box_golden(radius, span=None):
    """Elements a + b*theta, theta^2 = theta + 1, with conjugates in [-r, r].

    The conjugates are ((2a + b) +- b*sqrt(5)) / 2: exact via quad_cmp at
    doubled radius.
    """
    radius = Fraction(radius)
    span = span or int(2 * radius + 4)
    out = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if quad_abs_le(2 * a + b, b, 5, 2 * radius) and quad_abs_le(2 * a + b, -b, 5, 2 * radius):
                out.append((a, b))
    return out


ZETA7_ROOTS = [2 * math.cos(2 * math.pi * k / 7) for k in (3, 2, 1)]  # ascending


def oracle_box_zeta7(radius, span=None, margin=1e-7):
    """Float scan oracle for the cubic field.

    Rational integers (b = c = 0) are decided exactly; all other elements have
    irrational embeddings, and the oracle asserts a float safety margin at the
    boundary so its filter is trustworthy.
    """
    radius = float(radius)
    span = span or int(2 * radius + 5)
    out = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            for c in range(-span, span + 1):
                if b == 0 and c == 0:
                    if abs(a) <= radius:
                        out.append((a, b, c))
                    continue
                worst = max(abs(a + b * r + c * r * r) for r in ZETA7_ROOTS)
                assert abs(worst - radius) > margin, (a, b, c)
                if worst <= radius:
                    out.append((a, b, c))
    return out


def naive_sumset_quadratic(elems, mul_rule):
    """Naive double-loop sum/product tables for (a, b) pairs with theta^2 =
    u*theta + v; mul_rule = (u, v). Returns (sum sizes, product sizes)."""
    u, v = mul_rule
    sums = set()
    prods = set()
    for x in elems:
        for y in elems:
            sums.add((x[0] + y[0], x[1] + y[1]))
            # (x0 + x1 t)(y0 + y1 t) = x0y0 + (x0y1 + x1y0) t + x1y1 t^2
            t2 = x[1] * y[1]
            prods.add((x[0] * y[0] + v * t2, x[0] * y[1] + x[1] * y[0] + u * t2))
    return sums, prods
