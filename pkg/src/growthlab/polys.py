"""Dense univariate polynomials with exact coefficients.

A polynomial is a list of coefficients in ascending degree order with no
trailing zeros; [] is the zero polynomial. Integer and Fraction coefficients
mix freely. Everything here is exact: no floats.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    """Degree of p, with deg 0 = -1 for the zero polynomial."""
    return len(p) - 1


def is_zero(p):
    return all(c == 0 for c in p)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = out[i] + c
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, s):
    if s == 0:
        return []
    return [c * s for c in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_exact(f, g):
    """Quotient and remainder of f by g over the rationals. g must be nonzero."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in f]
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    dg, lead = len(g) - 1, Fraction(g[-1])
    while len(trim(r)) - 1 >= dg:
        r = trim(r)
        k = len(r) - 1 - dg
        c = r[-1] / lead
        q[k] = c
        for i, gc in enumerate(g):
            r[k + i] -= c * gc
    return trim(q), trim(r)


def divmod_int_monic(f, g):
    """Exact integer quotient/remainder of integer f by monic integer g."""
    assert g and g[-1] == 1
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 1)
    dg = len(g) - 1
    while len(trim(r)) - 1 >= dg:
        r = trim(r)
        k = len(r) - 1 - dg
        c = r[-1]
        q[k] = c
        for i, gc in enumerate(g):
            r[k + i] -= c * gc
    return trim(q), trim(r)


def monic_gcd(f, g):
    """Monic gcd over the rationals (1 for coprime inputs, [] if both zero)."""
    a, b = trim(f), trim(g)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def compose_shift(p, s):
    """p(x + s), exactly."""
    out = []
    for c in reversed(p):
        out = add(mul(out, [s, 1]), [c])
    return out


# -- Sturm sequences -----------------------------------------------------------

def sturm_chain(f):
    """Sturm chain of a squarefree polynomial, Fraction coefficients."""
    chain = [[Fraction(c) for c in trim(f)]]
    d = derivative(chain[0])
    if d:
        chain.append(d)
    while chain[-1] and degree(chain[-1]) > 0:
        _, r = divmod_exact(chain[-2], chain[-1])
        if not r:
            break
        chain.append(neg(r))
    return chain


def _variations(chain, x):
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def roots_in_halfopen(chain, a, b):
    """Number of distinct real roots in (a, b] for a squarefree chain."""
    return _variations(chain, a) - _variations(chain, b)


def cauchy_root_bound(f):
    """All real roots lie in [-M, M] with M = 1 + max |c_i| / |lead|."""
    f = trim(f)
    lead = abs(Fraction(f[-1]))
    m = max((abs(Fraction(c)) for c in f[:-1]), default=Fraction(0))
    return 1 + m / lead


def count_real_roots(f):
    chain = sturm_chain(f)
    m = cauchy_root_bound(f) + Fraction(1, 2)
    return roots_in_halfopen(chain, -m, m)


# -- resultants ------------------------------------------------------------------

def _bareiss_det(m):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant_int(f, g):
    """Resultant of integer polynomials via the Sylvester determinant."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    m, n = degree(f), degree(g)
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant_int(f):
    """Discriminant of a monic integer polynomial (1 in degree 1)."""
    f = trim(f)
    d = degree(f)
    assert f[-1] == 1 and d >= 1
    if d == 1:
        return 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant_int(f, derivative(f))
