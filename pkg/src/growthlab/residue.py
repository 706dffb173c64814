"""Reduction of number-ring sets modulo a completely split prime.

A prime p is completely split when the defining polynomial factors into d
distinct linear factors mod p; sending theta to any of those roots is a ring
homomorphism Z[theta] -> F_p. When every pairwise difference in a set has all
embeddings smaller than p^(1/d) in absolute value, its nonzero norm cannot be
divisible by p, so the reduction is injective; the builders expose that
criterion and cross-check it on every call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PredictionViolation
from .intervals import exp_bracket
from .sets import ElementSet, PrimeFieldAmbient, RingAmbient


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond any scan this library does."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sqrt_mod_prime(a, p):
    """Tonelli-Shanks; a must be a quadratic residue mod odd prime p."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def roots_mod_p(coeffs, p):
    """Distinct roots of an integer polynomial mod p, ascending.

    Degree 2 uses the quadratic formula with a modular square root; other
    degrees fall back to direct evaluation (fine for the primes scanned here).
    """
    coeffs = [c % p for c in coeffs]
    deg = len(coeffs) - 1
    if deg == 2 and p > 2 and coeffs[2] % p != 0:
        c0, c1, c2 = coeffs
        disc = (c1 * c1 - 4 * c2 * c0) % p
        if pow(disc, (p - 1) // 2, p) == p - 1:
            return []
        sq = _sqrt_mod_prime(disc, p)
        inv = pow(2 * c2, p - 2, p)
        roots = {(-c1 + sq) * inv % p, (-c1 - sq) * inv % p}
        return sorted(r for r in roots if _eval_mod(coeffs, r, p) == 0)
    return [r for r in range(p) if _eval_mod(coeffs, r, p) == 0]


def _eval_mod(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


@dataclass(frozen=True)
class SplitPrimeWitness:
    ctx: object
    p: int
    roots: tuple

    def as_dict(self):
        return {"p": self.p, "roots": list(self.roots)}


def find_split_primes(ctx, p_min, how_many, scan_limit=2_000_000):
    """Ascending primes >= p_min where f has d distinct roots mod p.

    Stops early at scan_limit; the report notes how far the scan reached.
    """
    assert p_min >= 2
    coeffs = list(ctx.spec.coeffs)
    d = ctx.degree
    out = []
    n = p_min
    while len(out) < how_many and n <= scan_limit:
        if is_prime(n) and ctx.disc % n != 0:
            roots = roots_mod_p(coeffs, n)
            if len(roots) == d:
                out.append(SplitPrimeWitness(ctx=ctx, p=n, roots=tuple(roots)))
        n += 1
    return out


@dataclass(frozen=True)
class ReducedSet:
    image: ElementSet
    injective: bool
    predicted_injective: bool  # None when no construction metadata was given

    def as_dict(self):
        return {
            "size": self.image.size,
            "injective": self.injective,
            "predictedInjective": self.predicted_injective,
        }


def injectivity_criterion(ctx, x, y, p):
    """Certified test (4x e^y)^d < p with a rational upper bracket for e^y.

    Predicts injectivity only when the inequality is certain, so a True
    prediction is a guarantee, not a heuristic.
    """
    x = Fraction(x)
    y = Fraction(y)
    upper = exp_bracket(y, 24).hi
    return (4 * x * upper) ** ctx.degree < p


def reduce_set(a, witness, root_index=0, construction=None):
    """Apply theta -> root (coefficients mod p) to a number-ring set.

    The injective flag compares |image| with |a| exactly. With construction
    metadata (a GPConstruction), the (4X e^Y)^d < p criterion is evaluated;
    a True prediction with a non-injective image raises PredictionViolation.
    """
    ambient = a.ambient
    assert isinstance(ambient, RingAmbient)
    ctx = ambient.ctx
    if witness.ctx != ctx:
        raise PredictionViolation("witness belongs to a different field")
    p = witness.p
    root = witness.roots[root_index]
    d = ctx.degree
    powers = [1] * d
    for j in range(1, d):
        powers[j] = powers[j - 1] * root % p
    image = ElementSet(
        PrimeFieldAmbient(p),
        (sum(c * powers[j] for j, c in enumerate(vec)) % p for vec in a),
    )
    injective = image.size == a.size
    predicted = None
    if construction is not None:
        predicted = injectivity_criterion(ctx, construction.x, construction.y, p)
        if predicted and not injective:
            raise PredictionViolation(
                f"criterion (4Xe^Y)^d < {p} held but reduction collided"
            )
    return ReducedSet(image=image, injective=injective, predicted_injective=predicted)


def stability_threshold(construction):
    """Least certified T = ceil((8 X^2 e^(2Y))^d): any split p > T preserves
    sum-set and product-set sizes under reduction.

    Elements of A have embeddings of size at most 2X e^Y, so pairwise
    differences of sums are at most 8X e^Y and of products at most
    8 X^2 e^(2Y) in every embedding; beyond T their norms cannot reach p.
    """
    ctx = construction.ctx
    x = Fraction(construction.x)
    y = Fraction(construction.y)
    d = ctx.degree
    terms = 24
    while True:
        b = exp_bracket(2 * y, terms)
        lo = (8 * x * x * b.lo) ** d
        hi = (8 * x * x * b.hi) ** d
        clo, chi = math.ceil(lo), math.ceil(hi)
        if clo == chi:
            return clo
        terms *= 2  # pragma: no cover
