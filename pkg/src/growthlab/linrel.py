"""Counting solutions of x_1 + ... + x_k = target inside a multiplicative set.

Counting is meet-in-the-middle on exact partial-sum tables, so counts are
exact; optional filters restrict to elements positive in one designated real
embedding (default: the largest root) or to nondegenerate tuples, those with
no vanishing subsum.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import BudgetExceeded, DomainError
from .sets import ElementSet, RingAmbient

DEFAULT_BUDGET = 4_000_000


@dataclass(frozen=True)
class SolutionQuery:
    elements: ElementSet
    k: int
    target: object = 1
    positive_embedding: int = None   # embedding index, or None for no filter
    nondegenerate_only: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        assert self.k >= 1


def _require_units(s):
    amb = s.ambient
    if isinstance(amb, RingAmbient):
        for vec in s:
            if abs(amb.ctx.norm_vec(vec)) != 1:
                raise DomainError(f"{vec} is not a unit")
    else:
        for x in s:
            if x == amb.zero:
                raise DomainError("0 is not invertible")


def _positive_filter(s, index):
    amb = s.ambient
    if not isinstance(amb, RingAmbient):
        raise DomainError("positivity filter needs a real-embedded ambient")
    ctx = amb.ctx
    if index == 0:
        index = ctx.degree  # default embedding: the largest root
    from fractions import Fraction

    keep = [vec for vec in s.sorted()
            if ctx.sign_at([Fraction(c) for c in vec], index) > 0]
    return ElementSet(amb, keep)


def count_solutions(query):
    """Exact number of ordered k-tuples from S summing to the target."""
    s = query.elements
    _require_units(s)
    if query.positive_embedding is not None:
        s = _positive_filter(s, query.positive_embedding)
    amb = s.ambient
    k = query.k
    if s.size ** ((k + 1) // 2) > query.budget:
        raise BudgetExceeded(f"|S|^ceil(k/2) exceeds budget {query.budget}")
    target = amb.canon(query.target)

    if query.nondegenerate_only:
        return _count_nondegenerate(s, k, target)

    k_left = k // 2
    k_right = k - k_left
    right = _partial_sums(s, k_right)
    if k_left == 0:
        return right.get(target, 0)
    left = _partial_sums(s, k_left)
    total = 0
    for partial, ways in left.items():
        total += ways * right.get(amb.sub(target, partial), 0)
    return total


def _partial_sums(s, k):
    amb = s.ambient
    counts = Counter({amb.canon(x): 1 for x in s})
    for _ in range(k - 1):
        nxt = Counter()
        for partial, ways in counts.items():
            for x in s:
                nxt[amb.add(partial, x)] += ways
        counts = nxt
    return counts


def is_nondegenerate(ambient, tup):
    """True when every nonempty subset of the tuple has nonzero sum."""
    zero = ambient.zero
    items = [ambient.canon(x) for x in tup]
    for mask in range(1, 1 << len(items)):
        total = zero
        for j, x in enumerate(items):
            if mask >> j & 1:
                total = ambient.add(total, x)
        if total == zero:
            return False
    return True


def _count_nondegenerate(s, k, target):
    amb = s.ambient
    total = 0
    for tup in itertools.product(s.sorted(), repeat=k):
        running = amb.zero
        for x in tup:
            running = amb.add(running, x)
        if running == target and is_nondegenerate(amb, tup):
            total += 1
    return total


@dataclass(frozen=True)
class PigeonholeReport:
    max_fiber: int
    bound: float
    argmax: object
    k_sum_size: int

    def as_dict(self):
        return {
            "maxFiber": self.max_fiber,
            "bound": self.bound,
            "argmax": list(self.argmax) if isinstance(self.argmax, tuple) else self.argmax,
            "kSumSize": self.k_sum_size,
        }


def pigeonhole_report(s, k, budget=DEFAULT_BUDGET):
    """Largest k-fold sum fiber, its achieving value, and the averaging floor.

    max_s r_k(s) >= |S|^k / |kS| always; the assert would only fire on an
    arithmetic bug.
    """
    if s.size ** ((k + 1) // 2) > budget:
        raise BudgetExceeded(f"|S|^ceil(k/2) exceeds budget {budget}")
    fibers = _partial_sums(s, k)
    max_fiber = max(fibers.values())
    bound = s.size**k / len(fibers)
    assert max_fiber >= bound
    argmax = min(val for val, ways in fibers.items() if ways == max_fiber)
    return PigeonholeReport(
        max_fiber=max_fiber, bound=bound, argmax=argmax, k_sum_size=len(fibers)
    )
