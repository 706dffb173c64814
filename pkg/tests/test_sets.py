"""Set calculus: exact sums, products, exponents, energies, oracle equivalence."""

import math
import random
from fractions import Fraction

import pytest

from growthlab.boxes import LogBoxQuery, enum_unit_box
from growthlab.errors import MixedAmbient, TooSmall
from growthlab.sets import (
    ElementSet,
    PrimeFieldAmbient,
    RingAmbient,
    additive_energy,
    growth_report,
    k_fold_product,
    k_fold_sum,
    productset,
    representation_energy_k,
    sumset,
)

from conftest import naive_sumset_quadratic


def ints(line, values):
    return ElementSet(RingAmbient(line), [(v,) for v in values])


def test_small_progression_example(line):
    a = ints(line, [1, 2, 3])
    assert sorted(x[0] for x in sumset(a, a)) == [2, 3, 4, 5, 6]
    assert sorted(x[0] for x in productset(a, a)) == [1, 2, 3, 4, 6, 9]


def test_unit_box_growth_example(sqrt2):
    a = enum_unit_box(LogBoxQuery(sqrt2, Fraction(1)))
    assert sumset(a, a).size == 15
    assert productset(a, a).size == 10


def test_singleton_sizes(line):
    a = ints(line, [7])
    assert sumset(a, a).size == 1 and productset(a, a).size == 1
    with pytest.raises(TooSmall):
        growth_report(a)


def test_k_fold_examples(line, sqrt2):
    zero_one = ints(line, [0, 1])
    assert k_fold_sum(zero_one, 1) == zero_one
    assert sorted(x[0] for x in k_fold_sum(zero_one, 3)) == [0, 1, 2, 3]
    units = enum_unit_box(LogBoxQuery(sqrt2, Fraction(1)))
    assert k_fold_product(units, 2).size == 10
    assert k_fold_product(units, 1) == units


def test_growth_report_examples(line, sqrt2):
    rep = growth_report(ints(line, [1, 2, 3]))
    assert rep.n == 3 and rep.sum_size == 5 and rep.prod_size == 6
    assert abs(rep.delta_plus - math.log(5) / math.log(3)) < 1e-12

    rep = growth_report(enum_unit_box(LogBoxQuery(sqrt2, Fraction(1))))
    assert (rep.n, rep.sum_size, rep.prod_size) == (6, 15, 10)
    assert abs(rep.delta_plus - 1.5114) < 1e-4
    assert abs(rep.delta_times - 1.2851) < 1e-4
    assert abs(rep.solymosi - 15 * 15 * 10 / 6**4) < 1e-12


def test_growth_report_full_multiplicative_group():
    f7 = ElementSet(PrimeFieldAmbient(7), range(1, 7))
    rep = growth_report(f7)
    assert (rep.n, rep.sum_size, rep.prod_size) == (6, 7, 6)
    assert abs(rep.delta_plus - math.log(7) / math.log(6)) < 1e-12


def test_commutativity_random_sets(sqrt2):
    rng = random.Random(11)
    amb = RingAmbient(sqrt2)
    for _ in range(20):
        a = ElementSet(amb, [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(6)])
        b = ElementSet(amb, [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(6)])
        assert sumset(a, b) == sumset(b, a)
        assert productset(a, b) == productset(b, a)


def test_size_bounds_real_embedded(sqrt2):
    rng = random.Random(13)
    amb = RingAmbient(sqrt2)
    for _ in range(20):
        a = ElementSet(amb, {(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(8)})
        n = a.size
        s, p = sumset(a, a).size, productset(a, a).size
        assert n <= s <= n * (n + 1) // 2
        assert p <= n * n


def test_mixed_ambient_rejected(sqrt2, golden, line):
    with pytest.raises(MixedAmbient):
        sumset(ints(line, [1]), ElementSet(RingAmbient(sqrt2), [(1, 0)]))
    with pytest.raises(MixedAmbient):
        productset(ElementSet(RingAmbient(golden), [(1, 0)]),
                   ElementSet(RingAmbient(sqrt2), [(1, 0)]))
    with pytest.raises(MixedAmbient):
        sumset(ElementSet(PrimeFieldAmbient(7), [1]), ElementSet(PrimeFieldAmbient(11), [1]))


def test_additive_energy_examples(line):
    assert additive_energy(ints(line, [0, 1])) == 6
    assert additive_energy(ints(line, [5])) == 1
    assert additive_energy(ints(line, [1, 2, 3])) == 19


def test_representation_energy_examples(line, sqrt2):
    zero_one = ints(line, [0, 1])
    rep = representation_energy_k(zero_one, 2)
    assert rep.count == 6
    assert abs(rep.lower_bound - 16 / 3) < 1e-12

    rep = representation_energy_k(zero_one, 1)
    assert rep.count == 2 and rep.lower_bound == 2  # k=1 equality case

    units = enum_unit_box(LogBoxQuery(sqrt2, Fraction(1)))
    rep = representation_energy_k(units, 2)
    assert rep.count >= 6**4 / 15
    assert abs(rep.lower_bound - 6**4 / 15) < 1e-12


def test_oracle_equivalence_random_quadratic_sets(sqrt2, golden):
    """Sizes from the deduplicating path equal a naive double-loop oracle."""
    rng = random.Random(20260808)
    cases = [(sqrt2, (0, 2)), (golden, (1, 1))]  # theta^2 = u theta + v
    for ctx, rule in cases:
        amb = RingAmbient(ctx)
        for trial in range(15):
            n = rng.randint(2, 30)
            elems = {(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(n)}
            a = ElementSet(amb, elems)
            oracle_sums, oracle_prods = naive_sumset_quadratic(sorted(elems), rule)
            assert sumset(a, a).size == len(oracle_sums)
            assert productset(a, a).size == len(oracle_prods)
            assert set(sumset(a, a)) == oracle_sums
            assert set(productset(a, a)) == oracle_prods


def test_gp_growth_cross_check(sqrt2):
    from growthlab.construct import build_GP

    c = build_GP(sqrt2, 10, 3, 1)
    rep = growth_report(c.product)
    gg = productset(c.units, c.units)
    assert rep.prod_size <= gg.size * c.interval_part.size ** 2
