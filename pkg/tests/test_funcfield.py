"""Genus-0 section sets: exact counts, the PG identity, and envelopes."""

import itertools
import math

import pytest

from growthlab.errors import DegreeTooSmall, IdentityViolation, PivotNotInP
from growthlab.funcfield import (
    build_A_ff,
    build_G_ff,
    build_P_ff,
    expected_g_size,
    expected_p_size,
    ff_growth_report,
    ff_to_rational,
)
from growthlab.gf import GF
from growthlab.sets import productset, sumset


# -- independent oracles (own tiny mod-q arithmetic, prime q only) --------------------


def oracle_scan_P(q, d_p):
    """Brute scan: degree exactly d_p, no root among 0..q-1 (prime q)."""
    out = []
    for coeffs in itertools.product(range(q), repeat=d_p + 1):
        if coeffs[-1] == 0:
            continue
        if all(sum(c * pow(a, k, q) for k, c in enumerate(coeffs)) % q for a in range(q)):
            out.append(coeffs)
    return out


def oracle_scan_G(q, d_g):
    """Brute scan: nonzero, degree <= d_g, fully split over F_q (prime q).

    A polynomial of degree e splits iff it is a scalar times a product of e
    linear factors; equivalently the number of roots counted with
    multiplicity is e. The scan factors by repeated root extraction.
    """
    def strip_root(coeffs, a):
        # synthetic division by (x - a) over F_q; coeffs ascending, exact
        rev = list(reversed(coeffs))
        out = []
        acc = 0
        for c in rev:
            acc = (acc * a + c) % q
            out.append(acc)
        if out[-1] != 0:
            return None
        quot = list(reversed(out[:-1]))
        return quot

    out = []
    for coeffs in itertools.product(range(q), repeat=d_g + 1):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            continue
        work = coeffs[:]
        while len(work) > 1:
            for a in range(q):
                quot = strip_root(work, a)
                if quot is not None:
                    work = quot
                    break
            else:
                break
        if len(work) == 1:
            out.append(tuple(coeffs + [0] * (d_g + 1 - len(coeffs))))
    return out


@pytest.mark.parametrize("q,d_p", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)])
def test_P_counts_match_formula_and_scan(q, d_p):
    built = build_P_ff(q, d_p)
    assert built.size == expected_p_size(q, d_p)
    assert set(built.sorted()) == set(oracle_scan_P(q, d_p))


def test_P_frozen_small_sets():
    assert build_P_ff(2, 2).sorted() == [(1, 1, 1)]
    assert set(build_P_ff(2, 3).sorted()) == {(1, 0, 1, 1), (1, 1, 0, 1)}
    assert build_P_ff(3, 3).size == 16


def test_P_requires_degree_at_least_q():
    with pytest.raises(DegreeTooSmall):
        build_P_ff(2, 1)
    with pytest.raises(DegreeTooSmall):
        build_P_ff(3, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("d_g", [0, 1, 2, 3, 4])
def test_G_counts_match_formula(q, d_g):
    built = build_G_ff(q, d_g)
    assert built.size == expected_g_size(q, d_g)
    assert built.size == (q - 1) * math.comb(d_g + q, d_g)


@pytest.mark.parametrize("q,d_g", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_G_matches_split_scan(q, d_g):
    built = build_G_ff(q, d_g)
    assert set(built.sorted()) == set(oracle_scan_G(q, d_g))


def test_G_frozen_small_sets():
    assert set(build_G_ff(2, 1).sorted()) == {(1, 0), (0, 1), (1, 1)}
    assert set(build_G_ff(2, 2).sorted()) == {
        (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1)}
    assert build_G_ff(3, 1).size == 8


def test_zero_section_excluded():
    for q, d in ((2, 2), (3, 3)):
        assert all(any(v) for v in build_P_ff(q, d).sorted())
    for q, d in ((2, 2), (3, 2)):
        assert all(any(v) for v in build_G_ff(q, d).sorted())


@pytest.mark.parametrize("q,d_p,d_g", [(2, 2, 1), (2, 3, 2), (2, 4, 1), (3, 3, 1), (3, 3, 2), (3, 4, 2)])
def test_pg_identity_exact(q, d_p, d_g):
    a = build_A_ff(q, d_p, d_g)
    p_set = build_P_ff(q, d_p)
    g_set = build_G_ff(q, d_g)
    assert a.size * (q - 1) == p_set.size * g_set.size


def test_A_frozen_examples():
    a = build_A_ff(2, 2, 1)
    assert set(a.sorted()) == {(1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 0, 1)}
    assert build_A_ff(2, 3, 2).size == 12
    assert build_A_ff(3, 3, 1).size == 64


def test_products_of_split_sections_split():
    for q in (2, 3):
        for d_g in (1, 2):
            g = build_G_ff(q, d_g)
            doubled = set(build_G_ff(q, 2 * d_g).sorted())
            prods = productset(g.elements, g.elements)
            assert set(prods) <= doubled


def test_ff_growth_report_small():
    a = build_A_ff(2, 2, 1)
    rep = ff_growth_report(a)
    assert rep.growth.sum_size == 4
    assert rep.growth.prod_size <= 6
    assert rep.sum_bound == 16 and rep.sum_bound_ok
    # frozen sums: doubles vanish, cross sums land back in A
    sums = sumset(a.elements, a.elements)
    assert set(sums) == {(0, 0, 0, 0), (1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 0, 1)}


@pytest.mark.parametrize("q,d_p,d_g", [(3, 3, 1), (2, 3, 2)])
def test_ff_sum_bound(q, d_p, d_g):
    a = build_A_ff(q, d_p, d_g)
    rep = ff_growth_report(a)
    assert rep.growth.sum_size <= q ** (d_p + d_g + 1)


def test_ff_to_rational_identification():
    a = build_A_ff(2, 2, 1)
    note = ff_to_rational(a, (1, 1, 1))
    assert note["pivot"] == "1 + x + x^2"
    assert len(note["identification"]) == 3
    assert note["sizesInvariant"]
    with pytest.raises(PivotNotInP):
        ff_to_rational(a, (1, 0, 1))


def test_prime_power_field_tables():
    gf4 = GF(4)
    # x and x+1 are the two cube roots of 1 besides 1: multiplicative order 3
    assert gf4.mul(2, 2) == 3 and gf4.mul(2, 3) == 1
    assert gf4.add(2, 2) == 0  # characteristic 2
    gf9 = GF(9)
    assert gf9.add(1, 2) == 0  # characteristic 3
    for a in gf9.units():
        order = 1
        x = a
        while x != 1:
            x = gf9.mul(x, a)
            order += 1
        assert 8 % order == 0  # the unit group is cyclic of order 8


def test_g_counts_prime_power_q4():
    # the count formula is field-size driven, so GF(4) follows it too
    assert build_G_ff(4, 2).size == 3 * math.comb(6, 2)
