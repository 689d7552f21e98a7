"""Minkowski sums, subgroup closures, inverse-difference sets, characters."""

import math

import pytest

from addix.errors import TrivialCharacter
from addix.field import build_field
from addix.sumsets import (
    ab_sets,
    character,
    character_power,
    degenerate,
    element_set,
    invers_count,
    product_set,
    set_in_subfield_coset,
    subfield_codes,
    sum_closure_r,
    sumset,
    weil_check,
)

from conftest import f4, f9, prime_powers_upto


def test_sumset_identity_elements():
    f = f9()
    X = element_set(f, [1, 3, 7])
    assert sumset(X, element_set(f, [0])).members == X.members
    assert product_set(X, element_set(f, [1])).members == X.members


def test_sumset_f7_subgroup():
    f = build_field(7, 1)
    G = element_set(f, [1, 2, 4])
    GG = sumset(G, G)
    assert GG.members == frozenset({1, 2, 3, 4, 5, 6})


def test_sum_closure_examples():
    f7 = build_field(7, 1)
    assert sum_closure_r(f7.subgroup(6)) == 1
    assert sum_closure_r(f7.subgroup(3)) == 2
    # {1} inside the prime subfield of F_4 never covers
    assert sum_closure_r(f4().subgroup(1)) is None


def test_ab_sets_f9_full_group():
    G = f9().subgroup(8)
    ab = ab_sets(G)
    assert len(ab.b) >= 4
    assert ab.b_symmetric
    assert ab.g_symmetric  # even order, -1 in G


def test_ab_sets_f9_order4():
    f = f9()
    G = f.subgroup(4)
    ab = ab_sets(G)
    # only alpha and 2 alpha contribute nonzero differences, both in G
    assert ab.b.members == frozenset({0, 3, 6})
    assert invers_count(G) == 2


def test_g_symmetric_iff_even_order():
    # odd characteristic: symmetric exactly when -1 is in G (even order);
    # characteristic 2: -1 = 1, so every subgroup is symmetric
    for p, n in [(3, 2), (2, 3), (5, 2), (7, 1)]:
        f = build_field(p, n)
        for T in range(1, f.q):
            if (f.q - 1) % T:
                continue
            ab = ab_sets(f.subgroup(T))
            if p == 2:
                assert ab.g_symmetric and not ab.g_antisymmetric
            else:
                assert ab.g_symmetric == (T % 2 == 0)
                assert ab.g_antisymmetric == (T % 2 == 1)


def test_b_always_symmetric():
    for p, n in [(3, 2), (2, 4), (5, 2), (13, 1)]:
        f = build_field(p, n)
        for T in range(1, f.q):
            if (f.q - 1) % T:
                continue
            assert ab_sets(f.subgroup(T)).b_symmetric


def test_degenerate_examples():
    g_in, a_in = degenerate(f4().subgroup(3))
    assert (g_in, a_in) == (False, True)  # 3 | 2^1 + 1
    f16 = build_field(2, 4)
    assert degenerate(f16.subgroup(5)) == (False, True)  # 5 | 2^2 + 1
    f27 = build_field(3, 3)
    assert degenerate(f27.subgroup(26)) == (False, False)
    assert degenerate(f27.subgroup(2)) == (True, True)  # 2 | 3 - 1


def test_degenerate_direct_membership():
    # the arithmetic criterion matches materialized subfield membership
    f = f4()
    am = ab_sets(f.subgroup(3)).a.members
    assert am <= subfield_codes(f, 1)


def test_set_in_subfield_coset():
    f16 = build_field(2, 4)
    sub = subfield_codes(f16, 2)
    assert set_in_subfield_coset(f16, element_set(f16, sub))
    twisted = frozenset(f16.mul(7, x) for x in sub)
    assert set_in_subfield_coset(f16, element_set(f16, twisted))
    assert not set_in_subfield_coset(f16, element_set(f16, range(16)))


def test_invers_count_full_group():
    for p, n in [(3, 2), (5, 2), (3, 3), (7, 2)]:
        f = build_field(p, n)
        assert invers_count(f.subgroup(f.q - 1)) == f.q - 3
    # even q: q - 2
    for p, n in [(2, 2), (2, 3), (2, 4)]:
        f = build_field(p, n)
        assert invers_count(f.subgroup(f.q - 1)) == f.q - 2


def test_invers_count_trivial_subgroup():
    assert invers_count(f9().subgroup(1)) == 0


def test_character_table_properties():
    f = f9()
    chi = character(f, 8)
    assert chi.order == 8
    assert chi(0) == 0
    for a in range(1, 9):
        for b in range(1, 9):
            assert abs(chi(f.mul(a, b)) - chi(a) * chi(b)) < 1e-9
    quad = character(f, 2)
    assert quad.order == 2
    for a in range(1, 9):
        assert abs(quad(a) ** 2 - 1) < 1e-9


def test_weil_check_f9_frozen():
    f = f9()
    G = f.subgroup(4)
    quad = character(f, 2)
    mag = weil_check(G, quad)
    assert mag == pytest.approx(2.0, abs=1e-9)
    assert mag <= 2 * math.sqrt(9) + 1e-6


def test_weil_check_rejects_trivial():
    f = f9()
    with pytest.raises(TrivialCharacter):
        weil_check(f.subgroup(4), character_power(f, 0))


def test_weil_bound_sweep_small():
    for p, n in prime_powers_upto(49):
        f = build_field(p, n)
        bound = 2 * math.sqrt(f.q) + 1e-6
        for T in range(1, f.q):
            if (f.q - 1) % T:
                continue
            G = f.subgroup(T)
            u = (f.q - 1) // T
            for j in range(1, u):
                assert weil_check(G, character_power(f, j * T)) <= bound


def test_ab_product_inside_double_sum_b():
    # AB is contained in B + B for subgroup-derived sets, q <= 121
    for p, n in prime_powers_upto(121):
        f = build_field(p, n)
        for T in range(1, f.q):
            if (f.q - 1) % T:
                continue
            ab = ab_sets(f.subgroup(T))
            prod = product_set(ab.a, ab.b)
            bb = sumset(ab.b, ab.b)
            assert prod.members <= bb.members
