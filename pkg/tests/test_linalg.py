"""Gaussian elimination, subspace enumeration, coset labeling."""

import pytest
from hypothesis import given, strategies as st

from addix.field import build_field
from addix.linalg import (
    Subspace,
    all_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    lexmin_solution,
    rref,
    solve,
    subspace_deserialize,
    subspace_from_codes,
)

from conftest import SMALL_FIELDS, f9


def brute_subspace_count(n, r, p):
    """Independent oracle: orbit count of ordered independent tuples."""
    num = den = 1
    for i in range(r):
        num *= p**n - p**i
        den *= p**r - p**i
    return num // den


def test_solve_identity():
    res = solve([[1, 0], [0, 1]], [2, 1], 3)
    assert res.consistent and res.particular == (2, 1) and res.kernel == ()


def test_solve_underdetermined():
    res = solve([[1, 1]], [1], 2)
    assert res.consistent
    assert res.particular == (1, 0)
    assert res.kernel == ((1, 1),)


def test_solve_inconsistent():
    res = solve([[1, 1], [2, 2]], [1, 1], 3)
    assert not res.consistent


def test_lexmin_solution():
    # solutions of x + y = 2 over F_3: (2,0), (1,1), (0,2); least is (0,2)
    res = solve([[1, 1]], [2], 3)
    assert lexmin_solution(res.particular, res.kernel, 3) == (0, 2)


@given(st.data())
def test_solve_round_trip(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    rows = data.draw(st.integers(1, 5))
    cols = data.draw(st.integers(1, 5))
    A = [[data.draw(st.integers(0, p - 1)) for _ in range(cols)] for _ in range(rows)]
    x = [data.draw(st.integers(0, p - 1)) for _ in range(cols)]
    b = [sum(A[i][j] * x[j] for j in range(cols)) % p for i in range(rows)]
    res = solve(A, b, p)
    assert res.consistent
    for extra in [(0,) * cols] + list(res.kernel):
        y = [(res.particular[j] + extra[j]) % p for j in range(cols)]
        assert all(sum(A[i][j] * y[j] for j in range(cols)) % p == b[i] % p for i in range(rows))


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(7, 0, 2) == 1
    assert gaussian_binomial(4, 2, 2) == 35
    for n in range(6):
        for r in range(n + 1):
            for p in (2, 3, 5):
                assert gaussian_binomial(n, r, p) == brute_subspace_count(n, r, p)


@pytest.mark.parametrize("p,n", SMALL_FIELDS + [(3, 3), (5, 2)])
def test_enumeration_complete_and_canonical(p, n):
    f = build_field(p, n)
    for r in range(n + 1):
        seen = set()
        spans = set()
        for U in enumerate_subspaces(f, r):
            assert U.dim == r
            red, _ = rref(U.rows, p)
            assert tuple(tuple(v) for v in red) == U.rows  # already canonical
            seen.add(U.rows)
            spans.add(U.member_set)
        assert len(seen) == gaussian_binomial(n, r, p)
        assert len(spans) == len(seen)


def test_enumerate_dim0_and_examples():
    f = f9()
    assert len(list(enumerate_subspaces(f, 0))) == 1
    assert len(list(enumerate_subspaces(f, 1))) == 4
    f8 = build_field(2, 3)
    assert len(list(enumerate_subspaces(f8, 1))) == 7


def test_coset_label_examples():
    f = f9()
    U = subspace_from_codes(f, [1])  # span{1} = {0,1,2}
    labels = U.coset_labels
    assert labels[0] == 0 and labels[1] == 0 and labels[2] == 0
    # alpha and 1+alpha differ by 1, same coset
    assert U.label_of(3) == U.label_of(4)
    # three cosets of size three
    from collections import Counter

    sizes = Counter(labels)
    assert sorted(sizes.values()) == [3, 3, 3]
    assert set(labels) == {0, 1, 2}


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (5, 2), (2, 4), (7, 2), (3, 3)])
def test_coset_labeling_is_congruence(p, n):
    # label(x) == label(y) iff x - y in U, exhaustively for q <= 49
    f = build_field(p, n)
    for r in range(n + 1):
        for U in all_subspaces(f, r):
            labels = U.coset_labels
            members = U.member_set
            for x in range(f.q):
                for y in range(f.q):
                    assert (labels[x] == labels[y]) == (f.sub(x, y) in members)


def test_coset_reps_are_least_index():
    f = build_field(3, 3)
    U = subspace_from_codes(f, [4])
    reps = U.coset_reps
    assert reps[0] == 0
    labels = U.coset_labels
    for lab, rep in enumerate(reps):
        idx = [f.index_of_element(e) for e in range(f.q) if labels[e] == lab]
        assert f.index_of_element(rep) == min(idx)
    # labels ordered by representative index
    assert [f.index_of_element(r) for r in reps] == sorted(f.index_of_element(r) for r in reps)


def test_subspace_serialize_round_trip():
    f = f9()
    for U in all_subspaces(f, 1):
        flat = U.serialize()
        assert flat[:3] == [2, 1, 3]
        assert subspace_deserialize(f, flat) == U


def test_membership_and_coords():
    f = build_field(2, 4)
    U = subspace_from_codes(f, [3, 12])
    for e in range(16):
        assert U.contains(e) == (e in U.member_set)
    for u in U.element_codes:
        c = U.coords(u)
        acc = 0
        for ci, rc in zip(c, U.row_codes):
            acc = f.add(acc, f.scalar_mul(ci, rc))
        assert acc == u
