"""Additive machinery on subsets of a field: Minkowski sums, product sets,
sum closures of subgroups, the xi +- xi^(-1) sets, degeneracy tests, and
multiplicative character sums.

Sets are frozensets of element codes; the bulk operations go through the
field's cached numpy add/mul tables when available.
"""

import cmath
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import TrivialCharacter
from .field import Field, Subgroup


@dataclass(frozen=True)
class ElementSet:
    field: Field
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, code):
        return code in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def bitmap(self) -> int:
        out = 0
        for e in self.members:
            out |= 1 << e
        return out


def element_set(field, codes) -> ElementSet:
    return ElementSet(field, frozenset(codes))


def sumset(X: ElementSet, Y: ElementSet) -> ElementSet:
    f = X.field
    tbl = f.np_add_table()
    if tbl is not None:
        xs = np.fromiter(X.members, dtype=np.int64, count=len(X.members))
        ys = np.fromiter(Y.members, dtype=np.int64, count=len(Y.members))
        vals = np.unique(tbl[np.ix_(xs, ys)])
        return ElementSet(f, frozenset(int(v) for v in vals))
    return ElementSet(f, frozenset(f.add(x, y) for x in X.members for y in Y.members))


def product_set(X: ElementSet, Y: ElementSet) -> ElementSet:
    f = X.field
    tbl = f.np_mul_table()
    if tbl is not None:
        xs = np.fromiter(X.members, dtype=np.int64, count=len(X.members))
        ys = np.fromiter(Y.members, dtype=np.int64, count=len(Y.members))
        vals = np.unique(tbl[np.ix_(xs, ys)])
        return ElementSet(f, frozenset(int(v) for v in vals))
    return ElementSet(f, frozenset(f.mul(x, y) for x in X.members for y in Y.members))


def iterated_sumset(X: ElementSet, k: int) -> ElementSet:
    out = X
    for _ in range(k - 1):
        out = sumset(out, X)
    return out


def sum_closure_r(G: Subgroup):
    """Least k with every nonzero element a sum of k subgroup members, or None.

    None (no cover) happens e.g. when the subgroup sits inside a proper
    subfield.
    """
    f = G.field
    target = frozenset(range(1, f.q))
    gset = element_set(f, G.elements)
    acc = gset
    for k in range(1, f.q + 1):
        if target <= acc.members:
            return k
        acc = sumset(acc, gset)
    return None


@dataclass(frozen=True)
class ABSets:
    a: ElementSet  # {xi + xi^(-1)}
    b: ElementSet  # {xi - xi^(-1)}
    b_symmetric: bool
    b_antisymmetric: bool
    g_symmetric: bool
    g_antisymmetric: bool


def _symmetric(field, members) -> bool:
    return all(field.neg(x) in members for x in members)


def _antisymmetric(field, members) -> bool:
    return all(field.neg(x) not in members for x in members)


def ab_sets(G: Subgroup) -> ABSets:
    f = G.field
    a = frozenset(f.add(x, f.inv(x)) for x in G.elements)
    b = frozenset(f.sub(x, f.inv(x)) for x in G.elements)
    gm = frozenset(G.elements)
    return ABSets(
        ElementSet(f, a),
        ElementSet(f, b),
        _symmetric(f, b),
        _antisymmetric(f, b),
        _symmetric(f, gm),
        _antisymmetric(f, gm),
    )


def subfield_codes(field: Field, d: int) -> frozenset:
    """Elements of the subfield of size p^d (d must divide n)."""
    if field.n % d != 0:
        raise ValueError(f"d={d} does not divide n={field.n}")
    size = field.p**d
    if size == field.q:
        return frozenset(range(field.q))
    step = (field.q - 1) // (size - 1)
    return frozenset([0] + [field.exp[(step * i) % (field.q - 1)] for i in range(size - 1)])


def proper_divisors(n: int):
    return [d for d in range(1, n) if n % d == 0]


def degenerate(G: Subgroup) -> tuple:
    """(subgroup inside a proper subfield, {xi+xi^(-1)} inside a proper subfield).

    Both are decided arithmetically (T dividing p^d - 1, resp. p^d - 1 or
    p^d + 1, for a proper divisor d of n) and cross-checked against the
    materialized sets.
    """
    f = G.field
    p, n, T = f.p, f.n, G.T
    g_in = any((p**d - 1) % T == 0 for d in proper_divisors(n))
    a_in = any((p**d - 1) % T == 0 or (p**d + 1) % T == 0 for d in proper_divisors(n))
    gm = frozenset(G.elements)
    am = ab_sets(G).a.members
    g_direct = any(gm <= subfield_codes(f, d) for d in proper_divisors(n))
    a_direct = any(am <= subfield_codes(f, d) for d in proper_divisors(n))
    assert g_in == g_direct and a_in == a_direct
    return g_in, a_in


def set_in_subfield_coset(field: Field, S: ElementSet) -> bool:
    """Whether S lies in xi * F for some proper subfield F and some xi.

    For S containing a nonzero element a this is equivalent to a^(-1) S
    being inside a proper subfield.
    """
    nz = sorted(x for x in S.members if x)
    if not nz:
        return True
    a_inv = field.inv(nz[0])
    scaled = frozenset(field.mul(a_inv, x) for x in S.members)
    return any(scaled <= subfield_codes(field, d) for d in proper_divisors(field.n))


def invers_count(G: Subgroup) -> int:
    """Number of subgroup members xi with xi - xi^(-1) also in the subgroup."""
    f = G.field
    gm = frozenset(G.elements)
    return sum(1 for x in G.elements if f.sub(x, f.inv(x)) in gm)


@dataclass(frozen=True)
class CharacterTable:
    """Multiplicative character chi = (full-order character)^k, chi(0) = 0."""

    field: Field
    k: int
    values: tuple

    @property
    def order(self) -> int:
        m = self.field.q - 1
        return m // gcd(self.k, m)

    def __call__(self, code: int) -> complex:
        return self.values[code]


def character_power(field: Field, k: int) -> CharacterTable:
    m = field.q - 1
    k %= m if m else 1
    vals = [0j] * field.q
    for e in range(1, field.q):
        vals[e] = cmath.exp(2j * cmath.pi * (field.log[e] * k % m) / m)
    return CharacterTable(field, k, tuple(vals))


def character(field: Field, order: int) -> CharacterTable:
    m = field.q - 1
    if order < 1 or m % order != 0:
        raise ValueError(f"order {order} does not divide q-1={m}")
    return character_power(field, m // order)


def weil_check(G: Subgroup, chi: CharacterTable) -> float:
    """|sum over the subgroup of chi(xi - xi^(-1))| in floating point.

    Exactness budget: at most q unit-magnitude terms, so the accumulated
    error stays far below the 1e-6 tolerance used by the sweeps.
    """
    if chi.order == 1:
        raise TrivialCharacter("character sums need a non-trivial character")
    f = G.field
    total = 0j
    for x in G.elements:
        total += chi.values[f.sub(x, f.inv(x))]
    return abs(total)
