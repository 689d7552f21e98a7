"""Exact counts of squares and square roots modulo T.

N(T) is the number of distinct residues x^2 mod T.  It is multiplicative,
and on prime powers it has classical closed forms:

    odd p:  N(p^l) = (p^(l+1) + p + 2) / (2(p+1))   l even
            N(p^l) = (p^(l+1) + 2p + 1) / (2(p+1))   l odd
    p = 2:  N(2^l) = (2^(l-1) + 4) / 3              l even
            N(2^l) = (2^(l-1) + 5) / 3              l odd

L_T(j) counts solutions of x^2 = j mod T and L_T is its maximum over j;
by the Chinese remainder theorem L_T is the product of the L values at the
prime-power parts.  N(a,s,T) counts distinct squares x^2 mod T reachable
from the class x = a mod s (distinct square *values*, not solution pairs).
Everything here is exact integer arithmetic; the oracle paths are brute
force and guarded by a budget.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, NotADivisor
from .field import factorize

ORACLE_LIMIT = 10**7


@dataclass
class CountReport:
    what: str
    T: int
    a: int | None
    s: int | None
    formula_value: int
    oracle_value: int | None

    @property
    def agreed(self):
        return self.oracle_value is None or self.formula_value == self.oracle_value


def _stangl_prime_power(p: int, ell: int) -> int:
    if p == 2:
        num = 2 ** (ell - 1) + (4 if ell % 2 == 0 else 5)
        assert num % 3 == 0
        return num // 3
    num = p ** (ell + 1) + (p + 2 if ell % 2 == 0 else 2 * p + 1)
    den = 2 * (p + 1)
    assert num % den == 0
    return num // den


def count_squares(T: int) -> int:
    """N(T) via the prime-power closed forms and multiplicativity."""
    if T < 1:
        raise ValueError("T must be positive")
    out = 1
    for p, ell in factorize(T).items():
        out *= _stangl_prime_power(p, ell)
    return out


def _squares_array(T: int):
    if T > ORACLE_LIMIT:
        raise BudgetExceeded(f"T={T} exceeds brute-force limit {ORACLE_LIMIT}")
    x = np.arange(T, dtype=np.int64)
    return (x * x) % T


def count_squares_oracle(T: int) -> int:
    """|{x^2 mod T}| by brute force (x and T-x square alike, so half suffices)."""
    if T > ORACLE_LIMIT:
        raise BudgetExceeded(f"T={T} exceeds brute-force limit {ORACLE_LIMIT}")
    x = np.arange(T // 2 + 1, dtype=np.int64)
    return int(np.unique((x * x) % T).size)


def count_squares_in_class(a: int, s: int, T: int) -> int:
    """N(a,s,T): distinct squares x^2 mod T with x = a mod s."""
    if s < 1 or T % s != 0:
        raise NotADivisor(f"s={s} does not divide T={T}")
    if T > ORACLE_LIMIT:
        raise BudgetExceeded(f"T={T} exceeds brute-force limit {ORACLE_LIMIT}")
    x = np.arange(a % s, T, s, dtype=np.int64)
    return int(np.unique((x * x) % T).size)


def class_counts(s: int, T: int) -> list:
    """[N(a,s,T) for a in 0..s-1] in one pass."""
    if s < 1 or T % s != 0:
        raise NotADivisor(f"s={s} does not divide T={T}")
    sq = _squares_array(T)
    cls = np.arange(T, dtype=np.int64) % s
    keys = np.unique(cls * T + sq)
    return np.bincount(keys // T, minlength=s).tolist()


def class_max(s: int, T: int) -> int:
    """N(s,T) = max over a of N(a,s,T)."""
    return max(class_counts(s, T))


def sqrt_count(j: int, T: int) -> int:
    """L_T(j): number of x in 0..T-1 with x^2 = j mod T."""
    return int(np.count_nonzero(_squares_array(T) == j % T))


def sqrt_count_max(T: int) -> int:
    """L_T = max over j of L_T(j)."""
    return int(np.bincount(_squares_array(T), minlength=T).max())


def sqrt_count_max_factored(T: int) -> dict:
    """{p^v: L_{p^v}} for the prime-power parts of T; their product is L_T."""
    return {p**e: sqrt_count_max(p**e) for p, e in factorize(T).items()}
