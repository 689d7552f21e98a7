"""Arithmetic in small finite fields GF(p^n).

An element is stored as an integer code in ``range(q)``: the code's base-p
digits (least significant first) are the coordinates in the working
polynomial basis 1, alpha, ..., alpha^(n-1), where alpha is a root of the
monic irreducible modulus.  Multiplication goes through precomputed
exp/log tables for a fixed full-order generator, so everything stays exact.

Separately from the working basis, a field carries an *ordered basis*
(beta_1, ..., beta_n) used only by the indexing bijection

    x = x_1 + x_2 p + ... + x_n p^(n-1)  <->  xi_x = x_1 beta_1 + ... + x_n beta_n.

By default the ordered basis is the polynomial basis, in which case the
bijection is the identity on codes.  Construction is deterministic: with no
modulus given, the lexicographically least monic irreducible (by coefficient
tuple (c_0, ..., c_{n-1})) is chosen, and the generator is the least element
in index order with multiplicative order q - 1.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    IndexOutOfRange,
    NotADivisor,
    NotPrime,
    ReducibleModulus,
    SingularBasis,
)

DEFAULT_MAX_Q = 2**20

# --------------------------------------------------------------------------
# integer and polynomial helpers (used during construction only)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def factorize(m: int) -> dict:
    """Prime factorization by trial division, {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, f, p):
    # schoolbook product of a*b reduced mod the monic polynomial f
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    n = len(f) - 1
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * f[j]) % p
    return _poly_trim(out[:n] if len(out) > n else out)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        # a mod b
        b = _poly_trim(b)
        inv_lead = pow(b[-1], -1, p)
        while len(a) >= len(b) and any(a):
            a = _poly_trim(a)
            if len(a) < len(b):
                break
            c = a[-1] * inv_lead % p
            shift = len(a) - len(b)
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
            a = _poly_trim(a)
        a, b = b, a
    return _poly_trim(a)


def is_irreducible(coeffs, p: int) -> bool:
    """Exact irreducibility test for a monic polynomial over F_p."""
    f = list(coeffs)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x mod f
    xq = _poly_powmod(x, p**n, f, p)
    if _poly_trim(list(xq)) != _poly_trim([0, 1]):
        return False
    # gcd(x^(p^(n/r)) - x, f) == 1 for every prime r | n
    for r in factorize(n):
        xr = _poly_powmod(x, p ** (n // r), f, p)
        diff = list(xr) + [0] * (2 - len(xr))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, f, p)
        if len(_poly_trim(g)) > 1:
            return False
    return True


def canonical_modulus(p: int, n: int) -> tuple:
    """Least monic irreducible of degree n, ordered by (c_0, ..., c_{n-1})."""
    from itertools import product

    for tail in product(range(p), repeat=n):
        f = list(tail) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise ReducibleModulus(f"no irreducible polynomial found for p={p}, n={n}")


# --------------------------------------------------------------------------


class Field:
    """Immutable GF(p^n) context; all operations are pure."""

    def __init__(self, p, n, modulus=None, basis=None, generator=None, max_q=DEFAULT_MAX_Q):
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if n < 1:
            raise ValueError(f"n={n} must be positive")
        q = p**n
        if q > max_q:
            raise FieldTooLarge(f"q={q} exceeds cap {max_q}")
        self.p = p
        self.n = n
        self.q = q

        if modulus is None:
            modulus = canonical_modulus(p, n)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {n}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.modulus = modulus

        if basis is None:
            rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        else:
            rows = tuple(tuple(c % p for c in row) for row in basis)
            if len(rows) != n or any(len(r) != n for r in rows):
                raise SingularBasis(f"ordered basis must be an {n}x{n} digit matrix")
        self.basis_rows = rows
        self.basis_codes = tuple(self.code(r) for r in rows)
        inv = _matrix_inverse(rows, p)
        if inv is None:
            raise SingularBasis("ordered basis rows are linearly dependent")
        self._basis_inv = inv

        if generator is None:
            gen = self._find_generator()
        else:
            gen = self.element_of_index(generator)
            if not self._has_full_order(gen):
                raise ValueError(f"element of index {generator} does not generate the group")
        self.generator = gen

        exp = [0] * (q - 1)
        log = [-1] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, gen)
        if acc != 1:
            raise ValueError("generator order check failed")
        self.exp = tuple(exp)
        self.log = tuple(log)

        self._np_add = None
        self._np_mul = None
        self._add_rows = None

    # -- digit/code conversions ------------------------------------------

    def digits(self, e: int) -> tuple:
        p = self.p
        return tuple((e // p**i) % p for i in range(self.n))

    def code(self, digits) -> int:
        p = self.p
        return sum(int(d) % p * p**i for i, d in enumerate(digits))

    # -- raw polynomial arithmetic (no tables) ---------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        da = _poly_trim(list(self.digits(a)))
        db = _poly_trim(list(self.digits(b)))
        if (len(da) == 1 and da[0] == 0) or (len(db) == 1 and db[0] == 0):
            return 0
        return self.code(_poly_mulmod(da, db, list(self.modulus), self.p))

    def _raw_pow(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return acc

    def _has_full_order(self, a: int) -> bool:
        if a == 0:
            return False
        m = self.q - 1
        if m == 1:
            return a == 1
        return all(self._raw_pow(a, m // r) != 1 for r in factorize(m))

    def _find_generator(self) -> int:
        for x in range(1, self.q):
            cand = self.element_of_index(x)
            if self._has_full_order(cand):
                return cand
        raise ValueError("no generator found (broken modulus?)")

    # -- field operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        s, shift = 0, 1
        for _ in range(self.n):
            s += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return s

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        s, shift = 0, 1
        for _ in range(self.n):
            s += (-a % p) * shift
            a //= p
            shift *= p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scalar_mul(self, c: int, a: int) -> int:
        p = self.p
        c %= p
        s, shift = 0, 1
        for _ in range(self.n):
            s += (c * (a % p)) % p * shift
            a //= p
            shift *= p
        return s

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("0 to a negative power")
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- the indexing bijection x <-> xi_x ---------------------------------

    def element_of_index(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise IndexOutOfRange(f"index {x} not in [0, {self.q})")
        if self.basis_codes == tuple(self.p**i for i in range(self.n)):
            return x
        acc = 0
        for i in range(self.n):
            d = x % self.p
            x //= self.p
            if d:
                acc = self.add(acc, self.scalar_mul(d, self.basis_codes[i]))
        return acc

    def index_of_element(self, e: int) -> int:
        if not 0 <= e < self.q:
            raise IndexOutOfRange(f"code {e} not in [0, {self.q})")
        if self.basis_codes == tuple(self.p**i for i in range(self.n)):
            return e
        d = self.digits(e)
        p = self.p
        coords = [sum(d[j] * self._basis_inv[j][i] for j in range(self.n)) % p for i in range(self.n)]
        return sum(c * p**i for i, c in enumerate(coords))

    # -- subgroups ----------------------------------------------------------

    def subgroup(self, T: int) -> "Subgroup":
        if T < 1 or (self.q - 1) % T != 0:
            raise NotADivisor(f"T={T} does not divide q-1={self.q - 1}")
        step = (self.q - 1) // T
        gen = self.exp[step % (self.q - 1)] if T > 1 else 1
        elements = tuple(self.exp[(step * i) % (self.q - 1)] for i in range(T))
        return Subgroup(self, T, gen, elements)

    # -- bulk tables (lazy, for vectorized set arithmetic) -------------------

    def np_add_table(self):
        """q x q addition table as int32 numpy array (q <= 2048 only)."""
        if self._np_add is None and self.q <= 2048:
            codes = np.arange(self.q, dtype=np.int64)
            acc = np.zeros((self.q, self.q), dtype=np.int64)
            for i in range(self.n):
                di = (codes // self.p**i) % self.p
                acc += ((di[:, None] + di[None, :]) % self.p) * self.p**i
            self._np_add = acc.astype(np.int32)
        return self._np_add

    def np_mul_table(self):
        if self._np_mul is None and self.q <= 2048:
            logs = np.array(self.log, dtype=np.int64)
            exps = np.array(self.exp, dtype=np.int64)
            tbl = np.zeros((self.q, self.q), dtype=np.int64)
            nz = np.arange(1, self.q)
            tbl[1:, 1:] = exps[(logs[nz][:, None] + logs[nz][None, :]) % (self.q - 1)]
            self._np_mul = tbl.astype(np.int32)
        return self._np_mul

    def add_rows(self):
        """Addition table as a list of lists, for hot Python loops."""
        if self._add_rows is None:
            self._add_rows = self.np_add_table().tolist()
        return self._add_rows

    def __repr__(self):
        return f"Field(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class Subgroup:
    """Cyclic subgroup of the multiplicative group, materialized in exponent order."""

    field: Field
    T: int
    gen: int
    elements: tuple = dc_field(repr=False)

    @property
    def t(self) -> int:
        """gcd(T, p-1), the part of the subgroup lying in the prime field."""
        return gcd(self.T, self.field.p - 1)

    @property
    def g(self) -> int:
        """gen^(T/t), a generator of the subgroup's intersection with F_p^*."""
        return self.field.pow(self.gen, self.T // self.t)


def _matrix_inverse(rows, p):
    n = len(rows)
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    col = 0
    for i in range(n):
        piv = next((r for r in range(i, n) if aug[r][col] % p), None)
        if piv is None:
            return None
        aug[i], aug[piv] = aug[piv], aug[i]
        inv = pow(aug[i][col], -1, p)
        aug[i] = [v * inv % p for v in aug[i]]
        for r in range(n):
            if r != i and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(v - c * w) % p for v, w in zip(aug[r], aug[i])]
        col += 1
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def build_field(p, n, modulus=None, basis=None, generator=None, max_q=DEFAULT_MAX_Q) -> Field:
    """Cached field factory; pass modulus/basis as tuples (hashable)."""
    return Field(p, n, modulus=modulus, basis=basis, generator=generator, max_q=max_q)
