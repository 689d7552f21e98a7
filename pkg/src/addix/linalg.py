"""Linear algebra over prime fields F_p.

Matrices are plain lists of int rows; everything is exact modular
arithmetic.  Subspaces of a field (viewed as F_p^n through working-basis
digits) are kept in reduced row echelon form, which makes the representation
canonical: two Subspace values are equal iff their basis rows are identical.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from .errors import DimensionMismatch


def rref(rows, p):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c] % p, -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c] % p
                m[i] = [(v - f * w) % p for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


@dataclass
class SolveResult:
    consistent: bool
    particular: tuple | None
    kernel: tuple  # tuple of basis vectors of the homogeneous solution space


def solve(A, b, p) -> SolveResult:
    """Solve A x = b over F_p, returning the full solution-space description.

    The particular solution sets all free variables to zero.
    """
    rows = len(A)
    if rows != len(b):
        raise DimensionMismatch(f"{rows} rows vs {len(b)} right-hand sides")
    ncols = len(A[0]) if rows else 0
    aug = [list(A[i]) + [b[i] % p] for i in range(rows)]
    red, pivots = rref(aug, p)
    if ncols in pivots:
        return SolveResult(False, None, ())
    particular = [0] * ncols
    for r, c in enumerate(pivots):
        particular[c] = red[r][ncols]
    kernel = []
    pivset = set(pivots)
    for c in range(ncols):
        if c in pivset:
            continue
        v = [0] * ncols
        v[c] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][c] % p
        kernel.append(tuple(v))
    return SolveResult(True, tuple(particular), tuple(kernel))


def lexmin_solution(particular, kernel, p):
    """Lexicographically least vector in particular + span(kernel)."""
    if not kernel:
        return tuple(particular)
    red, pivots = rref(kernel, p)
    out = list(particular)
    for row, c in zip(red, pivots):
        f = out[c] % p
        if f:
            out = [(v - f * w) % p for v, w in zip(out, row)]
    return tuple(out)


def matrix_inverse(rows, p):
    from .field import _matrix_inverse

    return _matrix_inverse(rows, p)


def gaussian_binomial(n: int, r: int, p: int) -> int:
    """Number of r-dimensional subspaces of F_p^n, exact."""
    if not 0 <= r <= n:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """F_p-subspace of a field, canonical rref basis of digit vectors."""

    field: object
    rows: tuple  # tuple of digit-vector tuples, in reduced row echelon form

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.field.n - len(self.rows)

    @cached_property
    def pivots(self) -> tuple:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.rows)

    @cached_property
    def row_codes(self) -> tuple:
        return tuple(self.field.code(r) for r in self.rows)

    @cached_property
    def element_codes(self) -> tuple:
        """All p^dim member codes, in span-enumeration order."""
        f = self.field
        codes = [0]
        for rc in self.row_codes:
            step = [f.scalar_mul(c, rc) for c in range(f.p)]
            codes = [f.add(e, s) for s in step for e in codes]
        return tuple(codes)

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.element_codes)

    def contains(self, code: int) -> bool:
        d = list(self.field.digits(code))
        p = self.field.p
        for row, c in zip(self.rows, self.pivots):
            if d[c]:
                f = d[c]
                d = [(v - f * w) % p for v, w in zip(d, row)]
        return not any(d)

    def coords(self, code: int):
        """Coordinates of a member in the rref basis (None if not a member)."""
        d = list(self.field.digits(code))
        p = self.field.p
        out = []
        for row, c in zip(self.rows, self.pivots):
            f = d[c] % p
            out.append(f)
            if f:
                d = [(v - f * w) % p for v, w in zip(d, row)]
        if any(d):
            return None
        return tuple(out)

    @cached_property
    def coset_labels(self) -> tuple:
        """Label of each element code; labels ordered by least coset index."""
        f = self.field
        labels = [-1] * f.q
        reps = []
        members = self.element_codes
        for x in range(f.q):
            e = f.element_of_index(x)
            if labels[e] < 0:
                lab = len(reps)
                reps.append(e)
                for u in members:
                    labels[f.add(e, u)] = lab
        object.__setattr__(self, "_coset_reps", tuple(reps))
        return tuple(labels)

    @property
    def coset_reps(self) -> tuple:
        self.coset_labels
        return self._coset_reps

    def label_of(self, code: int) -> int:
        return self.coset_labels[code]

    def serialize(self) -> list:
        """Flat form: [n, r, p] followed by the basis digits, row-major."""
        out = [self.field.n, self.dim, self.field.p]
        for row in self.rows:
            out.extend(row)
        return out

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rows={[list(r) for r in self.rows]})"


def subspace_from_rows(field, rows) -> Subspace:
    red, _ = rref(rows, field.p)
    red = [r for r in red if any(r)]
    return Subspace(field, tuple(tuple(v) for v in red))


def subspace_from_codes(field, codes) -> Subspace:
    return subspace_from_rows(field, [field.digits(c) for c in codes])


def subspace_deserialize(field, flat) -> Subspace:
    n, r, p = flat[0], flat[1], flat[2]
    if n != field.n or p != field.p:
        raise DimensionMismatch(f"serialized subspace is for F_{p}^{n}")
    rows = [tuple(flat[3 + i * n : 3 + (i + 1) * n]) for i in range(r)]
    return Subspace(field, tuple(rows))


def enumerate_subspaces(field, r):
    """All r-dimensional subspaces, canonically ordered.

    Order: pivot-column sets ascending lexicographically, then free entries
    in row-major lexicographic order.  Each subspace appears exactly once.
    """
    n, p = field.n, field.p
    if not 0 <= r <= n:
        return
    if r == 0:
        yield Subspace(field, ())
        return
    for pivots in combinations(range(n), r):
        pivset = set(pivots)
        free = [(i, j) for i in range(r) for j in range(pivots[i] + 1, n) if j not in pivset]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield Subspace(field, tuple(tuple(row) for row in rows))


_SUBSPACE_CACHE: dict = {}


def all_subspaces(field, r) -> tuple:
    key = (id(field), r)
    if key not in _SUBSPACE_CACHE:
        _SUBSPACE_CACHE[key] = tuple(enumerate_subspaces(field, r))
    return _SUBSPACE_CACHE[key]
