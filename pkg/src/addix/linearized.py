"""Linearized polynomials: sum of a_j X^(p^j), the F_p-linear self-maps.

A polynomial is stored as a full length-n coefficient tuple (element codes,
a_0 first).  Every F_p-linear map of the field is induced by exactly one
such polynomial; restricted to an r-dimensional subspace, it is induced by
exactly one polynomial supported on powers p^0 .. p^(r-1).
"""

from dataclasses import dataclass

from .errors import DimensionMismatch
from .linalg import lexmin_solution, solve


@dataclass(frozen=True)
class LinearizedPoly:
    field: object
    coeffs: tuple  # length n, element codes, a_0 first

    def __post_init__(self):
        if len(self.coeffs) != self.field.n:
            raise DimensionMismatch(f"need exactly {self.field.n} coefficients")

    @property
    def top_power(self):
        """Largest j with a_j nonzero, or None for the zero polynomial."""
        for j in range(self.field.n - 1, -1, -1):
            if self.coeffs[j]:
                return j
        return None

    def serialize(self) -> list:
        return [list(self.field.digits(c)) for c in self.coeffs]

    def __repr__(self):
        return f"LinearizedPoly(coeffs={list(self.coeffs)})"


def lp_zero(field) -> LinearizedPoly:
    return LinearizedPoly(field, (0,) * field.n)


def lp_identity(field) -> LinearizedPoly:
    return LinearizedPoly(field, (1,) + (0,) * (field.n - 1))


def lp_from_coeffs(field, coeffs) -> LinearizedPoly:
    coeffs = tuple(coeffs) + (0,) * (field.n - len(tuple(coeffs)))
    return LinearizedPoly(field, coeffs)


def lp_eval(M: LinearizedPoly, x: int) -> int:
    """Evaluate via iterated Frobenius: n-1 applications total."""
    f = M.field
    acc = 0
    fx = x
    for j in range(f.n):
        c = M.coeffs[j]
        if c:
            acc = f.add(acc, f.mul(c, fx))
        if j + 1 < f.n:
            fx = f.frobenius(fx)
    return acc


def lp_to_matrix(M: LinearizedPoly) -> list:
    """Digit matrix of the induced map; row i is the image of alpha^i."""
    f = M.field
    return [list(f.digits(lp_eval(M, f.p**i))) for i in range(f.n)]


def apply_matrix(field, mat, x: int) -> int:
    d = field.digits(x)
    p = field.p
    out = [0] * field.n
    for i, di in enumerate(d):
        if di:
            row = mat[i]
            for j in range(field.n):
                out[j] = (out[j] + di * row[j]) % p
    return field.code(out)


def lp_from_matrix(field, mat) -> LinearizedPoly:
    """The unique linearized polynomial inducing the given digit matrix."""
    targets = [field.code(mat[i]) for i in range(field.n)]
    basis = [field.p**i for i in range(field.n)]
    return _fit(field, basis, targets, field.n)


def lp_fit_on_subspace(U, images) -> LinearizedPoly:
    """Least-degree polynomial agreeing with the linear map row_i -> images[i] on U.

    The result is supported on powers p^0 .. p^(r-1) where r = dim U, and is
    the unique such polynomial.
    """
    if len(images) != U.dim:
        raise DimensionMismatch(f"need {U.dim} images, got {len(images)}")
    if U.dim == 0:
        return lp_zero(U.field)
    return _fit(U.field, list(U.row_codes), list(images), U.dim)


def _fit(field, points, targets, r) -> LinearizedPoly:
    """Solve for coefficients a_0..a_{r-1} with sum_j a_j x^(p^j) = t at each point."""
    n, p = field.n, field.p
    # frobenius powers of each interpolation point
    frob = []
    for x in points:
        fx, row = x, []
        for j in range(r):
            row.append(fx)
            fx = field.frobenius(fx)
        frob.append(row)
    # unknown ordering: a_0 digit 0, a_0 digit 1, ..., a_{r-1} digit n-1
    nvars = r * n
    A, b = [], []
    for i, t in enumerate(targets):
        rows = [[0] * nvars for _ in range(n)]
        for j in range(r):
            fx = frob[i][j]
            for d in range(n):
                col = field.digits(field.mul(p**d, fx)) if fx else (0,) * n
                v = j * n + d
                for out_d in range(n):
                    rows[out_d][v] = col[out_d]
        td = field.digits(t)
        for out_d in range(n):
            A.append(rows[out_d])
            b.append(td[out_d])
    res = solve(A, b, p)
    if not res.consistent:
        raise DimensionMismatch("no linearized polynomial fits the assignment")
    sol = lexmin_solution(res.particular, res.kernel, p)
    coeffs = [field.code(sol[j * n : (j + 1) * n]) for j in range(r)]
    return lp_from_coeffs(field, coeffs)
