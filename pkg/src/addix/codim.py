"""Codimension-k representability and the least additive index.

A map F has codimension k when there is a subspace U of codimension k, a
linearized polynomial M and one constant per coset of U with
F(xi) = M(xi) + a_coset(xi) at every known point.  For a partial map this is
representability of *some* total extension, which is what the plain linear
system expresses when only occupied cosets get constant unknowns.

Feasibility for a fixed U reduces to a small system in the restriction of M
to U alone: within each coset, differences of known points land in U and pin
M there; nothing else is constrained.  The search uses that reduced system
to reject subspaces quickly, and builds the canonical witness (full matrix +
constants unknowns, lexicographically least solution, then degree reduction)
only for the subspace that wins.
"""

import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import BudgetExceeded
from .linalg import Subspace, all_subspaces, lexmin_solution, rref, solve, subspace_deserialize
from .linearized import LinearizedPoly, apply_matrix, lp_eval, lp_fit_on_subspace, lp_zero
from .maps import PartialMap

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AffineWitness:
    subspace: Subspace
    poly: LinearizedPoly
    constants: tuple  # sorted tuple of (coset label, element code), occupied cosets only

    @property
    def k(self) -> int:
        return self.subspace.codim

    def constant(self, label: int) -> int:
        for lab, c in self.constants:
            if lab == label:
                return c
        return 0

    def value_at(self, code: int) -> int:
        f = self.subspace.field
        return f.add(lp_eval(self.poly, code), self.constant(self.subspace.label_of(code)))

    def to_json_dict(self) -> dict:
        f = self.subspace.field
        consts = dict(self.constants)
        p_k = f.p**self.k
        return {
            "k": self.k,
            "subspace_rref": self.subspace.serialize(),
            "M_coeffs": self.poly.serialize(),
            "constants": [[lab, list(f.digits(consts.get(lab, 0)))] for lab in range(p_k)],
        }


def witness_from_json(field, obj) -> AffineWitness:
    U = subspace_deserialize(field, obj["subspace_rref"])
    coeffs = tuple(field.code(d) for d in obj["M_coeffs"])
    consts = tuple(
        (lab, field.code(digits)) for lab, digits in obj["constants"] if field.code(digits)
    )
    return AffineWitness(U, LinearizedPoly(field, coeffs), tuple(sorted(consts)))


@dataclass
class IndexResult:
    least_codim: int | None
    witness: AffineWitness | None
    tested: tuple  # ((k, subspaces tested), ...) in scan order
    certified_at_least: int

    @property
    def least_additive_index(self):
        if self.least_codim is None:
            return None
        f = self.witness.subspace.field if self.witness else None
        return f.p**self.least_codim if f else None

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "least_codim": self.least_codim,
            "least_additive_index": self.least_additive_index,
            "certified_codim_at_least": self.certified_at_least,
            "subspaces_tested": {str(k): c for k, c in self.tested},
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


# --------------------------------------------------------------------------
# feasibility


def _coset_groups(F: PartialMap, U: Subspace):
    """Domain positions grouped by coset label, {label: [positions]}."""
    labels = U.coset_labels
    groups = {}
    for i, e in enumerate(F.domain):
        groups.setdefault(labels[e], []).append(i)
    return groups


def restriction_images(F: PartialMap, U: Subspace):
    """Images of U's basis under some linear map consistent with F, or None.

    Within each coset the differences to a reference point lie in U and must
    be hit linearly; across cosets the same restriction must work.  Returns a
    tuple of basis-image codes (lexicographically least solution) when the
    reduced system is consistent, else None.
    """
    f = F.field
    r = U.dim
    groups = _coset_groups(F, U)
    if r == 0:
        return ()
    C, V = [], []
    for positions in groups.values():
        if len(positions) < 2:
            continue
        i0 = positions[0]
        e0, v0 = F.domain[i0], F.values[i0]
        for i in positions[1:]:
            delta = f.sub(F.domain[i], e0)
            C.append(U.coords(delta))
            V.append(f.digits(f.sub(F.values[i], v0)))
    if not C:
        return (0,) * r
    # digitwise decoupled systems share the coefficient matrix C
    n, p = f.n, f.p
    aug = [list(c) + list(v) for c, v in zip(C, V)]
    red, pivots = rref(aug, p)
    if any(c >= r for c in pivots):
        return None
    sol_digits = [[0] * n for _ in range(r)]
    for row, c in zip(red, pivots):
        # free variables zero; fix dependent coords relative to kernel later
        for d in range(n):
            sol_digits[c][d] = row[r + d]
    # lexicographic least over (img_0 digits, img_1 digits, ...): reduce by kernel
    coeff_rows = [row[:r] for row in red]
    pivset = set(pivots)
    kernel = []
    for c in range(r):
        if c in pivset:
            continue
        v = [0] * r
        v[c] = 1
        for row, pc in zip(coeff_rows, pivots):
            v[pc] = -row[c] % p
        kernel.append(v)
    if kernel:
        flat = [d for img in sol_digits for d in img]
        # kernel vectors act digit-wise and independently per digit slot; the
        # flat lexmin is computed on the interleaved (image, digit) layout
        kflat = []
        for v in kernel:
            for d in range(n):
                kv = [0] * (r * n)
                for c in range(r):
                    kv[c * n + d] = v[c]
                kflat.append(tuple(kv))
        flat = lexmin_solution(flat, tuple(kflat), p)
        sol_digits = [flat[i * n : (i + 1) * n] for i in range(r)]
    return tuple(f.code(d) for d in sol_digits)


_DELTA_CACHE: dict = {}


def _delta_structure(field, U: Subspace, domain):
    """Coset pair structure shared by every map on the same domain.

    Within each coset of U the differences of domain points to the coset's
    first point land in U.  Feasibility of a map only requires its value
    differences to respect the linear dependencies among those deltas, and
    the dependencies are a property of (U, domain) alone, so they are
    computed once: each pair is either a pivot or carries the coefficients
    expressing its delta in terms of earlier pivot deltas.
    """
    key = (id(field), U.rows, domain)
    hit = _DELTA_CACHE.get(key)
    if hit is not None:
        return hit
    labels = U.coset_labels
    groups = {}
    for i, e in enumerate(domain):
        groups.setdefault(labels[e], []).append(i)
    pairs = []
    coords = []
    for positions in groups.values():
        i0 = positions[0]
        for i in positions[1:]:
            pairs.append((i, i0))
            coords.append(list(U.coords(field.sub(domain[i], domain[i0]))))
    p = field.p
    basis = []  # (echelon vector, lead column, combo over original pair indices)
    deps = []  # (pair index, {pivot pair index: coefficient})
    for t, vec in enumerate(coords):
        v = list(vec)
        comb: dict = {}
        for bv, lead, bcomb in basis:
            c = v[lead] % p
            if c:
                v = [(a - c * b) % p for a, b in zip(v, bv)]
                for s, mu in bcomb.items():
                    comb[s] = (comb.get(s, 0) + c * mu) % p
        lead = next((j for j, a in enumerate(v) if a % p), None)
        if lead is None:
            deps.append((t, {s: mu for s, mu in comb.items() if mu}))
        else:
            inv = pow(v[lead], -1, p)
            vn = [a * inv % p for a in v]
            ncomb = {s: -mu * inv % p for s, mu in comb.items()}
            ncomb[t] = inv % p
            basis.append((vn, lead, ncomb))
    struct = (groups, pairs, deps)
    _DELTA_CACHE[key] = struct
    return struct


def feasible(F: PartialMap, U: Subspace) -> bool:
    """Whether some extension of F is coset-affine over U (fast path)."""
    f = F.field
    if U.dim == 0 or len(F.domain) == 0:
        return True
    _, pairs, deps = _delta_structure(f, U, F.domain)
    if not deps:
        return True
    vals = F.values
    V = [f.sub(vals[i], vals[i0]) for i, i0 in pairs]
    for t, comb in deps:
        acc = 0
        for s, mu in comb.items():
            acc = f.add(acc, f.scalar_mul(mu, V[s]))
        if acc != V[t]:
            return False
    return True


def fit_witness(F: PartialMap, U: Subspace):
    """Canonical witness over U, or None when no extension of F fits.

    The witness solves for the full n x n digit matrix of M plus one constant
    per occupied coset, takes the lexicographically least solution (matrix
    digits row-major, then constant digits by ascending label), and finally
    replaces M by the unique polynomial supported on p^0..p^(dim U - 1) that
    agrees with it on U, shifting constants to keep all represented values.
    """
    f = F.field
    n, p = f.n, f.p
    if not feasible(F, U):
        return None
    if not F.domain:
        return AffineWitness(U, lp_zero(f), ())
    groups = _coset_groups(F, U)
    occupied = sorted(groups)
    pos_of = {lab: n * n + i * n for i, lab in enumerate(occupied)}
    nvars = n * n + n * len(occupied)
    labels = U.coset_labels
    A, b = [], []
    for i, e in enumerate(F.domain):
        de = f.digits(e)
        dv = f.digits(F.values[i])
        base = pos_of[labels[e]]
        for out_d in range(n):
            row = [0] * nvars
            for in_d in range(n):
                row[in_d * n + out_d] = de[in_d]
            row[base + out_d] = 1
            A.append(row)
            b.append(dv[out_d])
    res = solve(A, b, p)
    if not res.consistent:
        return None
    sol = lexmin_solution(res.particular, res.kernel, p)
    mat = [list(sol[i * n : (i + 1) * n]) for i in range(n)]
    consts = {lab: f.code(sol[pos_of[lab] : pos_of[lab] + n]) for lab in occupied}
    # degree reduction: replace the matrix map by its least-degree agreement on U
    images = tuple(apply_matrix(f, mat, rc) for rc in U.row_codes)
    poly = lp_fit_on_subspace(U, images)
    reps = U.coset_reps
    reduced = []
    for lab in occupied:
        rep = reps[lab]
        shift = f.sub(apply_matrix(f, mat, rep), lp_eval(poly, rep))
        reduced.append((lab, f.add(consts[lab], shift)))
    return AffineWitness(U, poly, tuple(reduced))


def verify_witness(F: PartialMap, w: AffineWitness) -> bool:
    """True iff the witness equation holds at every known point of F and the
    polynomial respects the codimension-k degree bound."""
    f = F.field
    top = w.poly.top_power
    if top is not None and top > f.n - w.k - 1:
        return False
    labels = w.subspace.coset_labels
    consts = dict(w.constants)
    for e, v in zip(F.domain, F.values):
        if f.add(lp_eval(w.poly, e), consts.get(labels[e], 0)) != v:
            return False
    return True


# --------------------------------------------------------------------------
# search


def least_codimension(F: PartialMap, k_max=None, fit_budget=None, deadline=None) -> IndexResult:
    """Scan k = 0, 1, ... and return the least feasible codimension.

    Subspaces are visited in canonical enumeration order, so the returned
    witness is deterministic.  When the fit budget or deadline runs out the
    result certifies infeasibility of every fully scanned level instead.
    """
    f = F.field
    top = f.n if k_max is None else min(k_max, f.n)
    tested = []
    fits = 0
    for k in range(top + 1):
        count = 0
        for U in all_subspaces(f, f.n - k):
            if fit_budget is not None and fits >= fit_budget:
                return IndexResult(None, None, tuple(tested), k)
            if deadline is not None and time.monotonic() > deadline:
                return IndexResult(None, None, tuple(tested), k)
            fits += 1
            count += 1
            if feasible(F, U):
                w = fit_witness(F, U)
                tested.append((k, count))
                return IndexResult(k, w, tuple(tested), k)
        tested.append((k, count))
    return IndexResult(None, None, tuple(tested), top + 1)


def least_codimension_with_outliers(F: PartialMap, m: int, k_max=None) -> IndexResult:
    """Minimum least codimension over deletion of at most m domain points.

    Restriction can only lower the codimension, so only deletions of exactly
    min(m, |domain|) points need to be searched.  Exact and exhaustive, hence
    guarded: the domain must stay small and the subset count bounded.
    """
    d = len(F.domain)
    if d > 64:
        raise BudgetExceeded(f"outlier search limited to domains of size <= 64, got {d}")
    mm = min(m, d)
    if m > 3 and comb(d, mm) > 4096:
        raise BudgetExceeded(f"C({d},{mm}) deletion subsets exceed the search budget")
    def key(res):
        return res.least_codim if res.least_codim is not None else F.field.n + 1

    best = None
    for drop in combinations(range(d), mm):
        dropset = set(drop)
        sub = F.restrict([i for i in range(d) if i not in dropset])
        res = least_codimension(sub, k_max=k_max)
        if best is None or key(res) < key(best):
            best = res
        if best.least_codim == 0:
            break
    return best


# --------------------------------------------------------------------------
# exhaustive enumeration of representable maps (independent of the solver)


def enumerate_codim_maps(field, k) -> set:
    """All total maps admitting a codimension-k witness, as value tuples.

    Enumerates triples (U, linear map on U, constants per coset) directly,
    which is an oracle independent of the fitting path.  Each entry lists
    F(0), F(1), ..., F(q-1).
    """
    n, p, q = field.n, field.p, field.q
    r = n - k
    out = set()
    for U in all_subspaces(field, r):
        labels = U.coset_labels
        reps = U.coset_reps
        members = U.element_codes
        span_pos = {u: pos for pos, u in enumerate(members)}
        elt_info = [(labels[e], span_pos[field.sub(e, reps[labels[e]])]) for e in range(q)]
        for images in product(range(q), repeat=r):
            # linear-map values along the same span enumeration order as members
            lvals = [0]
            for img in images:
                step = [field.scalar_mul(c, img) for c in range(p)]
                lvals = [field.add(e, s) for s in step for e in lvals]
            for consts in product(range(q), repeat=p**k):
                out.add(tuple(field.add(lvals[pos], consts[lab]) for lab, pos in elt_info))
    return out
