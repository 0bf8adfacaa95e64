"""The linearized normalizer system and its trivial kernel over residue fields.

An unknown 52x52 matrix Z normalizes the group infinitesimally when, for each
generator x_a(1) with a among the eight roots +-a1..+-a4, the difference
``Z x_a(1) - x_a(1) Z`` is x_a(1) times an element of the 52-dimensional span
S = <T_1..T_4, X_a for all 48 roots> (the coefficients of that element are
extra unknowns, one block per generator).  Together with the list of matrix
positions where Z is known to vanish, this is a linear system over the
residue field F_p whose kernel is expected to be zero.

The expectation holds for p = 5 and p = 7 but provably not for p = 3: the
53x53 matrix evaluating the basis of the unconstrained solution space
(identity, T_1..T_4, all X_a) at the 53 zero positions has determinant
2**11 * 3, and the direction that survives mod 3 is the root vector X_19,
whose only nonzero entry on the position list is the coroot coefficient 3
at (51, 38).  ``kernel_report`` names that surviving direction explicitly.

Two independent routes compute the kernel dimension:

* ``build_linear_system`` + ``kernel_dim``: the literal sparse system in all
  52^2 + 8*52 = 3120 unknowns (one equation per generator and matrix
  position, plus one per zero position), eliminated exactly over F_p;
* ``kernel_dim_fast``: the equivalent condition
  ``x_a(1)^{-1} Z x_a(1) - Z  in  S`` expressed through an integral residual
  map whose kernel is exactly S modulo every odd prime (the span matrices
  have pairwise disjoint supports, and the diagonal block is resolved by the
  Cartan matrix, which has determinant one); the solution space is then
  intersected generator by generator.

All elimination is exact: matrices live in float64 with entries reduced
mod p, and every intermediate value is an integer far below 2**53, so the
fast BLAS products are exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

import numpy as np

from . import roots
from .algebra import get_algebra
from .group import x_int
from .reference_tables import ZERO_POSITIONS_PRINTED, to_zero_based

GENERATOR_ROOTS: tuple[int, ...] = (1, -1, 2, -2, 3, -3, 4, -4)

_N_Z = roots.DIM * roots.DIM          # 2704 entries of Z
_N_SPAN = 52                          # 4 diagonal + 48 root coefficients
_N_UNKNOWNS = _N_Z + len(GENERATOR_ROOTS) * _N_SPAN


def _validate_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"p must be an odd prime, got {p}")
    if p > 113:
        raise ValueError("primes above 113 exceed the packed int8 layout")


def zero_position_list() -> list[tuple[int, int]]:
    """The verbatim 1-based list of positions where Z vanishes."""
    return list(ZERO_POSITIONS_PRINTED)


# -- exact elimination mod p over float64 --------------------------------------


def _rref_mod_p(a: np.ndarray, p: int, panel: int = 64) -> tuple[np.ndarray, list[int]]:
    """In-place reduced row echelon form of ``a`` mod p; returns (a, pivots).

    Exactness: pivot rows and multipliers are reduced to 0..p-1 before each
    blocked product, every unreduced intermediate stays far below 2**53, and
    float products of such integers are exact.
    """
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c0 in range(0, n, panel):
        if r >= m:
            break
        c1 = min(c0 + panel, n)
        rows0 = r
        panel_piv: list[int] = []
        for c in range(c0, c1):
            col = a[r:, c] % p
            a[r:, c] = col
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i], :] = a[[i, r], :]
            if panel_piv:
                # the trailing part of the new pivot row is stale: apply the
                # corrections from the earlier pivots of this panel
                mult = a[r, panel_piv] % p
                if mult.any():
                    a[r, c1:] -= mult @ a[rows0:r, c1:]
                a[r, panel_piv] = 0.0
            inv = pow(int(a[r, c]) % p, -1, p)
            a[r, c:] = (a[r, c:] * inv) % p
            f = a[r + 1 :, c]
            if f.any():
                a[r + 1 :, c + 1 : c1] -= np.outer(f, a[r, c + 1 : c1])
            panel_piv.append(c)
            pivots.append(c)
            r += 1
        if panel_piv and r < m:
            mult = a[r:, panel_piv] % p
            a[r:, panel_piv] = mult
            if c1 < n and mult.any():
                a[r:, c1:] -= mult @ a[rows0:r, c1:]
            a[r:, panel_piv] = 0.0
    # backward pass, bottom-up in pivot blocks: finish each block's rows to
    # reduced form, then clear the entries above the block in one product.
    for k1 in range(r, 0, -panel):
        k0 = max(k1 - panel, 0)
        for t in range(k1 - k0 - 1, -1, -1):
            row = k0 + t
            a[row] %= p
            if t:
                col = pivots[row]
                mult = a[k0:row, col] % p
                if mult.any():
                    a[k0:row, col:] -= np.outer(mult, a[row, col:])
                a[k0:row, col] = 0.0
        pcols = pivots[k0:k1]
        if k0 > 0 and pcols:
            mult = a[:k0, pcols] % p
            a[:k0, pcols] = mult
            if mult.any():
                a[:k0, pcols[0] :] -= mult @ a[k0:k1, pcols[0] :]
            a[:k0, pcols] = 0.0
    return a, pivots


def rank_mod_p(mat: np.ndarray, p: int, chunk: int = 6144) -> int:
    """Exact rank of an integer matrix over F_p, processed in row chunks."""
    echelon: np.ndarray | None = None
    pivots: list[int] = []
    for lo in range(0, mat.shape[0], chunk):
        c = (mat[lo : lo + chunk].astype(np.float64)) % p
        if echelon is not None and pivots:
            mult = c[:, pivots] % p
            c[:, pivots] = mult
            if mult.any():
                c -= mult @ echelon
        c, piv = _rref_mod_p(c, p)
        if not piv:
            continue
        new_rows = c[: len(piv)]
        if echelon is None:
            echelon, pivots = new_rows, piv
            continue
        mult = echelon[:, piv] % p
        echelon[:, piv] = mult
        if mult.any():
            echelon = (echelon - mult @ new_rows) % p
        echelon = np.vstack([echelon, new_rows])
        pivots = pivots + piv
        order = np.argsort(pivots)
        echelon = echelon[order]
        pivots = [pivots[i] for i in order]
    return len(pivots)


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Column basis (n x k, entries 0..p-1) of the kernel of ``mat`` mod p."""
    a = (mat.astype(np.float64)) % p
    a, pivots = _rref_mod_p(a, p)
    n = mat.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, c in enumerate(free):
        basis[c, j] = 1
    if pivots:
        block = (-a[: len(pivots), :][:, free]) % p
        basis[pivots, :] = block.astype(np.int64)
    return basis


# -- the span S and its residual map --------------------------------------------


@cache
def _span_data() -> tuple[np.ndarray, np.ndarray]:
    """(52 x 2704 span vectors, 2652 x 2704 residual map) as integer arrays.

    The residual map vanishes exactly on S over every odd prime: its rows are
    coordinate picks outside the supports, proportionality conditions inside
    each root-matrix support, and the diagonal conditions obtained by solving
    the four simple-root diagonal coordinates through the Cartan matrix.
    """
    alg = get_algebra()
    dim = roots.DIM
    t_mats = [alg.t_matrix(i) for i in roots.SIMPLE_ROOTS]
    x_mats = [alg.x_matrix(a) for a in roots.ALL_ROOTS]
    span = np.stack([m.reshape(-1) for m in t_mats + x_mats])

    occupied: dict[tuple[int, int], int] = {}
    for m in x_mats:
        for r, c in zip(*np.nonzero(m)):
            r, c = int(r), int(c)
            if r == c or (r, c) in occupied:
                raise AssertionError("span supports are not disjoint off-diagonal")
            occupied[(r, c)] = 1
    for m in t_mats:
        if np.any(m - np.diag(np.diag(m))):
            raise AssertionError("diagonal span element is not diagonal")

    rows: list[np.ndarray] = []
    for r in range(dim):
        for c in range(dim):
            if r != c and (r, c) not in occupied:
                row = np.zeros(_N_Z, dtype=np.int64)
                row[dim * r + c] = 1
                rows.append(row)
    for m in x_mats:
        entries = [(int(r), int(c), int(m[r, c])) for r, c in zip(*np.nonzero(m))]
        r0, c0, v0 = entries[0]
        for r, c, v in entries[1:]:
            row = np.zeros(_N_Z, dtype=np.int64)
            row[dim * r + c] = v0
            row[dim * r0 + c0] = -v
            rows.append(row)
    simple_pos = [roots.v_pos(i) for i in roots.SIMPLE_ROOTS]
    diag_vecs = np.stack([np.diag(m) for m in t_mats])       # 4 x 52
    cartan_inv = roots.cartan_matrix_inverse()
    for q in range(dim):
        if q in simple_pos:
            continue
        row = np.zeros(_N_Z, dtype=np.int64)
        row[dim * q + q] = 1
        for k, sp in enumerate(simple_pos):
            coef = sum(int(diag_vecs[i, q]) * int(cartan_inv[i, k]) for i in range(4))
            row[dim * sp + sp] -= coef
        rows.append(row)
    residual = np.stack(rows)
    if residual.shape[0] != _N_Z - _N_SPAN:
        raise AssertionError("residual map has the wrong number of rows")
    if np.any(residual @ span.T):
        raise AssertionError("residual map does not vanish on the span")
    return span, residual


# -- the literal linear system ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """The assembled system over F_p.

    Unknown layout: the 2704 entries of Z in row-major order, then one block
    of 52 span coefficients (4 diagonal, 24 positive-root, 24 negative-root)
    per generator in ``GENERATOR_ROOTS`` order.  Each equation row states one
    matrix position of Z x_a(1) - x_a(1) (Z + sum a_i T_i + sum b_j X_j +
    sum c_j X_-j) = 0, and each constraint row pins one listed position of Z
    to zero.
    """

    p: int
    matrix: np.ndarray               # int8, equations x 3120, entries mod p
    constraint_rows: int

    @property
    def unknowns(self) -> int:
        return self.matrix.shape[1]

    @property
    def equations(self) -> int:
        return self.matrix.shape[0]


def _span_matrices_ordered() -> list[np.ndarray]:
    alg = get_algebra()
    mats = [alg.t_matrix(i) for i in roots.SIMPLE_ROOTS]
    mats += [alg.x_matrix(a) for a in roots.POSITIVE_ROOTS]
    mats += [alg.x_matrix(-a) for a in roots.POSITIVE_ROOTS]
    return mats


def build_linear_system(p: int, *, include_constraints: bool = True) -> LinearSystem:
    """Assemble the literal normalizer system over F_p."""
    _validate_prime(p)
    dim = roots.DIM
    span_mats = _span_matrices_ordered()
    eye = np.eye(dim, dtype=np.int64)
    n_constraints = len(ZERO_POSITIONS_PRINTED) if include_constraints else 0
    out = np.zeros((len(GENERATOR_ROOTS) * _N_Z + n_constraints, _N_UNKNOWNS), dtype=np.int8)
    for g, a in enumerate(GENERATOR_ROOTS):
        xg = x_int(a, 1)
        block = np.kron(eye, xg.T) - np.kron(xg, eye)
        rows = slice(g * _N_Z, (g + 1) * _N_Z)
        out[rows, :_N_Z] = block % p
        cols = _N_Z + g * _N_SPAN
        for m, s in enumerate(span_mats):
            out[rows, cols + m] = (-(xg @ s).reshape(-1)) % p
    if include_constraints:
        base = len(GENERATOR_ROOTS) * _N_Z
        for k, (r, c) in enumerate(to_zero_based(ZERO_POSITIONS_PRINTED)):
            out[base + k, dim * r + c] = 1
    return LinearSystem(p=p, matrix=out, constraint_rows=n_constraints)


def kernel_dim(sys: LinearSystem) -> int:
    """Kernel dimension of the assembled system, by exact elimination."""
    return sys.unknowns - rank_mod_p(sys.matrix, sys.p)


# -- the sequential-intersection route -------------------------------------------


def _conjugation_condition(p: int, a: int, residual: np.ndarray | None) -> np.ndarray:
    """Matrix of Z -> residual(x_a(1)^{-1} Z x_a(1) - Z) on vec(Z), mod p."""
    xg = x_int(a, 1).astype(np.float64) % p
    xg_inv = x_int(a, -1).astype(np.float64) % p
    cond = np.kron(xg_inv, xg.T)
    cond[np.diag_indices_from(cond)] -= 1.0
    cond %= p
    if residual is not None:
        cond = (residual @ cond) % p
    return cond


def _intersect_generator(
    p: int, a: int, basis: np.ndarray, residual: np.ndarray | None
) -> np.ndarray:
    """Restrict a kernel basis to vectors whose conjugation defect stays in S.

    ``residual`` is the span's residual map, or None to demand that the
    defect vanish entirely (the centralizer condition).
    """
    k = basis.shape[1]
    if k == 0:
        return basis
    dim = roots.DIM
    xg = x_int(a, 1).astype(np.float64) % p
    xg_inv = x_int(a, -1).astype(np.float64) % p
    stack = basis.T.astype(np.float64).reshape(k, dim, dim)
    conj = (xg_inv @ stack) @ xg - stack
    flat = conj.reshape(k, dim * dim)
    res = (flat if residual is None else flat @ residual.T) % p
    null = nullspace_mod_p(res.T, p)
    return (basis @ null) % p


def _initial_basis(include_constraints: bool) -> np.ndarray:
    dim = roots.DIM
    if not include_constraints:
        return np.eye(_N_Z, dtype=np.int64)
    banned = {dim * r + c for r, c in to_zero_based(ZERO_POSITIONS_PRINTED)}
    free = [i for i in range(_N_Z) if i not in banned]
    basis = np.zeros((_N_Z, len(free)), dtype=np.int64)
    for j, i in enumerate(free):
        basis[i, j] = 1
    return basis


@cache
def constrained_kernel_basis(p: int, *, include_constraints: bool = True) -> np.ndarray:
    """Basis (columns) of the Z-solutions, via sequential intersection.

    The span coefficients are determined linearly by Z once membership holds,
    so the full kernel projects isomorphically onto these Z-solutions.
    The result is cached per (p, include_constraints); treat it as read-only.
    """
    _validate_prime(p)
    _, residual = _span_data()
    residual_f = residual.astype(np.float64)
    basis = _initial_basis(include_constraints)
    # The first generator acts on the full coordinate basis, where the
    # condition matrix is cheaper built directly than through the stack.
    first, rest = GENERATOR_ROOTS[0], GENERATOR_ROOTS[1:]
    cond = _conjugation_condition(p, first, residual_f)
    free_cols = np.nonzero(basis.any(axis=1))[0]
    null = nullspace_mod_p(cond[:, free_cols], p)
    current = np.zeros((_N_Z, null.shape[1]), dtype=np.int64)
    current[free_cols] = null
    for a in rest:
        current = _intersect_generator(p, a, current, residual_f)
        if current.shape[1] == 0:
            break
    return current


def kernel_dim_fast(p: int, *, include_constraints: bool = True) -> int:
    """Kernel dimension via sequential intersection in Z-space.

    Equivalent to ``kernel_dim(build_linear_system(p))``.
    """
    return constrained_kernel_basis(p, include_constraints=include_constraints).shape[1]


def _identify_direction(p: int, z: np.ndarray) -> str | None:
    """Name a matrix direction mod p if it is a known basis element."""
    z = z % p
    candidates: list[tuple[str, np.ndarray]] = [
        ("identity", np.eye(roots.DIM, dtype=np.int64))
    ]
    candidates += [(f"X[{a:+d}]", get_algebra().x_matrix(a)) for a in roots.ALL_ROOTS]
    for name, mat in candidates:
        mat = mat % p
        for c in range(1, p):
            if np.array_equal(z, (c * mat) % p):
                return name if c == 1 else f"{c} * {name}"
    return None


def kernel_report(p: int) -> dict:
    """Constrained-kernel summary for one residue characteristic.

    ``dimension`` is the honest computed value; ``matches_expected`` compares
    it against the expected trivial kernel.  When a one-dimensional kernel
    survives, ``survivor`` names its Z-direction if it is proportional to a
    single root-vector matrix or to the identity.
    """
    basis = constrained_kernel_basis(p, include_constraints=True)
    dim = basis.shape[1]
    survivor = None
    if dim == 1:
        survivor = _identify_direction(p, basis[:, 0].reshape(roots.DIM, roots.DIM))
    return {
        "p": p,
        "equations": len(GENERATOR_ROOTS) * _N_Z + len(ZERO_POSITIONS_PRINTED),
        "unknowns": _N_UNKNOWNS,
        "dimension": dim,
        "expected": 0,
        "matches_expected": dim == 0,
        "survivor": survivor,
    }


def centralizer_check(p: int = 3) -> dict:
    """Solve Z x_a(1) = x_a(1) Z for the eight generators over F_p.

    The solution space must be exactly the scalar matrices.
    """
    dimension, scalars_only, identity_found = _centralizer_summary(p)
    return {
        "p": p,
        "dimension": dimension,
        "scalars_only": scalars_only,
        "detail": "solution space is spanned by the identity"
        if identity_found
        else f"solution space has dimension {dimension}",
    }


@cache
def _centralizer_summary(p: int) -> tuple[int, bool, bool]:
    _validate_prime(p)
    dim = roots.DIM
    basis = np.eye(_N_Z, dtype=np.int64)
    for g, a in enumerate(GENERATOR_ROOTS):
        if g == 0:
            cond = _conjugation_condition(p, a, None)
            basis = nullspace_mod_p(cond, p)
        else:
            basis = _intersect_generator(p, a, basis, None)
        if basis.shape[1] <= 1:
            break
    scalars_only = basis.shape[1] == 1
    identity_found = False
    if basis.shape[1] == 1:
        v = basis[:, 0] % p
        eye_vec = np.eye(dim, dtype=np.int64).reshape(-1)
        nz = np.nonzero(v)[0]
        if nz.size and np.array_equal(
            v, (int(v[nz[0]]) * eye_vec) % p
        ):
            identity_found = True
    return int(basis.shape[1]), bool(scalars_only and identity_found), identity_found


if __name__ == "__main__":
    import time

    sys3 = build_linear_system(3)
    print(f"system: {sys3.equations} equations, {sys3.unknowns} unknowns")
    t0 = time.perf_counter()
    kd = kernel_dim(sys3)
    t1 = time.perf_counter()
    print(f"kernel_dim(p=3, direct) = {kd} in {t1 - t0:.1f}s")
    for p in (3, 5, 7):
        t0 = time.perf_counter()
        rep = kernel_report(p)
        t1 = time.perf_counter()
        extra = f", survivor {rep['survivor']}" if rep["survivor"] else ""
        print(f"kernel_report(p={p}): dimension {rep['dimension']}{extra} in {t1 - t0:.1f}s")
    t0 = time.perf_counter()
    free_dim = kernel_dim_fast(3, include_constraints=False)
    t1 = time.perf_counter()
    print(f"unconstrained kernel (p=3) = {free_dim} in {t1 - t0:.1f}s (>= 1 expected)")
    print(centralizer_check(3))
