"""Conjugation-rigidity linear system: assembly oracle, kernels, centralizer."""

from __future__ import annotations

import random

import numpy as np
import pytest

from chevf4 import roots
from chevf4.group import x_int
from chevf4.reference_tables import ZERO_POSITIONS_PRINTED, to_zero_based
from chevf4.rigidity import (
    GENERATOR_ROOTS,
    build_linear_system,
    centralizer_check,
    constrained_kernel_basis,
    kernel_dim,
    kernel_dim_fast,
    kernel_report,
    nullspace_mod_p,
    rank_mod_p,
    zero_position_list,
)

N_Z = roots.DIM * roots.DIM
N_UNKNOWNS = N_Z + 8 * roots.DIM


# ---------------------------------------------------------------------------
# the exact elimination core, against a naive oracle


def naive_rref_rank_nullspace(matrix: np.ndarray, p: int):
    """Pure-Python row reduction over F_p returning (rank, nullspace basis)."""
    rows = [[int(x) % p for x in row] for row in matrix.tolist()]
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((k for k in range(r, n_rows) if rows[k][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for k in range(n_rows):
            if k != r and rows[k][c]:
                factor = rows[k][c]
                rows[k] = [(a - factor * b) % p for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for c in free:
        vec = [0] * n_cols
        vec[c] = 1
        for k, pc in enumerate(pivots):
            vec[pc] = (-rows[k][c]) % p
        basis.append(vec)
    return r, basis


@pytest.mark.parametrize("p", [3, 5, 7])
def test_elimination_matches_naive_oracle(p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        n_rows = int(rng.integers(1, 14))
        n_cols = int(rng.integers(1, 14))
        matrix = rng.integers(-p, p, size=(n_rows, n_cols)).astype(np.int64)
        expected_rank, expected_basis = naive_rref_rank_nullspace(matrix, p)
        assert rank_mod_p(matrix, p) == expected_rank
        basis = nullspace_mod_p(matrix, p)
        assert basis.shape[1] == len(expected_basis)
        if basis.shape[1]:
            # every reported kernel vector really is in the kernel, and independent
            residual = (matrix @ basis) % p
            assert not np.any(residual)
            assert rank_mod_p(basis.T, p) == basis.shape[1]


# ---------------------------------------------------------------------------
# system shape and constraint list


def test_system_dimensions():
    system = build_linear_system(3)
    assert system.matrix.shape == (8 * N_Z + 53, N_UNKNOWNS)
    assert system.constraint_rows == 53
    unconstrained = build_linear_system(3, include_constraints=False)
    assert unconstrained.matrix.shape == (8 * N_Z, N_UNKNOWNS)


def test_zero_positions_match_printed_table():
    positions = zero_position_list()  # verbatim 1-based table
    assert len(positions) == 53
    assert tuple(positions) == ZERO_POSITIONS_PRINTED
    shifted = to_zero_based(ZERO_POSITIONS_PRINTED)
    assert all((r - 1, c - 1) == s for (r, c), s in zip(positions, shifted))


def test_generator_roots_are_the_eight_simple_pairs():
    assert GENERATOR_ROOTS == (1, -1, 2, -2, 3, -3, 4, -4)


def test_system_assembly_is_deterministic():
    first = build_linear_system(5)
    second = build_linear_system(5)
    assert np.array_equal(first.matrix, second.matrix)


# ---------------------------------------------------------------------------
# assembled rows encode the intended matrix equation


def test_random_assignment_residual_matches_direct_arithmetic():
    from chevf4.rigidity import _span_matrices_ordered

    p = 3
    system = build_linear_system(p)
    span_mats = _span_matrices_ordered()
    rng = np.random.default_rng(11)
    for _ in range(5):
        z = rng.integers(0, p, size=(roots.DIM, roots.DIM)).astype(np.int64)
        coefficient_blocks = rng.integers(0, p, size=(8, roots.DIM)).astype(np.int64)
        assignment = np.concatenate([z.reshape(-1)] + [c for c in coefficient_blocks])
        assembled = (system.matrix.astype(np.int64) @ assignment) % p
        for g, a in enumerate(GENERATOR_ROOTS):
            xg = x_int(a, 1)
            combo = sum(int(c) * s for c, s in zip(coefficient_blocks[g], span_mats))
            direct = (z @ xg - xg @ z - xg @ combo) % p
            rows = assembled[g * N_Z : (g + 1) * N_Z].reshape(roots.DIM, roots.DIM)
            assert np.array_equal(rows, direct)
        # constraint rows read off the listed entries of Z
        tail = assembled[8 * N_Z :]
        for k, (r, c) in enumerate(to_zero_based(ZERO_POSITIONS_PRINTED)):
            assert tail[k] == z[r, c] % p


def test_identity_with_zero_coefficients_solves_unconstrained_system():
    system = build_linear_system(3, include_constraints=False)
    assignment = np.concatenate(
        [np.eye(roots.DIM, dtype=np.int64).reshape(-1), np.zeros(8 * roots.DIM, dtype=np.int64)]
    )
    assert not np.any((system.matrix.astype(np.int64) @ assignment) % 3)


# ---------------------------------------------------------------------------
# kernels (honest measured values, pinned)


def test_kernel_direct_equals_fast_at_p3():
    direct = kernel_dim(build_linear_system(3))
    fast = kernel_dim_fast(3)
    assert direct == fast == 1


def test_kernel_report_p3_names_the_surviving_direction():
    report = kernel_report(3)
    assert report["p"] == 3
    assert report["unknowns"] == N_UNKNOWNS
    assert report["equations"] == 8 * N_Z + 53
    assert report["dimension"] == 1
    assert report["expected"] == 0
    assert report["matches_expected"] is False
    assert report["survivor"] == "X[+19]"


@pytest.mark.parametrize("p", [5, 7])
def test_kernel_trivial_away_from_p3(p):
    report = kernel_report(p)
    assert report["dimension"] == 0
    assert report["matches_expected"] is True
    assert report["survivor"] is None


def test_survivor_certificate_entry():
    # the only listed position where the surviving direction is nonzero carries
    # the coroot coefficient 3 (row h_3, column of the negated root)
    from chevf4.algebra import get_algebra

    x19 = get_algebra().x_matrix(19)
    listed = to_zero_based(ZERO_POSITIONS_PRINTED)
    values = [int(x19[r, c]) for r, c in listed]
    nonzero = [(pos, v) for pos, v in zip(listed, values) if v]
    assert nonzero == [((roots.h_pos(3), roots.v_pos(-19)), 3)]
    assert roots.coroot_coords(19) == (2, 4, 3, 1)
    # the mirrored entry of the opposite root vector is a unit, which is why
    # only the positive direction survives the constraints mod 3
    x_neg = get_algebra().x_matrix(-19)
    assert int(x_neg[roots.v_pos(-19), roots.h_pos(3)]) in (1, -1)


def test_unconstrained_kernel_is_53_dimensional():
    basis = constrained_kernel_basis(3, include_constraints=False)
    assert basis.shape[1] == 53


def test_constrained_kernel_vector_is_x19_mod_3():
    from chevf4.algebra import get_algebra

    basis = constrained_kernel_basis(3, include_constraints=True)
    assert basis.shape[1] == 1
    z_block = basis[:N_Z, 0].reshape(roots.DIM, roots.DIM) % 3
    x19 = get_algebra().x_matrix(19) % 3
    # the kernel vector is a nonzero scalar multiple of X_19 mod 3
    for scale in (1, 2):
        if np.array_equal(z_block, (scale * x19) % 3):
            break
    else:
        raise AssertionError("kernel Z-block is not a multiple of X_19")


# ---------------------------------------------------------------------------
# centralizer


@pytest.mark.parametrize("p", [3, 5])
def test_centralizer_is_scalars_only(p):
    result = centralizer_check(p)
    assert result["dimension"] == 1
    assert result["scalars_only"] is True


# ---------------------------------------------------------------------------
# prime validation


@pytest.mark.parametrize("bad", [2, 1, 0, -3, 4, 9, 15, 115, 121])
def test_invalid_primes_rejected(bad):
    with pytest.raises(ValueError):
        kernel_report(bad)


def test_small_odd_primes_accepted():
    # validation only; no heavy computation beyond the call for p = 3 above
    from chevf4.rigidity import _validate_prime

    for p in (3, 5, 7, 11, 13, 113):
        _validate_prime(p)
    with pytest.raises(ValueError):
        _validate_prime(127)
