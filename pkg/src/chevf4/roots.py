"""The F4 root system and the indexing of the 52-element Chevalley basis.

Roots live in R^4 and are stored with DOUBLED coordinates so that every
entry is an integer (short roots of F4 have half-integer coordinates).
The 24 positive roots are numbered 1..24 in increasing height, the same
numbering used by the printed reference tables; negative roots carry the
negated index.  Simple roots are numbers 1..4:

    1: e2 - e3          2: e3 - e4
    3: e4               4: (e1 - e2 - e3 - e4)/2

The adjoint module has dimension 52 and its basis is ordered

    v1, v-1, v2, v-2, ..., v24, v-24, h1, h2, h3, h4

where v<i> is the root vector of root i and h<j> is the j-th simple
coroot.  All position arithmetic in this package is 0-based; the helpers
at the bottom translate to the 1-based labels used in printed tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

import numpy as np

DIM = 52
NUM_POS = 24

# positive roots: doubled coordinates, height order (index 1..24)
_POS_COORDS: dict[int, tuple[int, int, int, int]] = {
    1: (0, 2, -2, 0),
    2: (0, 0, 2, -2),
    3: (0, 0, 0, 2),
    4: (1, -1, -1, -1),
    5: (0, 2, 0, -2),
    6: (0, 0, 2, 0),
    7: (1, -1, -1, 1),
    8: (0, 2, 0, 0),
    9: (1, -1, 1, -1),
    10: (0, 0, 2, 2),
    11: (1, 1, -1, -1),
    12: (0, 2, 0, 2),
    13: (1, -1, 1, 1),
    14: (0, 2, 2, 0),
    15: (1, 1, -1, 1),
    16: (2, -2, 0, 0),
    17: (1, 1, 1, -1),
    18: (2, 0, -2, 0),
    19: (1, 1, 1, 1),
    20: (2, 0, 0, -2),
    21: (2, 0, 0, 0),
    22: (2, 0, 0, 2),
    23: (2, 0, 2, 0),
    24: (2, 2, 0, 0),
}

# the same roots as integer combinations of the simple roots
_POS_DECOMP: dict[int, tuple[int, int, int, int]] = {
    1: (1, 0, 0, 0),
    2: (0, 1, 0, 0),
    3: (0, 0, 1, 0),
    4: (0, 0, 0, 1),
    5: (1, 1, 0, 0),
    6: (0, 1, 1, 0),
    7: (0, 0, 1, 1),
    8: (1, 1, 1, 0),
    9: (0, 1, 1, 1),
    10: (0, 1, 2, 0),
    11: (1, 1, 1, 1),
    12: (1, 1, 2, 0),
    13: (0, 1, 2, 1),
    14: (1, 2, 2, 0),
    15: (1, 1, 2, 1),
    16: (0, 1, 2, 2),
    17: (1, 2, 2, 1),
    18: (1, 1, 2, 2),
    19: (1, 2, 3, 1),
    20: (1, 2, 2, 2),
    21: (1, 2, 3, 2),
    22: (1, 2, 4, 2),
    23: (1, 3, 4, 2),
    24: (2, 3, 4, 2),
}

ALL_ROOTS: tuple[int, ...] = tuple(range(1, NUM_POS + 1)) + tuple(range(-1, -NUM_POS - 1, -1))
POSITIVE_ROOTS: tuple[int, ...] = tuple(range(1, NUM_POS + 1))
SIMPLE_ROOTS: tuple[int, ...] = (1, 2, 3, 4)

_COORD_TO_INDEX: dict[tuple[int, int, int, int], int] = {}
for _i, _c in _POS_COORDS.items():
    _COORD_TO_INDEX[_c] = _i
    _COORD_TO_INDEX[tuple(-x for x in _c)] = -_i


def root_coords(i: int) -> tuple[int, int, int, int]:
    """Doubled coordinates of root i (negative index = negated root)."""
    if i > 0:
        return _POS_COORDS[i]
    return tuple(-x for x in _POS_COORDS[-i])


def root_decomp(i: int) -> tuple[int, int, int, int]:
    """Coefficients of root i over the simple roots."""
    if i > 0:
        return _POS_DECOMP[i]
    return tuple(-x for x in _POS_DECOMP[-i])


def root_from_coords(coords: tuple[int, int, int, int] | np.ndarray) -> int | None:
    """Root index for doubled coordinates, or None if not a root."""
    return _COORD_TO_INDEX.get(tuple(int(x) for x in coords))


def is_long(i: int) -> bool:
    """Long roots have squared length 2 (doubled-coordinate norm 8)."""
    c = root_coords(i)
    return sum(x * x for x in c) == 8


LONG_POSITIVE: tuple[int, ...] = tuple(i for i in POSITIVE_ROOTS if is_long(i))
SHORT_POSITIVE: tuple[int, ...] = tuple(i for i in POSITIVE_ROOTS if not is_long(i))


def height(i: int) -> int:
    return sum(root_decomp(i))


def root_sum(i: int, j: int) -> int | None:
    """Index of root i + root j when that is a root, else None."""
    ci, cj = root_coords(i), root_coords(j)
    return root_from_coords(tuple(a + b for a, b in zip(ci, cj)))


@cache
def pairing(i: int, j: int) -> int:
    """Cartan pairing <alpha_i, alpha_j-check> = 2(ai, aj)/(aj, aj)."""
    ci, cj = root_coords(i), root_coords(j)
    num = 2 * sum(a * b for a, b in zip(ci, cj))
    den = sum(b * b for b in cj)
    val = Fraction(num, den)
    assert val.denominator == 1
    return int(val)


def reflect(i: int, j: int) -> int:
    """Image of root i under the reflection in root j."""
    ci, cj = root_coords(i), root_coords(j)
    t = pairing(i, j)
    out = root_from_coords(tuple(a - t * b for a, b in zip(ci, cj)))
    assert out is not None
    return out


@cache
def coroot_coords(i: int) -> tuple[int, int, int, int]:
    """Coefficients of the coroot of root i over the simple coroots.

    With n = root_decomp(i), the coefficient at h_j is
    n_j * (alpha_j, alpha_j) / (alpha_i, alpha_i); integrality is asserted.
    """
    n = root_decomp(i)
    ci = root_coords(i)
    len_i = sum(x * x for x in ci)
    out = []
    for j, nj in zip(SIMPLE_ROOTS, n):
        cj = root_coords(j)
        val = Fraction(nj * sum(x * x for x in cj), len_i)
        assert val.denominator == 1
        out.append(int(val))
    return tuple(out)


def root_string(beta: int, alpha: int) -> tuple[int, int]:
    """(p, q) for the alpha-string through beta: beta - p*alpha .. beta + q*alpha."""
    p = 0
    cur = beta
    while True:
        cb = root_coords(cur)
        ca = root_coords(alpha)
        prev = root_from_coords(tuple(a - b for a, b in zip(cb, ca)))
        if prev is None or prev == 0:
            break
        cur, p = prev, p + 1
    q = 0
    cur = beta
    while True:
        nxt = root_sum(cur, alpha)
        if nxt is None:
            break
        cur, q = nxt, q + 1
    return p, q


# -- basis positions (0-based) ------------------------------------------------


def v_pos(i: int) -> int:
    """0-based basis position of the root vector of root i."""
    if i > 0:
        return 2 * i - 2
    return -2 * i - 1


def h_pos(j: int) -> int:
    """0-based basis position of simple coroot h_j, j in 1..4."""
    return 47 + j


def pos_root(pos: int) -> int | None:
    """Root index at 0-based position, or None for the Cartan block."""
    if pos >= 48:
        return None
    q, r = divmod(pos, 2)
    return q + 1 if r == 0 else -(q + 1)


BASIS_LABELS: tuple[str, ...] = tuple(
    f"v{pos_root(p)}" if p < 48 else f"h{p - 47}" for p in range(DIM)
)


def parse_basis_label(label: str) -> int:
    """0-based position for a label like ``v-7`` or ``h2``."""
    label = label.strip()
    if label.startswith("v"):
        i = int(label[1:])
        if i == 0 or abs(i) > NUM_POS:
            raise ValueError(f"no such root vector: {label!r}")
        return v_pos(i)
    if label.startswith("h"):
        j = int(label[1:])
        if not 1 <= j <= 4:
            raise ValueError(f"no such coroot: {label!r}")
        return h_pos(j)
    raise ValueError(f"bad basis label: {label!r}")


def cartan_matrix() -> np.ndarray:
    """The 4x4 matrix A with A[i,j] = <alpha_i+1, alpha_j+1-check>."""
    return np.array([[pairing(i, j) for j in SIMPLE_ROOTS] for i in SIMPLE_ROOTS], dtype=np.int64)


def cartan_matrix_inverse() -> np.ndarray:
    """Exact integer inverse of the Cartan matrix (its determinant is one)."""
    a = cartan_matrix()
    inv = np.rint(np.linalg.inv(a.astype(np.float64))).astype(np.int64)
    if not np.array_equal(a @ inv, np.eye(4, dtype=np.int64)):
        raise AssertionError("Cartan matrix inverse is not integral")
    return inv
