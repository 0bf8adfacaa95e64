"""Root system data: lengths, pairings, reflections, and basis indexing."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevf4 import roots

ROOT_INDICES = st.sampled_from(roots.ALL_ROOTS)


def inner(a: int, b: int) -> Fraction:
    return sum(Fraction(x) * Fraction(y) for x, y in zip(roots.root_coords(a), roots.root_coords(b)))


# ---------------------------------------------------------------------------
# inventory


def test_inventory_counts():
    assert len(roots.ALL_ROOTS) == 48
    assert len(roots.POSITIVE_ROOTS) == 24
    assert len(roots.LONG_POSITIVE) == 12
    assert len(roots.SHORT_POSITIVE) == 12
    assert set(roots.LONG_POSITIVE) | set(roots.SHORT_POSITIVE) == set(range(1, 25))
    assert roots.SIMPLE_ROOTS == (1, 2, 3, 4)
    assert roots.DIM == 52
    assert roots.NUM_POS == 24


def test_lengths_partition():
    long_sq = {inner(a, a) for a in roots.ALL_ROOTS if roots.is_long(a)}
    short_sq = {inner(a, a) for a in roots.ALL_ROOTS if not roots.is_long(a)}
    assert len(long_sq) == 1 and len(short_sq) == 1
    assert long_sq.pop() == 2 * short_sq.pop()


def test_negation_symmetry():
    for alpha in roots.ALL_ROOTS:
        assert roots.root_coords(-alpha) == tuple(-c for c in roots.root_coords(alpha))
        assert roots.is_long(-alpha) == roots.is_long(alpha)
        assert roots.height(-alpha) == -roots.height(alpha)


def test_coords_roundtrip_and_uniqueness():
    seen = set()
    for alpha in roots.ALL_ROOTS:
        coords = roots.root_coords(alpha)
        assert coords not in seen
        seen.add(coords)
        assert roots.root_from_coords(coords) == alpha


def test_decomposition_linearity():
    simple_coords = [roots.root_coords(i) for i in roots.SIMPLE_ROOTS]
    for alpha in roots.ALL_ROOTS:
        decomp = roots.root_decomp(alpha)
        rebuilt = tuple(
            sum(n * s[k] for n, s in zip(decomp, simple_coords)) for k in range(4)
        )
        assert rebuilt == roots.root_coords(alpha)
        if alpha > 0:
            assert all(n >= 0 for n in decomp)
        else:
            assert all(n <= 0 for n in decomp)


# ---------------------------------------------------------------------------
# pairings against an independent symbolic oracle


def test_pairing_sympy_oracle():
    import sympy

    for beta in roots.ALL_ROOTS:
        for alpha in roots.ALL_ROOTS:
            b = sympy.Matrix([sympy.Rational(c) for c in roots.root_coords(beta)])
            a = sympy.Matrix([sympy.Rational(c) for c in roots.root_coords(alpha)])
            expected = 2 * b.dot(a) / a.dot(a)
            assert expected == sympy.Integer(roots.pairing(beta, alpha))


def test_cartan_matrix_golden():
    import numpy as np

    assert np.array_equal(
        np.asarray(roots.cartan_matrix()),
        np.array([(2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)]),
    )


def test_cartan_matrix_inverse():
    import sympy

    cartan = sympy.Matrix(roots.cartan_matrix())
    assert cartan.det() == 1
    inverse = sympy.Matrix(roots.cartan_matrix_inverse())
    assert cartan * inverse == sympy.eye(4)


def test_coroot_coordinates_expand_pairing():
    for alpha in roots.ALL_ROOTS:
        coroot = roots.coroot_coords(alpha)
        for beta in roots.ALL_ROOTS:
            direct = roots.pairing(beta, alpha)
            expanded = sum(c * roots.pairing(beta, j) for c, j in zip(coroot, roots.SIMPLE_ROOTS))
            assert direct == expanded


# ---------------------------------------------------------------------------
# reflections


def test_reflect_is_involution_everywhere():
    for alpha in roots.ALL_ROOTS:
        for beta in roots.ALL_ROOTS:
            image = roots.reflect(beta, alpha)
            assert image in roots.ALL_ROOTS
            assert roots.reflect(image, alpha) == beta


def test_reflect_matches_coordinate_formula():
    for alpha in roots.ALL_ROOTS:
        for beta in roots.ALL_ROOTS:
            n = roots.pairing(beta, alpha)
            expected = tuple(
                Fraction(b) - n * Fraction(a)
                for b, a in zip(roots.root_coords(beta), roots.root_coords(alpha))
            )
            actual = tuple(Fraction(c) for c in roots.root_coords(roots.reflect(beta, alpha)))
            assert actual == expected


def test_reflect_fixes_orthogonal_and_negates_self():
    for alpha in roots.ALL_ROOTS:
        assert roots.reflect(alpha, alpha) == -alpha
        for beta in roots.ALL_ROOTS:
            if roots.pairing(beta, alpha) == 0:
                assert roots.reflect(beta, alpha) == beta


# ---------------------------------------------------------------------------
# sums and strings


def test_root_sum_matches_coordinates():
    coord_index = {roots.root_coords(a): a for a in roots.ALL_ROOTS}
    for alpha in roots.ALL_ROOTS:
        for beta in roots.ALL_ROOTS:
            total = tuple(
                Fraction(x) + Fraction(y)
                for x, y in zip(roots.root_coords(alpha), roots.root_coords(beta))
            )
            normalized = tuple(int(c) if c.denominator == 1 else c for c in total)
            expected = coord_index.get(normalized)
            assert roots.root_sum(alpha, beta) == expected


def test_root_string_bounds():
    for alpha in roots.ALL_ROOTS:
        for beta in roots.ALL_ROOTS:
            if beta in (alpha, -alpha):
                continue
            down, up = roots.root_string(beta, alpha)
            assert 0 <= down <= 2 and 0 <= up <= 2
            assert down - up == roots.pairing(beta, alpha)


# ---------------------------------------------------------------------------
# basis positions


def test_basis_positions_partition():
    positions = [roots.v_pos(a) for a in roots.ALL_ROOTS] + [roots.h_pos(j) for j in roots.SIMPLE_ROOTS]
    assert sorted(positions) == list(range(52))


def test_pos_root_inverts_v_pos():
    for alpha in roots.ALL_ROOTS:
        assert roots.pos_root(roots.v_pos(alpha)) == alpha


def test_basis_labels_roundtrip():
    assert len(roots.BASIS_LABELS) == 52
    assert len(set(roots.BASIS_LABELS)) == 52
    for position, label in enumerate(roots.BASIS_LABELS):
        assert roots.parse_basis_label(label) == position


@given(alpha=ROOT_INDICES, beta=ROOT_INDICES)
@settings(max_examples=300, deadline=None)
def test_pairing_reflection_invariance(alpha, beta):
    # reflections are isometries: pairings are preserved under s_gamma applied to both
    for gamma in roots.SIMPLE_ROOTS:
        lhs = roots.pairing(roots.reflect(beta, gamma), roots.reflect(alpha, gamma))
        assert lhs == roots.pairing(beta, alpha)


def test_height_of_simats():
    for i in roots.SIMPLE_ROOTS:
        assert roots.height(i) == 1
    heights = sorted(roots.height(a) for a in roots.POSITIVE_ROOTS)
    assert heights[0] == 1 and heights[-1] == sum(roots.root_decomp(roots.POSITIVE_ROOTS[-1]))
