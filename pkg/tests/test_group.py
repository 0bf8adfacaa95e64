"""Group layer: generator words, Steinberg relations, documents, reduction."""

from __future__ import annotations

import random

import numpy as np
import pytest

from chevf4 import roots
from chevf4.group import (
    GroupMatrix,
    evaluate_word,
    matrix_from_document,
    matrix_to_document,
    random_word,
    weyl_conjugate,
    x_int,
)
from chevf4.rings import parse_ring_descriptor

RINGS = ["zmod:27", "field:5", "dual:3:2"]


def ring_of(descriptor: str):
    return parse_ring_descriptor(descriptor)


# ---------------------------------------------------------------------------
# word evaluation


@pytest.mark.parametrize("descriptor", RINGS)
def test_empty_word_is_identity(descriptor):
    ring = ring_of(descriptor)
    m = evaluate_word(ring, [])
    assert ring.mat_eq(m.entries, ring.mat_eye(roots.DIM))


@pytest.mark.parametrize("descriptor", RINGS)
def test_word_evaluation_is_left_to_right_product(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(2)
    word = random_word(ring, rng, 6)
    full = evaluate_word(ring, word)
    stepwise = ring.mat_eye(roots.DIM)
    for token in word:
        stepwise = ring.mat_mul(stepwise, evaluate_word(ring, [token]).entries)
    assert ring.mat_eq(full.entries, stepwise)


def test_x_element_reduces_to_integer_model():
    ring = ring_of("zmod:27")
    for a in roots.ALL_ROOTS:
        for t in (0, 1, 5, 26):
            m = evaluate_word(ring, [("x", a, ring.elem(t))])
            expected = ring.mat_from_int(x_int(a, t) % 27)
            assert ring.mat_eq(m.entries, expected)


# ---------------------------------------------------------------------------
# Steinberg relations over rings


@pytest.mark.parametrize("descriptor", RINGS)
def test_one_parameter_additivity(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(3)
    for _ in range(25):
        a = rng.choice(roots.ALL_ROOTS)
        s, t = ring.random_element(rng), ring.random_element(rng)
        lhs = evaluate_word(ring, [("x", a, s), ("x", a, t)])
        rhs = evaluate_word(ring, [("x", a, s + t)])
        assert ring.mat_eq(lhs.entries, rhs.entries)


@pytest.mark.parametrize("descriptor", RINGS)
def test_torus_multiplicativity(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(4)
    for _ in range(25):
        i = rng.choice(roots.SIMPLE_ROOTS)
        s, t = ring.random_unit(rng), ring.random_unit(rng)
        lhs = evaluate_word(ring, [("h", i, s), ("h", i, t)])
        rhs = evaluate_word(ring, [("h", i, s * t)])
        assert ring.mat_eq(lhs.entries, rhs.entries)


@pytest.mark.parametrize("descriptor", RINGS)
def test_torus_conjugation_scales_root_parameter(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(5)
    for _ in range(25):
        i = rng.choice(roots.SIMPLE_ROOTS)
        b = rng.choice(roots.ALL_ROOTS)
        s = ring.random_unit(rng)
        t = ring.random_element(rng)
        h = evaluate_word(ring, [("h", i, s)])
        x = evaluate_word(ring, [("x", b, t)])
        h_inv = GroupMatrix(ring, ring.mat_inv(h.entries))
        conjugated = ring.mat_mul(ring.mat_mul(h.entries, x.entries), h_inv.entries)
        power = roots.pairing(b, i)
        scale = ring.one
        if power >= 0:
            for _ in range(power):
                scale = scale * s
        else:
            s_inv = s.inverse()
            for _ in range(-power):
                scale = scale * s_inv
        expected = evaluate_word(ring, [("x", b, scale * t)])
        assert ring.mat_eq(conjugated, expected.entries)


@pytest.mark.parametrize("descriptor", RINGS)
def test_weyl_square_is_torus_minus_one(descriptor):
    ring = ring_of(descriptor)
    minus_one = ring.zero - ring.one
    for i in roots.SIMPLE_ROOTS:
        w = evaluate_word(ring, [("w", i, ring.one)])
        w2 = ring.mat_mul(w.entries, w.entries)
        h = evaluate_word(ring, [("h", i, minus_one)])
        assert ring.mat_eq(w2, h.entries)


def test_weyl_conjugation_moves_root_subgroups():
    ring = ring_of("zmod:27")
    rng = random.Random(6)
    for i in roots.SIMPLE_ROOTS:
        w = evaluate_word(ring, [("w", i, ring.one)])
        w_inv = GroupMatrix(ring, ring.mat_inv(w.entries))
        for b in roots.ALL_ROOTS:
            t = ring.random_element(rng)
            target, sign = weyl_conjugate(i, b)
            assert target == roots.reflect(b, i)
            x = evaluate_word(ring, [("x", b, t)])
            moved = ring.mat_mul(ring.mat_mul(w.entries, x.entries), w_inv.entries)
            signed = t if sign == 1 else ring.neg(t)
            expected = evaluate_word(ring, [("x", target, signed)])
            assert ring.mat_eq(moved, expected.entries)


# ---------------------------------------------------------------------------
# document round-trips


@pytest.mark.parametrize("descriptor", RINGS)
def test_matrix_document_roundtrip(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(7)
    m = evaluate_word(ring, random_word(ring, rng, 5))
    doc = matrix_to_document(m)
    assert doc["ring"] == descriptor
    assert len(doc["rows"]) == roots.DIM and all(len(r) == roots.DIM for r in doc["rows"])
    back = matrix_from_document(doc)
    assert back.ring.descriptor == descriptor
    assert ring.mat_eq(back.entries, m.entries)


def test_matrix_document_ring_override_must_match():
    ring = ring_of("zmod:27")
    other = ring_of("field:5")
    m = evaluate_word(ring, [("x", 1, ring.elem(2))])
    doc = matrix_to_document(m)
    with pytest.raises(ValueError):
        matrix_from_document(doc, ring=other)


def test_matrix_document_rejects_malformed():
    ring = ring_of("zmod:27")
    m = evaluate_word(ring, [])
    doc = matrix_to_document(m)
    broken = {"ring": doc["ring"], "rows": doc["rows"][:-1]}
    with pytest.raises((ValueError, KeyError)):
        matrix_from_document(broken)


# ---------------------------------------------------------------------------
# reduction homomorphism


@pytest.mark.parametrize("descriptor", ["zmod:27", "dual:5:3"])
def test_reduction_commutes_with_products(descriptor):
    ring = ring_of(descriptor)
    field = ring.residue_field()
    rng = random.Random(8)
    for _ in range(10):
        word_a = random_word(ring, rng, 4)
        word_b = random_word(ring, rng, 4)
        a = evaluate_word(ring, word_a).entries
        b = evaluate_word(ring, word_b).entries
        reduced_product = ring.mat_reduce_mod_radical(ring.mat_mul(a, b))
        product_of_reduced = field.mat_mul(
            ring.mat_reduce_mod_radical(a), ring.mat_reduce_mod_radical(b)
        )
        assert field.mat_eq(reduced_product, product_of_reduced)


# ---------------------------------------------------------------------------
# group axioms on random words


@pytest.mark.parametrize("descriptor", RINGS)
def test_inverses_from_reversed_words(descriptor):
    ring = ring_of(descriptor)
    rng = random.Random(9)
    for _ in range(10):
        word = random_word(ring, rng, 5)
        m = evaluate_word(ring, word).entries
        inv = ring.mat_inv(m)
        assert ring.mat_eq(ring.mat_mul(m, inv), ring.mat_eye(roots.DIM))
        assert ring.mat_eq(ring.mat_mul(inv, m), ring.mat_eye(roots.DIM))


def test_random_word_determinism():
    ring = ring_of("zmod:27")
    w1 = random_word(ring, random.Random(42), 8)
    w2 = random_word(ring, random.Random(42), 8)
    assert len(w1) == len(w2) == 8
    for (k1, i1, t1), (k2, i2, t2) in zip(w1, w2):
        assert k1 == k2 and i1 == i2 and t1 == t2


def test_x_int_matches_numpy_integer_matrices():
    for a in roots.ALL_ROOTS:
        m = x_int(a, 3)
        assert m.dtype == np.int64 and m.shape == (roots.DIM, roots.DIM)
        assert np.array_equal(x_int(a, 3) @ x_int(a, -3), np.eye(roots.DIM, dtype=np.int64))
