"""Ring and inner automorphisms acting on explicit group elements.

A ring automorphism of one of the supported local rings fixes the prime
subring elementwise, so on ``zmod`` and ``field`` rings only the identity
exists; on a dual-numbers ring it is the substitution ``eps -> c * eps``
for a unit c (which covers every coefficient-field-fixing automorphism,
since c may itself contain nilpotent terms).  Applied to a group element it
acts entrywise; on a generator word it rewrites every parameter, and the two
routes agree because the generator matrices have polynomial entries in the
parameters with integer coefficients.

An inner automorphism is conjugation by an invertible matrix.  A candidate
description of an automorphism by a pair (C, rho) is checked against its
claimed images on the eight generators x_a(1), a in +-a1..+-a4, which
generate the group over the rings supported here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .group import (
    GroupMatrix,
    Token,
    exp_root,
    identity,
    mat_inv,
    mat_mul,
)
from .rigidity import GENERATOR_ROOTS
from .rings import LocalRing, RingElem

GENERATOR_LABELS: tuple[str, ...] = tuple(f"x[{a:+d}]" for a in GENERATOR_ROOTS)


def standard_generators(ring: LocalRing) -> dict[str, GroupMatrix]:
    """The eight generators x_a(1), keyed by their labels."""
    return {
        label: exp_root(a, ring.one)
        for label, a in zip(GENERATOR_LABELS, GENERATOR_ROOTS)
    }


@dataclass(frozen=True)
class RingAutomorphism:
    """A ring automorphism, stored as its substitution data.

    ``epsilon_scale`` is None for the identity map; on dual-numbers rings it
    is the unit c of ``eps -> c * eps``.
    """

    ring: LocalRing
    epsilon_scale: RingElem | None = None

    def __post_init__(self) -> None:
        c = self.epsilon_scale
        if c is None:
            return
        if self.ring.kind != "dual":
            raise ValueError(
                f"{self.ring.descriptor} has no automorphism beyond the identity"
            )
        if c.ring != self.ring:
            raise ValueError(
                f"scale lives in {c.ring.descriptor}, expected {self.ring.descriptor}"
            )
        if not c.is_unit():
            raise ValueError("the substitution scale must be a unit")

    @property
    def is_identity(self) -> bool:
        return self.epsilon_scale is None or self._layer_matrix_is_identity()

    def _layer_matrix_is_identity(self) -> bool:
        return np.array_equal(self._layer_matrix(), np.eye(self.ring.k, dtype=np.int64))

    def _layer_matrix(self) -> np.ndarray:
        """k x k integer matrix of the substitution across nilpotent layers.

        Column j holds the coefficient vector of (c * eps)**j, so the map on
        an element's coefficient vector is left-multiplication by this matrix.
        """
        ring = self.ring
        k = ring.k
        mat = np.zeros((k, k), dtype=np.int64)
        power = ring.one
        c_eps = self.epsilon_scale * ring.elem([0, 1])
        for j in range(k):
            mat[:, j] = power.value
            power = power * c_eps
        return mat

    def __call__(self, a: RingElem) -> RingElem:
        if a.ring != self.ring:
            raise ValueError(
                f"element lives in {a.ring.descriptor}, expected {self.ring.descriptor}"
            )
        if self.epsilon_scale is None:
            return a
        coeffs = self._layer_matrix() @ np.array(a.value, dtype=np.int64)
        return self.ring.elem(int(c) for c in coeffs)

    def describe(self) -> str:
        if self.epsilon_scale is None:
            return "id"
        return f"eps -> ({self.epsilon_scale}) * eps"


def identity_auto(ring: LocalRing) -> RingAutomorphism:
    """The identity automorphism of any supported ring."""
    return RingAutomorphism(ring, None)


def epsilon_scaling(ring: LocalRing, c: RingElem) -> RingAutomorphism:
    """The substitution ``eps -> c * eps`` on a dual-numbers ring."""
    return RingAutomorphism(ring, c)


def parse_ring_auto(ring: LocalRing, text: str) -> RingAutomorphism:
    """Parse an automorphism description: ``id`` or ``eps:<element>``."""
    text = text.strip()
    if text == "id":
        return identity_auto(ring)
    if text.startswith("eps:"):
        return epsilon_scaling(ring, ring.from_text(text[len("eps:"):]))
    raise ValueError(f"bad automorphism description {text!r} (want 'id' or 'eps:<unit>')")


def apply_ring_auto(rho: RingAutomorphism, m: GroupMatrix) -> GroupMatrix:
    """Apply a ring automorphism entrywise to a group element."""
    if m.ring != rho.ring:
        raise ValueError(
            f"matrix over {m.ring.descriptor} does not match "
            f"automorphism of {rho.ring.descriptor}"
        )
    if rho.epsilon_scale is None:
        return m
    # Dual-ring matrices are stored as one layer per nilpotent power, so the
    # entrywise substitution is the layer matrix acting across layer index.
    layers = rho._layer_matrix()
    entries = np.tensordot(layers, m.entries, axes=([1], [0])) % rho.ring.p
    return GroupMatrix(m.ring, entries)


def map_word(rho: RingAutomorphism, word: list[Token] | tuple[Token, ...]) -> list[Token]:
    """Rewrite every parameter of a generator word through the automorphism."""
    return [(kind, alpha, rho(t)) for kind, alpha, t in word]


def inner_auto(g: GroupMatrix, m: GroupMatrix) -> GroupMatrix:
    """Conjugation by g: the element g * m * g^{-1}."""
    return mat_mul(mat_mul(g, m), mat_inv(g))


def check_standard_on_generators(
    images: Mapping[str, GroupMatrix],
    candidate_c: GroupMatrix,
    candidate_rho: RingAutomorphism,
) -> bool:
    """Whether images[x] = C * rho(x) * C^{-1} holds on all eight generators."""
    ring = candidate_c.ring
    if candidate_rho.ring != ring:
        raise ValueError(
            f"conjugator over {ring.descriptor} does not match "
            f"automorphism of {candidate_rho.ring.descriptor}"
        )
    missing = [label for label in GENERATOR_LABELS if label not in images]
    if missing:
        raise ValueError(f"images missing for generators: {', '.join(missing)}")
    c_inv = mat_inv(candidate_c)
    for label, a in zip(GENERATOR_LABELS, GENERATOR_ROOTS):
        image = images[label]
        if image.ring != ring:
            raise ValueError(
                f"image of {label} lives over {image.ring.descriptor}, "
                f"expected {ring.descriptor}"
            )
        expected = mat_mul(mat_mul(candidate_c, apply_ring_auto(candidate_rho, exp_root(a, ring.one))), c_inv)
        if not ring.mat_eq(image.entries, expected.entries):
            return False
    return True


if __name__ == "__main__":
    import random

    from .group import evaluate_word, random_word
    from .rings import parse_ring_descriptor

    ring = parse_ring_descriptor("dual:5:2")
    rho = epsilon_scaling(ring, ring.elem([2]))
    rng = random.Random(7)
    word = random_word(ring, rng, 8)
    entrywise = apply_ring_auto(rho, evaluate_word(ring, word))
    wordwise = evaluate_word(ring, map_word(rho, word))
    print("entrywise == wordwise on a random word:", ring.mat_eq(entrywise.entries, wordwise.entries))

    gens = standard_generators(ring)
    w2 = evaluate_word(ring, [("w", 2, ring.one)])
    images = {label: inner_auto(w2, g) for label, g in gens.items()}
    print("i_{w2} with C = w2, rho = id:", check_standard_on_generators(images, w2, identity_auto(ring)))
    print("i_{w2} with C = E,  rho = id:", check_standard_on_generators(images, identity(ring), identity_auto(ring)))
    both = {label: apply_ring_auto(rho, inner_auto(w2, g)) for label, g in gens.items()}
    print(
        "rho-then-conjugate images with (C = w2, rho):",
        check_standard_on_generators(both, w2, rho),
    )
