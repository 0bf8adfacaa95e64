"""Chevalley group elements of type F4 over a local ring, as exact matrices.

The generators are

    x_alpha(t) = exp(t X_alpha)              (any t in R)
    w_alpha(t) = x_alpha(t) x_{-alpha}(-1/t) x_alpha(t)   (t a unit)
    h_alpha(t) = w_alpha(t) w_alpha(1)^{-1}  (t a unit; diagonal)

acting on the 52-dimensional module in the basis fixed by :mod:`chevf4.roots`.
Because X_alpha^3 = 0 and X_alpha^2 is even, the exponential truncates to
E + t X + t^2 (X^2/2) with (X^2/2) integral: every generator is an exact
integer formula specialized into the ring, and all products/inverses here are
exact ring arithmetic (no floating point).

A :class:`GroupMatrix` pairs the ring with the raw matrix in the ring's
layout; a generator word is a sequence of ("x"|"w"|"h", root, element)
tokens, kept when provenance matters and multiplied out on demand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache

import numpy as np

from . import roots
from .algebra import get_algebra
from .rings import LocalRing, NonUnit, RingElem

Token = tuple[str, int, RingElem]


@dataclass(frozen=True)
class GroupMatrix:
    """A 52x52 matrix over a local ring (immutable by convention)."""

    ring: LocalRing
    entries: np.ndarray

    @property
    def descriptor(self) -> str:
        return self.ring.descriptor

    def entry(self, i: int, j: int) -> RingElem:
        return self.ring.mat_entry(self.entries, i, j)

    def __matmul__(self, other: "GroupMatrix") -> "GroupMatrix":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        return self.ring == other.ring and self.ring.mat_eq(self.entries, other.entries)


def _same_ring(a: GroupMatrix, b: GroupMatrix) -> LocalRing:
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.descriptor} vs {b.descriptor}")
    return a.ring


# -- integer ingredients, computed once ----------------------------------------


@cache
def _exp_parts(alpha: int) -> tuple[np.ndarray, np.ndarray]:
    """(X_alpha, X_alpha^2 / 2) as integer matrices; the division is exact."""
    x = get_algebra().x_matrix(alpha)
    x2 = x @ x
    if np.any(x2 @ x) or np.any(x2 % 2):
        raise RuntimeError(f"root matrix {alpha} is not 3-step nilpotent with even square")
    return x, x2 // 2


def x_int(alpha: int, t: int) -> np.ndarray:
    """x_alpha(t) for an integer t, as an exact integer matrix."""
    x, x2half = _exp_parts(alpha)
    return np.eye(roots.DIM, dtype=np.int64) + t * x + (t * t) * x2half


@cache
def _w_int(alpha: int, t: int) -> np.ndarray:
    """w_alpha(t) for t = +-1 as an integer matrix."""
    assert t in (1, -1)
    x, xh = _exp_parts(alpha)
    y, yh = _exp_parts(-alpha)
    eye = np.eye(roots.DIM, dtype=np.int64)
    a = eye + t * x + xh
    b = eye - t * y + yh
    return a @ b @ a


@cache
def _w_int_inverse(alpha: int) -> np.ndarray:
    """w_alpha(1)^{-1} = w_alpha(-1), verified exactly over the integers."""
    w, winv = _w_int(alpha, 1), _w_int(alpha, -1)
    if not np.array_equal(w @ winv, np.eye(roots.DIM, dtype=np.int64)):
        raise RuntimeError(f"w_{alpha}(1) and w_{alpha}(-1) are not inverse")
    return winv


# -- generators ------------------------------------------------------------------


def identity(ring: LocalRing) -> GroupMatrix:
    return GroupMatrix(ring, ring.mat_eye(roots.DIM))


def exp_root(alpha: int, t: RingElem) -> GroupMatrix:
    """x_alpha(t) = E + t X_alpha + t^2 (X_alpha^2 / 2), exact over t's ring."""
    ring = t.ring
    x, xh = _exp_parts(alpha)
    m = ring.mat_add(ring.mat_eye(roots.DIM), ring.mat_scale(t, ring.mat_from_int(x)))
    m = ring.mat_add(m, ring.mat_scale(t * t, ring.mat_from_int(xh)))
    return GroupMatrix(ring, m)


def w_elem(alpha: int, t: RingElem) -> GroupMatrix:
    """w_alpha(t) = x_alpha(t) x_{-alpha}(-t^{-1}) x_alpha(t); t must be a unit."""
    if not t.is_unit():
        raise NonUnit(f"w element requires a unit parameter, got {t}")
    outer = exp_root(alpha, t)
    inner = exp_root(-alpha, -t.inverse())
    return outer @ inner @ outer


def h_elem(alpha: int, t: RingElem) -> GroupMatrix:
    """h_alpha(t) = w_alpha(t) w_alpha(1)^{-1}.

    The product is diagonal: t^{<beta, alpha-vee>} at each root position v_beta
    and 1 on the four Cartan positions, which is how it is built here (the
    product route is kept as a test oracle).
    """
    if not t.is_unit():
        raise NonUnit(f"h element requires a unit parameter, got {t}")
    ring = t.ring
    tinv = t.inverse()
    powers = {0: ring.one, 1: t, 2: t * t, -1: tinv, -2: tinv * tinv}
    m = ring.mat_eye(roots.DIM)
    for b in roots.ALL_ROOTS:
        pos = roots.v_pos(b)
        ring.mat_set_entry(m, pos, pos, powers[roots.pairing(b, alpha)])
    return GroupMatrix(ring, m)


def h_elem_by_product(alpha: int, t: RingElem) -> GroupMatrix:
    """h_alpha(t) computed literally as w_alpha(t) w_alpha(1)^{-1}."""
    if not t.is_unit():
        raise NonUnit(f"h element requires a unit parameter, got {t}")
    ring = t.ring
    winv = GroupMatrix(ring, ring.mat_from_int(_w_int_inverse(alpha)))
    return w_elem(alpha, t) @ winv


# -- matrix operations -------------------------------------------------------------


def mat_mul(a: GroupMatrix, b: GroupMatrix) -> GroupMatrix:
    ring = _same_ring(a, b)
    return GroupMatrix(ring, ring.mat_mul(a.entries, b.entries))


def mat_inv(a: GroupMatrix) -> GroupMatrix:
    """Exact inverse by unit-pivot elimination (NotInvertible if singular)."""
    return GroupMatrix(a.ring, a.ring.mat_inv(a.entries))


def reduce_matrix(a: GroupMatrix) -> GroupMatrix:
    """Entrywise image over the residue field (a group homomorphism)."""
    return GroupMatrix(a.ring.residue_field(), a.ring.mat_reduce_mod_radical(a.entries))


def weyl_conjugate(alpha: int, beta: int) -> tuple[int, int]:
    """The root and sign with w_alpha(1) X_beta w_alpha(1)^{-1} = sign * X_image.

    The image root is the reflection of beta in alpha; the sign is whatever
    the built structure constants produce (recorded, not normalized).
    """
    m = _w_int(alpha, 1) @ get_algebra().x_matrix(beta) @ _w_int_inverse(alpha)
    target = roots.reflect(beta, alpha)
    xt = get_algebra().x_matrix(target)
    if np.array_equal(m, xt):
        return target, 1
    if np.array_equal(m, -xt):
        return target, -1
    raise RuntimeError(f"conjugate of X_{beta} by w_{alpha}(1) is not a signed root vector")


# -- generator words ---------------------------------------------------------------


def evaluate_word(ring: LocalRing, word: list[Token] | tuple[Token, ...]) -> GroupMatrix:
    """Multiply out a generator word left to right."""
    builders = {"x": exp_root, "w": w_elem, "h": h_elem}
    m = identity(ring)
    for kind, alpha, t in word:
        if t.ring != ring:
            raise ValueError(f"word token over {t.ring.descriptor}, expected {ring.descriptor}")
        m = m @ builders[kind](alpha, t)
    return m


def random_word(ring: LocalRing, rng: random.Random, length: int) -> list[Token]:
    """A random generator word (x tokens any element, w/h tokens units)."""
    word: list[Token] = []
    for _ in range(length):
        kind = rng.choice("xxxwh")  # bias towards root elements
        alpha = rng.choice(roots.ALL_ROOTS)
        if kind == "x":
            t = ring.random_element(rng)
        else:
            t = ring.random_unit(rng)
        word.append((kind, alpha, t))
    return word


# -- serialization ------------------------------------------------------------------


def matrix_to_document(a: GroupMatrix) -> dict:
    """Plain-data form: {"ring": descriptor, "rows": 52 lists of element strings}."""
    rows = [
        [str(a.entry(i, j)) for j in range(roots.DIM)]
        for i in range(roots.DIM)
    ]
    return {"ring": a.descriptor, "rows": rows}


def matrix_from_document(doc: dict, ring: LocalRing | None = None) -> GroupMatrix:
    """Inverse of :func:`matrix_to_document` (ValueError on malformed input)."""
    from .rings import parse_ring_descriptor

    if not isinstance(doc, dict) or "ring" not in doc or "rows" not in doc:
        raise ValueError("matrix document must have 'ring' and 'rows' fields")
    doc_ring = parse_ring_descriptor(doc["ring"])
    if ring is not None and ring != doc_ring:
        raise ValueError(f"document ring {doc_ring.descriptor} does not match {ring.descriptor}")
    ring = doc_ring
    rows = doc["rows"]
    if len(rows) != roots.DIM or any(len(r) != roots.DIM for r in rows):
        raise ValueError(f"matrix document must be {roots.DIM}x{roots.DIM}")
    m = ring.mat_zero(roots.DIM, roots.DIM)
    for i, row in enumerate(rows):
        for j, text in enumerate(row):
            ring.mat_set_entry(m, i, j, ring.from_text(str(text)))
    return GroupMatrix(ring, m)


if __name__ == "__main__":  # tiny smoke test
    from .rings import parse_ring_descriptor

    R = parse_ring_descriptor("zmod:27")
    rng = random.Random(0)
    t, s = R.random_element(rng), R.random_element(rng)
    assert exp_root(1, t) @ exp_root(1, s) == exp_root(1, t + s)
    u = R.random_unit(rng)
    assert h_elem(3, u) == h_elem_by_product(3, u)
    assert mat_inv(w_elem(2, u)) @ w_elem(2, u) == identity(R)
    doc = matrix_to_document(w_elem(4, u))
    assert matrix_from_document(doc) == w_elem(4, u)
    print("group: ok (additivity, torus dual route, inverse, document round-trip)")
