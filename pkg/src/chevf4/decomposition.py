"""Coordinates on the coset lambda * G(R, J) and their exact recovery.

An element of the congruence subgroup scaled by a unit factors uniquely as

    lambda . h_1(s_1) h_2(s_2) h_3(s_3) h_4(s_4)
           . x_{a_1}(t_1) ... x_{a_24}(t_24)
           . x_{-a_1}(u_1) ... x_{-a_24}(u_24)

with every t_i, u_i in the radical J and every s_j in 1 + J.  ``compose``
multiplies the factors out in exactly this order; ``recover`` inverts the map
by radical-filtration refinement: estimates correct modulo J^k are improved to
J^{k+1} by reading the first-order residual Z = compose(estimate)^{-1} m - E,
whose Cartan columns isolate each dt/du, whose (V4, V4) entry isolates the
scalar, and whose diagonal at the four simple-root slots yields the torus
corrections through the (determinant-one) pairing matrix.  J nilpotent makes
this terminate with an exact answer, certified by re-composition.

``determining_positions`` lists the 53 matrix positions that pin down all 53
coordinates; uniqueness of the factorization is exercised through them in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

import numpy as np

from . import roots
from .group import GroupMatrix, exp_root, h_elem, identity, mat_mul
from .reference_tables import GAMMA_SEQUENCE
from .rings import LocalRing, RingElem


class NotInCoset(Exception):
    """The matrix is not lambda * (congruence element) for any unit lambda.

    Attributes:
        position: a (row, col) 0-based witness position, when one is known.
    """

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class ChevalleyCoordinates:
    """(lambda, s, t, u) with s units congruent to 1 and t, u in the radical."""

    lam: RingElem
    s: tuple[RingElem, RingElem, RingElem, RingElem]
    t: tuple[RingElem, ...]
    u: tuple[RingElem, ...]

    def validate(self) -> None:
        ring = self.lam.ring
        if len(self.s) != 4 or len(self.t) != 24 or len(self.u) != 24:
            raise ValueError("coordinates must have 4 torus and 24+24 root parameters")
        if not self.lam.is_unit():
            raise ValueError(f"scalar {self.lam} is not a unit")
        for j, sj in enumerate(self.s, start=1):
            if sj.ring != ring or not (sj - ring.one).in_radical():
                raise ValueError(f"torus parameter s{j} = {sj} is not congruent to 1")
        for i, (ti, ui) in enumerate(zip(self.t, self.u), start=1):
            if ti.ring != ring or not ti.in_radical():
                raise ValueError(f"parameter t{i} = {ti} is not in the radical")
            if ui.ring != ring or not ui.in_radical():
                raise ValueError(f"parameter u{i} = {ui} is not in the radical")


def trivial_coordinates(ring: LocalRing) -> ChevalleyCoordinates:
    return ChevalleyCoordinates(
        ring.one, (ring.one,) * 4, (ring.zero,) * 24, (ring.zero,) * 24
    )


# -- composition -------------------------------------------------------------------


def compose(c: ChevalleyCoordinates) -> GroupMatrix:
    """Multiply the factors out in the fixed order (validates the invariants)."""
    c.validate()
    return _compose_unchecked(c)


def _compose_unchecked(c: ChevalleyCoordinates) -> GroupMatrix:
    ring = c.lam.ring
    m = GroupMatrix(ring, ring.mat_scale(c.lam, ring.mat_eye(roots.DIM)))
    for j, sj in enumerate(c.s, start=1):
        m = mat_mul(m, h_elem(j, sj))
    for i, ti in enumerate(c.t, start=1):
        m = mat_mul(m, exp_root(i, ti))
    for i, ui in enumerate(c.u, start=1):
        m = mat_mul(m, exp_root(-i, ui))
    return m


def _compose_inverse(c: ChevalleyCoordinates) -> GroupMatrix:
    """compose(c)^{-1} built factor by factor (no elimination needed)."""
    ring = c.lam.ring
    m = identity(ring)
    for i in range(24, 0, -1):
        m = mat_mul(m, exp_root(-i, -c.u[i - 1]))
    for i in range(24, 0, -1):
        m = mat_mul(m, exp_root(i, -c.t[i - 1]))
    for j in range(4, 0, -1):
        m = mat_mul(m, h_elem(j, c.s[j - 1].inverse()))
    return GroupMatrix(ring, ring.mat_scale(c.lam.inverse(), m.entries))


# -- recovery ----------------------------------------------------------------------


@cache
def _extraction_columns() -> dict[int, tuple[int, int]]:
    """For each root a: (simple index j with <a, a_j-vee> != 0, that pairing)."""
    out = {}
    for a in roots.ALL_ROOTS:
        for j in roots.SIMPLE_ROOTS:
            pr = roots.pairing(a, j)
            if pr != 0:
                out[a] = (j, pr)
                break
        else:  # unreachable: roots are nonzero functionals on the coroots
            raise AssertionError(f"root {a} pairs to zero with every simple coroot")
    return out


@cache
def _pairing_matrix_inverse() -> np.ndarray:
    """Exact integer inverse of [<a_i, a_j-vee>]_{ij} (determinant one)."""
    return roots.cartan_matrix_inverse()


def recover(m: GroupMatrix) -> ChevalleyCoordinates:
    """The unique coordinates with compose(coordinates) = m, exactly.

    Raises:
        NotInCoset: if m is not in lambda * G(R, J) for a unit lambda; the
            exception carries a witness position where refinement got stuck.
    """
    ring = m.ring
    v4 = roots.h_pos(4)
    lam = m.entry(v4, v4)
    if not lam.is_unit():
        raise NotInCoset(f"corner entry {lam} is not a unit", (v4, v4))
    est = ChevalleyCoordinates(
        lam, (ring.one,) * 4, (ring.zero,) * 24, (ring.zero,) * 24
    )

    cols = _extraction_columns()
    pinv = _pairing_matrix_inverse()
    for _ in range(ring.nilpotency_degree + 1):
        z = ring.mat_sub(mat_mul(_compose_inverse(est), m).entries, ring.mat_eye(roots.DIM))
        if not z.any():
            return est
        zg = GroupMatrix(ring, z)
        d_lam = zg.entry(v4, v4)
        new_t, new_u = list(est.t), list(est.u)
        for a in roots.POSITIVE_ROOTS:
            j, pr = cols[a]
            dt = zg.entry(roots.v_pos(a), roots.h_pos(j)) * ring.elem(-pr).inverse()
            du = zg.entry(roots.v_pos(-a), roots.h_pos(j)) * ring.elem(pr).inverse()
            for delta, store in ((dt, new_t), (du, new_u)):
                if not delta.in_radical():
                    raise NotInCoset(
                        f"root parameter correction {delta} is not in the radical",
                        (roots.v_pos(a if store is new_t else -a), roots.h_pos(j)),
                    )
                store[a - 1] = store[a - 1] + delta
        diag = [
            zg.entry(roots.v_pos(i), roots.v_pos(i)) - d_lam for i in roots.SIMPLE_ROOTS
        ]
        new_s = []
        for j in range(4):
            dsig = ring.zero
            for i in range(4):
                dsig = dsig + ring.elem(int(pinv[j, i])) * diag[i]
            new_s.append(est.s[j] * (ring.one + dsig))
        est = ChevalleyCoordinates(
            est.lam * (ring.one + d_lam), tuple(new_s), tuple(new_t), tuple(new_u)
        )

    z = ring.mat_sub(mat_mul(_compose_inverse(est), m).entries, ring.mat_eye(roots.DIM))
    if z.any():
        if ring.kind == "dual":
            nz = np.nonzero(z.any(axis=0))
        else:
            nz = np.nonzero(z)
        first = (int(nz[0][0]), int(nz[1][0]))
        raise NotInCoset("residual does not vanish after refinement", first)
    est.validate()
    return est


def membership_lambda_GRJ(m: GroupMatrix) -> ChevalleyCoordinates | None:
    """Coordinates of m when m is in some lambda * G(R, J); None otherwise."""
    try:
        c = recover(m)
    except NotInCoset:
        return None
    return c if compose(c) == m else None


# -- the determining positions ------------------------------------------------------


@cache
def lemma4_positions() -> tuple[tuple[int, int], ...]:
    """The 53 matrix positions (0-based) that determine all 53 coordinates.

    Five diagonal positions at the negatives of the top chain roots fix the
    torus/scalar combinations; for each root index p one position fixes t_p
    and its mirror fixes u_p — a difference of two chain roots when one
    exists (the highest available), a Cartan column when the root pairs
    nontrivially with a simple coroot it is staged on, and the two
    exceptional indices are read against the highest root.
    """
    gam = GAMMA_SEQUENCE  # the 11-element chain from simple to highest root

    def neg(k: int) -> int:
        return roots.v_pos(-k)

    def t_position(p: int) -> tuple[int, int]:
        if p == 14:
            return neg(24), neg(18)
        if p == 18:
            return neg(24), neg(14)
        if p in (12, 19, 24):
            j = next(j for j in roots.SIMPLE_ROOTS if roots.pairing(p, j) != 0)
            return neg(p), roots.h_pos(j)
        for i in range(len(gam) - 1, 0, -1):
            for j in range(i):
                if roots.root_sum(gam[j], p) == gam[i]:
                    return neg(gam[i]), neg(gam[j])
        raise AssertionError(f"no chain difference produces root {p}")

    out = [(neg(gam[10]), neg(gam[10]))]
    for p in (1, 2, 3, 4):
        r, c = t_position(p)
        out.extend([(r, c), (c, c), (c, r)])
    for p in range(5, 25):
        r, c = t_position(p)
        out.extend([(r, c), (c, r)])
    return tuple(out)


def position_fingerprint(m: GroupMatrix) -> tuple[str, ...]:
    """The entries of m at the determining positions, as text."""
    return tuple(str(m.entry(r, c)) for r, c in lemma4_positions())


# -- serialization -------------------------------------------------------------------


def coordinates_to_document(c: ChevalleyCoordinates) -> dict:
    return {
        "ring": c.lam.ring.descriptor,
        "lambda": str(c.lam),
        "s": [str(x) for x in c.s],
        "t": [str(x) for x in c.t],
        "u": [str(x) for x in c.u],
    }


def coordinates_from_document(doc: dict) -> ChevalleyCoordinates:
    from .rings import parse_ring_descriptor

    ring = parse_ring_descriptor(doc["ring"])
    return ChevalleyCoordinates(
        ring.from_text(doc["lambda"]),
        tuple(ring.from_text(x) for x in doc["s"]),
        tuple(ring.from_text(x) for x in doc["t"]),
        tuple(ring.from_text(x) for x in doc["u"]),
    )


if __name__ == "__main__":  # tiny smoke test
    import random

    from .rings import parse_ring_descriptor

    for desc in ("zmod:81", "dual:5:3"):
        R = parse_ring_descriptor(desc)
        rng = random.Random(1)
        c = ChevalleyCoordinates(
            R.random_unit(rng),
            tuple(R.one + R.random_radical(rng) for _ in range(4)),
            tuple(R.random_radical(rng) for _ in range(24)),
            tuple(R.random_radical(rng) for _ in range(24)),
        )
        back = recover(compose(c))
        assert back == c, desc
        print(f"{desc}: ok (random coordinate round-trip)")
    print("determining positions:", len(lemma4_positions()))
