"""Chevalley basis of the 52-dimensional Lie algebra and its adjoint action.

The basis is x_{alpha} for the 48 roots followed by the four simple coroots
h_1..h_4, ordered as in :mod:`chevf4.roots`.  Structure constants
N(alpha, beta) are derived from scratch by induction over root heights
(fixing the sign of every extraspecial pair to be positive) and then
re-aligned, via a diagonal ±1 change of basis, to the sign convention of the
printed reference expansions of the simple-reflection representatives; the
re-alignment is solved for, applied, and re-verified exactly, so every matrix
produced here matches the printed root-block data entry for entry.

All matrices in this module are exact ``numpy`` int64 arrays; ring-level
arithmetic lives elsewhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

import numpy as np

from . import reference_tables, roots


class StructureConstantError(RuntimeError):
    """The structure-constant induction or sign re-alignment failed."""


def _dnorm(i: int) -> int:
    """Squared length of root i in doubled coordinates (8 long, 4 short)."""
    c = roots.root_coords(i)
    return sum(x * x for x in c)


def _root_diff(a: int, b: int) -> int | None:
    ca, cb = roots.root_coords(a), roots.root_coords(b)
    return roots.root_from_coords(tuple(x - y for x, y in zip(ca, cb)))


# -- structure constants -------------------------------------------------------


def _derive_positive_table() -> dict[tuple[int, int], Fraction]:
    """N(a, b) for every special pair a < b of positive roots.

    Induction over sums in height order: the extraspecial pair of each sum
    gets N = +(p+1); every other special pair follows from the quadruple
    relation, with mixed-sign values reduced through the triple relation.
    """
    table: dict[tuple[int, int], Fraction] = {}

    def n_pos(a: int, b: int) -> Fraction:
        if a < b:
            return table[(a, b)]
        return -table[(b, a)]

    def n_mixed(xi: int, zeta: int) -> Fraction:
        # N(xi, -zeta) for distinct positive xi, zeta with xi - zeta a root
        theta = _root_diff(xi, zeta)
        if theta is None:
            raise StructureConstantError(f"not a root pair: {xi}, -{zeta}")
        if theta > 0:
            return Fraction(_dnorm(theta), _dnorm(xi)) * n_pos(theta, zeta)
        return Fraction(_dnorm(-theta), _dnorm(zeta)) * n_pos(-theta, xi)

    for gamma in roots.POSITIVE_ROOTS:
        pairs = []
        for a in roots.POSITIVE_ROOTS:
            b = _root_diff(gamma, a)
            if b is not None and b > a:
                pairs.append((a, b))
        if not pairs:
            continue  # simple root
        pairs.sort()
        eps, eta = pairs[0]
        p, _ = roots.root_string(eta, eps)
        table[(eps, eta)] = Fraction(p + 1)
        for al, be in pairs[1:]:
            total = Fraction(0)
            d1 = _root_diff(eta, al)
            if d1 is not None:
                total += n_mixed(eta, al) * n_mixed(eps, be) / _dnorm(d1)
            d2 = _root_diff(eps, al)
            if d2 is not None:
                total += -n_mixed(al, eps) * n_mixed(eta, be) / _dnorm(d2)
            val = Fraction(_dnorm(gamma)) * total / table[(eps, eta)]
            if val.denominator != 1 or val == 0:
                raise StructureConstantError(f"bad constant for pair ({al}, {be}): {val}")
            table[(al, be)] = val
    return table


def _extend_table(pos_table: dict[tuple[int, int], Fraction]) -> dict[tuple[int, int], int]:
    """Structure constants for every ordered pair of roots with a root sum."""

    def n_pos(a: int, b: int) -> Fraction:
        return pos_table[(a, b)] if a < b else -pos_table[(b, a)]

    def n_mixed(xi: int, zeta: int) -> Fraction:
        theta = _root_diff(xi, zeta)
        assert theta is not None
        if theta > 0:
            return Fraction(_dnorm(theta), _dnorm(xi)) * n_pos(theta, zeta)
        return Fraction(_dnorm(-theta), _dnorm(zeta)) * n_pos(-theta, xi)

    full: dict[tuple[int, int], int] = {}
    for a in roots.ALL_ROOTS:
        for b in roots.ALL_ROOTS:
            if roots.root_sum(a, b) is None:
                continue
            if a > 0 and b > 0:
                val = n_pos(a, b)
            elif a < 0 and b < 0:
                val = -n_pos(-a, -b)
            elif a > 0:
                val = n_mixed(a, -b)
            else:
                val = -n_mixed(-a, b)
            if val.denominator != 1:
                raise StructureConstantError(f"non-integral N({a}, {b}) = {val}")
            p, _ = roots.root_string(b, a)
            if abs(val) != p + 1:
                raise StructureConstantError(
                    f"|N({a}, {b})| = {abs(val)} but the root string gives {p + 1}"
                )
            full[(a, b)] = int(val)
    return full


# -- matrices of the adjoint action --------------------------------------------


def _x_matrix(constants: dict[tuple[int, int], int], a: int) -> np.ndarray:
    m = np.zeros((roots.DIM, roots.DIM), dtype=np.int64)
    for b in roots.ALL_ROOTS:
        s = roots.root_sum(a, b)
        if s is not None:
            m[roots.v_pos(s), roots.v_pos(b)] = constants[(a, b)]
    for j, mj in zip(roots.SIMPLE_ROOTS, roots.coroot_coords(a)):
        m[roots.h_pos(j), roots.v_pos(-a)] = mj
    for j in roots.SIMPLE_ROOTS:
        m[roots.v_pos(a), roots.h_pos(j)] = -roots.pairing(a, j)
    return m


def _t_matrix(i: int) -> np.ndarray:
    m = np.zeros((roots.DIM, roots.DIM), dtype=np.int64)
    for b in roots.ALL_ROOTS:
        m[roots.v_pos(b), roots.v_pos(b)] = roots.pairing(b, i)
    return m


def exp_nilpotent_int(x: np.ndarray, t: int) -> np.ndarray:
    """exp(t x) for an int64 matrix with x^3 = 0 and x^2 even."""
    x2 = x @ x
    if np.any(x2 @ x) or np.any(x2 % 2):
        raise StructureConstantError("matrix is not nilpotent of the expected shape")
    return np.eye(roots.DIM, dtype=np.int64) + t * x + (t * t) * (x2 // 2)


def _w_simple(xs: dict[int, np.ndarray], i: int, t: int) -> np.ndarray:
    """Reflection representative for simple root i with parameter t = ±1."""
    return (
        exp_nilpotent_int(xs[i], t)
        @ exp_nilpotent_int(xs[-i], -t)
        @ exp_nilpotent_int(xs[i], t)
    )


# -- sign re-alignment against the reference expansions -------------------------


class _ParityDSU:
    """Union-find over basis positions carrying a ±1 relative sign."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.par = [0] * n  # parity of the sign relative to the parent

    def find(self, x: int) -> tuple[int, int]:
        if self.parent[x] == x:
            return x, 0
        root, par = self.find(self.parent[x])
        self.parent[x] = root
        self.par[x] ^= par
        return root, self.par[x]

    def union(self, x: int, y: int, rel: int) -> bool:
        """Require sign(x)*sign(y) == rel (rel = ±1); False on contradiction."""
        bit = 1 if rel == -1 else 0
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == bit
        self.parent[rx] = ry
        self.par[rx] = px ^ py ^ bit
        return True


def _alignment_candidates(
    computed: dict[int, np.ndarray], goldens: dict[int, np.ndarray]
) -> list[list[int]]:
    """All diagonal ±1 rescalings d with d.W(1).d = golden on the root block.

    The constraint graph on the 48 root positions splits into connected
    components whose relative signs are forced; each global choice of one
    sign per component yields a candidate (so the list has 2^components
    entries, all returned for the caller to filter).
    """
    dsu = _ParityDSU(48)
    for k in roots.POSITIVE_ROOTS:
        if not dsu.union(roots.v_pos(k), roots.v_pos(-k), 1):
            return []
    for i in goldens:
        g = goldens[i][:48, :48]
        c = computed[i][:48, :48]
        if np.any((g == 0) != (c == 0)) or np.any(np.abs(g) != np.abs(c)):
            return []
        for r, col in zip(*np.nonzero(g)):
            if not dsu.union(int(r), int(col), int(np.sign(g[r, col] * c[r, col]))):
                return []
    comps: dict[int, list[tuple[int, int]]] = {}
    for pos in range(48):
        root, par = dsu.find(pos)
        comps.setdefault(root, []).append((pos, par))
    if len(comps) > 8:
        raise StructureConstantError("sign constraint graph unexpectedly loose")
    out = []
    for signs in itertools.product((1, -1), repeat=len(comps)):
        d = [0] * 48
        for s, members in zip(signs, comps.values()):
            for pos, par in members:
                d[pos] = s * (1 - 2 * par)
        out.append(d)
    return out


# -- the assembled algebra -------------------------------------------------------


class F4Algebra:
    """Exact structure constants and adjoint matrices, reference-aligned.

    The basis is rescaled so that the printed reference expansions of the
    four reflection representatives are reproduced exactly on the root block,
    each as w_i(tau_i) with ``printed_parameter_signs`` tau.  The printed set
    forces one inversion on the long-root pair: no basis realizes all four
    with tau = (1,1,1,1); the adopted reading tau = (-1,1,1,1) treats the
    first printed table as the inverse representative and keeps every printed
    entry intact (the harness reports this as a catalogued discrepancy).
    """

    def __init__(self):
        pos_table = _derive_positive_table()
        constants = _extend_table(pos_table)
        goldens = {
            i: reference_tables.terms_to_matrix(reference_tables.corrected_w_terms(i))
            for i in (1, 2, 3, 4)
        }

        xs = {a: _x_matrix(constants, a) for a in roots.ALL_ROOTS}
        computed = {i: _w_simple(xs, i, 1) for i in (1, 2, 3, 4)}
        solutions = []
        for d in _alignment_candidates(computed, goldens):
            tau = tuple(d[roots.v_pos(i)] for i in (1, 2, 3, 4))
            realigned = {
                (a, b): d[roots.v_pos(a)] * d[roots.v_pos(b)] * d[roots.v_pos(roots.root_sum(a, b))] * n
                for (a, b), n in constants.items()
            }
            xs2 = {a: _x_matrix(realigned, a) for a in roots.ALL_ROOTS}
            if all(
                np.array_equal(_w_simple(xs2, i, tau[i - 1])[:48, :48], goldens[i][:48, :48])
                and not np.any(goldens[i][:48, 48:])
                and not np.any(goldens[i][48:, :48])
                for i in (1, 2, 3, 4)
            ):
                solutions.append((tau, d, realigned, xs2))
        if not solutions:
            raise StructureConstantError(
                "no diagonal sign change matches the reference expansions"
            )
        # prefer no inversions, then fewest, then inversions at low index
        solutions.sort(key=lambda s: (sum(1 for t in s[0] if t < 0), s[0]))
        tau, d, self.constants, self._x = solutions[0]
        self._w = {i: _w_simple(self._x, i, 1) for i in (1, 2, 3, 4)}
        self.sign_alignment: tuple[int, ...] = tuple(d)
        self.printed_parameter_signs: tuple[int, ...] = tau
        self._t = {i: _t_matrix(i) for i in roots.SIMPLE_ROOTS}
        self._h_neg = {}
        for i in roots.SIMPLE_ROOTS:
            m = np.eye(roots.DIM, dtype=np.int64)
            for b in roots.ALL_ROOTS:
                m[roots.v_pos(b), roots.v_pos(b)] = (-1) ** (roots.pairing(b, i) & 1)
            self._h_neg[i] = m

    # matrices are returned as copies so callers can mutate freely

    def structure_constant(self, a: int, b: int) -> int:
        """N(a, b) for roots a, b whose sum is a root."""
        try:
            return self.constants[(a, b)]
        except KeyError:
            raise ValueError(f"the sum of roots {a} and {b} is not a root") from None

    def x_matrix(self, a: int) -> np.ndarray:
        """Adjoint matrix of the root vector x_a."""
        return self._x[a].copy()

    def t_matrix(self, i: int) -> np.ndarray:
        """Adjoint matrix of the simple coroot h_i."""
        return self._t[i].copy()

    def w_matrix(self, i: int) -> np.ndarray:
        """Reflection representative w_i = x_i(1) x_{-i}(-1) x_i(1), exact."""
        return self._w[i].copy()

    def h_matrix_neg_one(self, i: int) -> np.ndarray:
        """The torus element h_{alpha_i}(-1) as an exact diagonal matrix."""
        return self._h_neg[i].copy()

    def w_word_matrix(self, word: tuple[int, ...]) -> np.ndarray:
        """Product of reflection representatives for a word in 1..4."""
        m = np.eye(roots.DIM, dtype=np.int64)
        for i in word:
            m = m @ self._w[i]
        return m


@cache
def get_algebra() -> F4Algebra:
    return F4Algebra()


# -- structural verification -----------------------------------------------------


def _bracket_tensor(alg: F4Algebra) -> np.ndarray:
    """c[a, b, :] = coordinates of [e_a, e_b] over the 52-element basis."""
    c = np.zeros((roots.DIM, roots.DIM, roots.DIM), dtype=np.int64)
    for a in roots.ALL_ROOTS:
        pa = roots.v_pos(a)
        for b in roots.ALL_ROOTS:
            pb = roots.v_pos(b)
            s = roots.root_sum(a, b)
            if s is not None:
                c[pa, pb, roots.v_pos(s)] = alg.constants[(a, b)]
            elif b == -a:
                for j, mj in zip(roots.SIMPLE_ROOTS, roots.coroot_coords(a)):
                    c[pa, pb, roots.h_pos(j)] = mj
        for j in roots.SIMPLE_ROOTS:
            c[pa, roots.h_pos(j), pa] = -roots.pairing(a, j)
            c[roots.h_pos(j), pa, pa] = roots.pairing(a, j)
    return c


def verify_structure(alg: F4Algebra | None = None) -> list[tuple[str, bool, str]]:
    """Mechanical self-checks of the derived constants; (name, ok, detail)."""
    alg = alg or get_algebra()
    out: list[tuple[str, bool, str]] = []

    bad = [
        (a, b)
        for (a, b), n in alg.constants.items()
        if alg.constants[(b, a)] != -n or alg.constants[(-a, -b)] != -n
    ]
    out.append((
        "constant-symmetries",
        not bad,
        f"{len(bad)} violations" if bad else f"{len(alg.constants)} ordered pairs checked",
    ))

    bad = []
    for (a, b), n in alg.constants.items():
        p, _ = roots.root_string(b, a)
        if abs(n) != p + 1:
            bad.append((a, b))
    out.append(("constant-magnitudes", not bad, f"{len(bad)} violations"))

    bad = []
    for (a, b), n in alg.constants.items():
        c = -roots.root_sum(a, b)
        if n * _dnorm(a) != alg.constants[(b, c)] * _dnorm(c):
            bad.append((a, b))
    out.append(("triple-rotation-ratios", not bad, f"{len(bad)} violations"))

    basis = [alg._x[roots.pos_root(p)] for p in range(48)] + [alg._t[j] for j in roots.SIMPLE_ROOTS]
    m = np.stack(basis).astype(np.int64)
    c = _bracket_tensor(alg)
    left = np.einsum("aij,bjk->abik", m, m) - np.einsum("bij,ajk->abik", m, m)
    right = np.einsum("abc,cik->abik", c, m)
    ok = np.array_equal(left, right)
    out.append((
        "adjoint-homomorphism",
        ok,
        "[ad u, ad v] = ad [u, v] on all 52x52 basis pairs" if ok else "bracket tensor mismatch",
    ))

    bad = []
    for a in roots.ALL_ROOTS:
        x2 = alg._x[a] @ alg._x[a]
        if np.any(x2 @ alg._x[a]) or np.any(x2 % 2):
            bad.append(a)
    out.append(("root-matrix-nilpotency", not bad, f"{len(bad)} violations"))

    return out


if __name__ == "__main__":
    algebra = get_algebra()
    print(f"printed parameter signs: {algebra.printed_parameter_signs}")
    print(f"sign changes applied: {sum(1 for s in algebra.sign_alignment if s < 0)} of 48")
    for name, ok, detail in verify_structure(algebra):
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
