"""Run every golden comparison and property suite, producing a structured report.

Each check yields one :class:`CheckResult` with a status:

* ``pass`` — the computation agrees with the stored printed reference (or the
  derived expectation) exactly;
* ``reported`` — the computation disagrees with a printed value in precisely
  the catalogued way (a documented misprint or textual inconsistency); the
  detail names the deviation.  A reported check never fails the run, but any
  drift from the catalogued deviation turns into ``fail``;
* ``fail`` — an honest mismatch.  A correct build produces none.

Citations name the stored reference table a check compares against
(``printed:<table>``) or are ``derived`` for purely computational checks.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from . import reference_tables as ref
from . import roots
from .algebra import get_algebra, verify_structure
from .automorphisms import (
    check_standard_on_generators,
    identity_auto,
    inner_auto,
    standard_generators,
)
from .decomposition import (
    ChevalleyCoordinates,
    compose,
    lemma4_positions,
    position_fingerprint,
    recover,
)
from .group import GroupMatrix, evaluate_word, weyl_conjugate, x_int
from .matrix_units import cartan_projector_identities, span_check
from .rigidity import centralizer_check, kernel_dim_fast, kernel_report
from .rings import LocalRing, parse_ring_descriptor


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    check: str
    citation: str
    status: str  # "pass" | "fail" | "reported"
    detail: str

    def to_document(self) -> dict:
        return {
            "check": self.check,
            "citation": self.citation,
            "status": self.status,
            "detail": self.detail,
        }


def _result(check: str, citation: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(check, citation, "pass" if ok else "fail", detail)


def _reported(check: str, citation: str, detail: str) -> CheckResult:
    return CheckResult(check, citation, "reported", detail)


# -- root system ---------------------------------------------------------------


def _root_checks() -> list[CheckResult]:
    out = []
    bad = []
    for i in roots.POSITIVE_ROOTS:
        dec = roots.root_decomp(i)
        built = tuple(
            sum(dec[j] * roots.root_coords(j + 1)[k] for j in range(4))
            for k in range(4)
        )
        if built != roots.root_coords(i):
            bad.append(i)
        if roots.root_coords(-i) != tuple(-c for c in roots.root_coords(i)):
            bad.append(-i)
        if roots.root_from_coords(roots.root_coords(i)) != i:
            bad.append(i)
    out.append(_result(
        "root-coordinate-table",
        "printed:root-coordinates",
        not bad,
        "48 coordinate quadruples consistent with the simple-root decompositions"
        if not bad else f"inconsistent roots: {sorted(set(bad))}",
    ))

    n_long = len(roots.LONG_POSITIVE)
    n_short = len(roots.SHORT_POSITIVE)
    ok = n_long == 12 and n_short == 12 and all(
        roots.pairing(i, i) == 2 for i in roots.ALL_ROOTS if i > 0
    )
    out.append(_result(
        "root-lengths", "derived", ok,
        f"{2 * n_long} long and {2 * n_short} short roots, all with <a, a-dual> = 2",
    ))

    expected = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
    got = tuple(tuple(int(x) for x in row) for row in roots.cartan_matrix())
    out.append(_result(
        "cartan-matrix", "derived", got == expected,
        f"pairing matrix on simple roots (rows) is {got}",
    ))
    return out


# -- bracket rules ---------------------------------------------------------------


def _bracket_checks() -> list[CheckResult]:
    alg = get_algebra()
    out = []
    t = {i: alg.t_matrix(i) for i in roots.SIMPLE_ROOTS}
    x = {a: alg.x_matrix(a) for a in roots.ALL_ROOTS}

    ok = all(
        np.array_equal(t[i] @ t[j], t[j] @ t[i])
        for i in roots.SIMPLE_ROOTS for j in roots.SIMPLE_ROOTS
    )
    out.append(_result("bracket-diagonal-commute", "derived", ok,
                       "the four diagonal generators commute"))

    bad = [
        (i, a)
        for i in roots.SIMPLE_ROOTS
        for a in roots.ALL_ROOTS
        if not np.array_equal(t[i] @ x[a] - x[a] @ t[i], roots.pairing(a, i) * x[a])
    ]
    out.append(_result(
        "bracket-diagonal-root", "derived", not bad,
        "[T_i, X_a] = <a, a_i-dual> X_a for all 4x48 pairs" if not bad
        else f"{len(bad)} failing pairs, first {bad[0]}",
    ))

    bad = []
    for a in roots.ALL_ROOTS:
        h = sum(c * t[j] for c, j in zip(roots.coroot_coords(a), roots.SIMPLE_ROOTS))
        if not np.array_equal(x[a] @ x[-a] - x[-a] @ x[a], h):
            bad.append(a)
    out.append(_result(
        "bracket-opposite-roots", "derived", not bad,
        "[X_a, X_-a] equals the coroot combination of T_1..T_4 for all 48 roots"
        if not bad else f"failing roots: {bad}",
    ))

    example_root, printed = ref.BRACKET_COROOT_EXAMPLE_PRINTED
    honest = roots.coroot_coords(example_root)
    if printed == honest:
        out.append(_result(
            "bracket-opposite-printed-example", "printed:bracket-coroot-example",
            True, f"printed coefficients {printed} match the coroot coordinates"))
    elif honest == (2, 3, 2, 1) and printed == (2, 3, 4, 2):
        out.append(_reported(
            "bracket-opposite-printed-example", "printed:bracket-coroot-example",
            f"printed coefficients {printed} for the highest long root disagree with "
            f"the verified coroot coordinates {honest}; the honest identity is asserted",
        ))
    else:
        out.append(_result(
            "bracket-opposite-printed-example", "printed:bracket-coroot-example",
            False, f"unexpected deviation: printed {printed}, honest {honest}"))

    bad = []
    for a in roots.ALL_ROOTS:
        for b in roots.ALL_ROOTS:
            if a == b or a == -b:
                continue
            s = roots.root_sum(a, b)
            expected = (
                alg.structure_constant(a, b) * x[s]
                if s is not None
                else np.zeros((roots.DIM, roots.DIM), dtype=np.int64)
            )
            if not np.array_equal(x[a] @ x[b] - x[b] @ x[a], expected):
                bad.append((a, b))
    out.append(_result(
        "bracket-root-pairs", "derived", not bad,
        "[X_a, X_b] = N(a,b) X_{a+b} (or zero) on all ordered root pairs"
        if not bad else f"{len(bad)} failing pairs, first {bad[0]}",
    ))

    for name, ok, detail in verify_structure(alg):
        out.append(_result(f"structure-{name}", "derived", ok, detail))
    return out


# -- torus and reflection goldens ------------------------------------------------


def _root_basis_matrix(i: int) -> np.ndarray:
    """The simple reflection as a matrix on simple-root coefficients."""
    m = np.zeros((4, 4), dtype=np.int64)
    for j in roots.SIMPLE_ROOTS:
        img = roots.reflect(j, i)
        dec = roots.root_decomp(abs(img))
        sgn = 1 if img > 0 else -1
        m[:, j - 1] = sgn * np.array(dec, dtype=np.int64)
    return m


def _h_diag_checks() -> list[CheckResult]:
    alg = get_algebra()
    out = []
    for i in roots.SIMPLE_ROOTS:
        printed = ref.H_DIAG_PRINTED[i]
        full = tuple(int(v) for v in np.diagonal(alg.h_matrix_neg_one(i)))
        check = f"h-diagonal-{i}"
        if printed == full:
            out.append(_result(check, "printed:h-diagonals", True,
                               "all 52 printed entries match"))
            continue
        dropped = ref.align_with_deletions(printed, full)
        if dropped is not None:
            out.append(_reported(
                check, "printed:h-diagonals",
                f"printed list has {len(printed)} entries; all match after "
                f"reinserting dropped positions {tuple(d + 1 for d in dropped)} (1-based)",
            ))
        else:
            out.append(_result(check, "printed:h-diagonals", False,
                               "printed diagonal is not a subsequence of the computed one"))
    return out


def _w_golden_checks() -> list[CheckResult]:
    alg = get_algebra()
    out = []
    tau = alg.printed_parameter_signs

    for i in roots.SIMPLE_ROOTS:
        printed = np.array(ref.W_CARTAN_BLOCK_PRINTED[i], dtype=np.int64)
        honest = alg.w_matrix(i)[48:, 48:]
        check = f"w-cartan-block-{i}"
        if np.array_equal(printed, honest):
            out.append(_result(check, "printed:w-cartan-blocks", True,
                               "printed block equals the computed block"))
        elif np.array_equal(printed, _root_basis_matrix(i)):
            out.append(_reported(
                check, "printed:w-cartan-blocks",
                "printed block is the reflection on root coefficients, not the "
                "computed action on the diagonal-generator coordinates; both match "
                "that convention exactly",
            ))
        else:
            out.append(_result(check, "printed:w-cartan-blocks", False,
                               "printed block matches neither convention"))

    for i in roots.SIMPLE_ROOTS:
        golden = ref.terms_to_matrix(ref.corrected_w_terms(i))
        computed = x_int(i, tau[i - 1]) @ x_int(-i, -tau[i - 1]) @ x_int(i, tau[i - 1])
        check = f"w-expansion-{i}"
        if np.array_equal(golden, computed):
            out.append(_result(check, "printed:w-expansions", True,
                               "printed expansion matches entry-for-entry (conjugator = identity)"))
        elif (
            np.array_equal(golden[:48, :48], computed[:48, :48])
            and not golden[:48, 48:].any()
            and not golden[48:, :48].any()
            and np.array_equal(golden[48:, 48:], _root_basis_matrix(i))
        ):
            out.append(_reported(
                check, "printed:w-expansions",
                "root block matches entry-for-entry; the printed diagonal-generator "
                "block uses the root-coefficient convention (same catalogued deviation "
                "as the printed 4x4 blocks)",
            ))
        else:
            out.append(_result(check, "printed:w-expansions", False,
                               "printed expansion disagrees beyond the catalogued conventions"))

    fixes = {i: len(ref.W_TERM_FIXES.get(i, ())) for i in roots.SIMPLE_ROOTS}
    out.append(_reported(
        "w-expansion-transcription-fixes", "printed:w-expansions",
        f"corrected printed terms per reflection: {fixes} (each uncorrected term "
        "collides with another column of a signed permutation); corrected tables "
        "are what the expansion checks verify",
    ))

    if tau == (1, 1, 1, 1):
        out.append(_result("w-parameter-orientation", "printed:w-expansions", True,
                           "all four printed representatives use parameter +1"))
    elif tau == (-1, 1, 1, 1):
        out.append(_reported(
            "w-parameter-orientation", "printed:w-expansions",
            "no basis realizes all four printed expansions with parameter +1; the "
            "first printed representative is the inverse element (parameter -1), "
            "the other three are direct",
        ))
    else:
        out.append(_result("w-parameter-orientation", "printed:w-expansions", False,
                           f"unexpected parameter signs {tau}"))

    ok = all(
        np.array_equal(alg.w_matrix(i) @ alg.w_matrix(i), alg.h_matrix_neg_one(i))
        for i in roots.SIMPLE_ROOTS
    )
    out.append(_result("w-square-torus", "derived", ok,
                       "w_i(1)^2 equals the order-two torus element for i = 1..4"))

    ok = all(
        np.array_equal(alg.w_matrix(i) @ alg.w_matrix(j), alg.w_matrix(j) @ alg.w_matrix(i))
        for i, j in ((1, 3), (1, 4), (2, 4))
    )
    out.append(_result("w-commuting-pairs", "derived", ok,
                       "w_i and w_j commute for the three non-adjacent pairs"))

    for (i, j), claimed in ref.W_ORDER_CLAIMS:
        block = alg.w_matrix(i)[48:, 48:] @ alg.w_matrix(j)[48:, 48:]
        power = np.eye(4, dtype=np.int64)
        order = 0
        for n in range(1, 25):
            power = power @ block
            if np.array_equal(power, np.eye(4, dtype=np.int64)):
                order = n
                break
        check = f"w-order-{i}{j}"
        if order == claimed:
            out.append(_result(check, "printed:w-order-claims", True,
                               f"order of the product block is {order} as printed"))
        elif (i, j, claimed, order) == (2, 3, 2, 4):
            out.append(_reported(
                check, "printed:w-order-claims",
                "printed order 2, measured order 4 (the adjacent double-bond pair); "
                "the measured value is reported, not asserted away",
            ))
        else:
            out.append(_result(check, "printed:w-order-claims", False,
                               f"printed order {claimed}, measured {order}"))
    return out


def _t_matrix_checks() -> list[CheckResult]:
    alg = get_algebra()
    out = []
    for i, printed in ((1, ref.T1_PRINTED), (3, ref.T3_PRINTED)):
        full = tuple(int(v) for v in np.diagonal(alg.t_matrix(i)))
        check = f"t-diagonal-{i}"
        if printed == full:
            out.append(_result(check, "printed:t-diagonals", True,
                               "all 52 printed entries match"))
            continue
        dropped = ref.align_with_deletions(printed, full)
        if dropped is not None:
            out.append(_reported(
                check, "printed:t-diagonals",
                f"printed list has {len(printed)} entries; all match after "
                f"reinserting dropped positions {tuple(d + 1 for d in dropped)} (1-based)",
            ))
        else:
            out.append(_result(check, "printed:t-diagonals", False,
                               "printed diagonal is not a subsequence of the computed one"))

    for target, word, source in ref.T_CONJUGATIONS:
        prod = alg.w_word_matrix(word)
        inv = np.eye(roots.DIM, dtype=np.int64)
        for idx in reversed(word):
            inv = inv @ x_int(idx, -1) @ x_int(-idx, 1) @ x_int(idx, -1)
        ok = np.array_equal(prod @ alg.t_matrix(source) @ inv, alg.t_matrix(target))
        out.append(_result(
            f"t-conjugation-{target}", "printed:t-conjugations", ok,
            f"T_{target} equals the conjugate of T_{source} by the printed word {word}",
        ))
    return out


def _x_chain_checks() -> list[CheckResult]:
    out = []
    base_ok = True
    signs = []
    for target, w_idx, source in ((-1, 1, 1), (-3, 3, 3)) + tuple(
        (t, w, s) for t, w, s in ref.X_CONJUGATION_CHAIN
    ):
        for sgn in (1, -1):
            moved, eta = weyl_conjugate(w_idx, sgn * source)
            if moved != sgn * target:
                base_ok = False
            signs.append(eta)
    minus = signs.count(-1)
    out.append(_result(
        "x-conjugation-chain", "printed:x-conjugation-chain", base_ok,
        f"all 48 printed conjugations land on the stated root vector; "
        f"{minus} of 48 carry a minus sign (signs recorded, the printed chain "
        "states targets up to sign)",
    ))
    return out


# -- generation goldens -----------------------------------------------------------


def _seed_checks() -> list[CheckResult]:
    out = []
    eye = np.eye(roots.DIM, dtype=np.int64)

    m = x_int(1, 1) - eye
    out.append(_result(
        "unit-seed-long", "printed:unit-seeds",
        np.array_equal(m @ m, ref.positions_to_matrix(ref.LONG_SEED_PRINTED)),
        "squared displacement of the first long-root generator matches the printed single term",
    ))

    m = x_int(4, 1) - eye
    out.append(_result(
        "unit-seed-short", "printed:unit-seeds",
        np.array_equal(m @ m, ref.positions_to_matrix(ref.SHORT_SEED_PRINTED)),
        "squared displacement of the fourth-root generator matches the printed seven terms",
    ))

    m = (x_int(1, 1) - eye).copy()
    m[:48, :48] = 0
    out.append(_result(
        "unit-seed-cartan", "printed:unit-seeds",
        np.array_equal(m, ref.positions_to_matrix(ref.CARTAN_SEED_PRINTED)),
        "diagonal-block displacement of the first generator matches the printed three terms",
    ))
    return out


_PROJECTOR_EXPECTED: dict[str, bool] = {
    "projector-product-sixteenth-is-diagonal-sum": True,
    "projector-product-eighth-matches-display": False,
    "b-minus-shift-matches-display": False,
    "b-minus-shift-matches-display-transposed": True,
    "b-plus-shift-matches-display": False,
    "c-matches-display": False,
    "c-matches-display-transposed": True,
    "displayed-chain-internal-consistency": True,
    "final-claim-computed-route": False,
    "final-claim-displayed-route": False,
    "final-residues-transpose-related": True,
}


def _projector_checks() -> list[CheckResult]:
    report = cartan_projector_identities()
    out = []
    for chk in report.checks:
        expected = _PROJECTOR_EXPECTED.get(chk.name)
        check = f"projector-{chk.name}"
        if expected is None:
            out.append(_result(check, "printed:projector-chain", False,
                               f"unknown projector check {chk.name}"))
        elif chk.holds and expected:
            out.append(_result(check, "printed:projector-chain", True, chk.detail))
        elif (not chk.holds) and (not expected):
            out.append(_reported(check, "printed:projector-chain",
                                 f"printed form does not hold; {chk.detail}"))
        else:
            out.append(_result(check, "printed:projector-chain", False,
                               f"deviation drifted from the catalogued one: {chk.detail}"))
    return out


def _span_checks(ring: LocalRing) -> list[CheckResult]:
    stats = span_check(ring)
    ok = stats["verified"] == stats["total"] == 2704 and not stats["failures"]
    return [_result(
        "unit-span", "derived", ok,
        f"{stats['verified']}/{stats['total']} matrix units generated and verified "
        f"over {stats['ring']}",
    )]


# -- coordinate recovery -----------------------------------------------------------


def _random_coordinates(ring: LocalRing, rng: random.Random) -> ChevalleyCoordinates:
    return ChevalleyCoordinates(
        ring.random_unit(rng),
        tuple(ring.one + ring.random_radical(rng) for _ in range(4)),
        tuple(ring.random_radical(rng) for _ in range(24)),
        tuple(ring.random_radical(rng) for _ in range(24)),
    )


def _coordinate_checks(ring: LocalRing, rng: random.Random) -> list[CheckResult]:
    out = []

    derived = lemma4_positions()
    printed = ref.to_zero_based(ref.ZERO_POSITIONS_PRINTED)
    out.append(_result(
        "coordinate-positions", "printed:zero-positions",
        tuple(derived) == tuple(printed),
        f"derived determining-position list reproduces the printed 53-entry list "
        f"in order ({len(derived)} positions)",
    ))

    n = 24
    failures = 0
    for _ in range(n):
        c = _random_coordinates(ring, rng)
        if recover(compose(c)) != c:
            failures += 1
    out.append(_result(
        "coordinate-roundtrip", "derived", failures == 0,
        f"recover(compose(c)) == c on {n}/{n} random coordinate tuples over {ring.descriptor}"
        if not failures else f"{failures}/{n} roundtrips failed",
    ))

    pairs = 0
    collisions = 0
    while pairs < 24:
        a = _random_coordinates(ring, rng)
        b = _random_coordinates(ring, rng)
        if a == b:
            continue
        pairs += 1
        if position_fingerprint(compose(a)) == position_fingerprint(compose(b)):
            collisions += 1
    out.append(_result(
        "coordinate-injectivity", "derived", collisions == 0,
        f"distinct coordinates gave distinct determining-position fingerprints "
        f"on {pairs} random pairs" if not collisions
        else f"{collisions} fingerprint collisions",
    ))

    for gamma, printed_exp in ref.D_COMBOS_PRINTED:
        honest = tuple(-roots.pairing(gamma, j) for j in roots.SIMPLE_ROOTS)
        check = f"coordinate-torus-combo-{gamma}"
        if printed_exp == honest:
            out.append(_result(check, "printed:torus-combos", True,
                               f"printed exponents {printed_exp} match the pairing values"))
        elif gamma == 22 and printed_exp == (0, 1, -1, 0) and honest == (0, 1, -2, 0):
            out.append(_reported(
                check, "printed:torus-combos",
                f"printed exponents {printed_exp} disagree with the verified pairing "
                f"exponents {honest} (third entry -1 vs -2); recovery reads matrix "
                "entries directly, so no algorithm depends on the printed formula",
            ))
        else:
            out.append(_result(check, "printed:torus-combos", False,
                               f"unexpected deviation: printed {printed_exp}, honest {honest}"))
    return out


# -- rigidity -----------------------------------------------------------------------


def _rigidity_checks(ring: LocalRing) -> list[CheckResult]:
    out = []
    p = ring.p
    rep = kernel_report(p)
    check = f"rigidity-kernel-p{p}"
    if rep["dimension"] == 0:
        out.append(_result(
            check, "printed:zero-positions", True,
            f"constrained kernel over F_{p} is trivial "
            f"({rep['equations']} equations, {rep['unknowns']} unknowns)",
        ))
    elif p == 3 and rep["dimension"] == 1 and rep["survivor"] == "X[+19]":
        out.append(_reported(
            check, "printed:zero-positions",
            "expected trivial kernel, measured dimension 1 over F_3: the position "
            "list evaluates the 53-dimensional solution space with determinant "
            "2^11 * 3, and the short-root vector X[+19] (whose only entry on the "
            "list is the coroot coefficient 3 at position (51, 38)) survives; "
            "over F_5 and F_7 the kernel is trivial as expected",
        ))
    else:
        out.append(_result(
            check, "printed:zero-positions", False,
            f"kernel dimension {rep['dimension']} (survivor {rep['survivor']}) "
            "does not match the expectation or the catalogued deviation",
        ))

    free_dim = kernel_dim_fast(p, include_constraints=False)
    out.append(_result(
        "rigidity-unconstrained", "derived", free_dim >= 1,
        f"without position constraints the solution space has dimension {free_dim} "
        "(scalars and the 52 algebra directions)",
    ))

    cent = centralizer_check(p)
    out.append(_result(
        "rigidity-centralizer", "derived",
        cent["dimension"] == 1 and cent["scalars_only"],
        f"centralizer of the eight generators over F_{p}: {cent['detail']}",
    ))
    return out


# -- automorphisms -------------------------------------------------------------------


def _automorphism_checks(ring: LocalRing) -> list[CheckResult]:
    out = []
    gens = standard_generators(ring)
    w2 = evaluate_word(ring, [("w", 2, ring.one)])
    images = {label: inner_auto(w2, g) for label, g in gens.items()}
    rho = identity_auto(ring)
    ok = check_standard_on_generators(images, w2, rho)
    trivial_c = GroupMatrix(ring, ring.mat_eye(roots.DIM))
    not_ok = check_standard_on_generators(images, trivial_c, rho)
    out.append(_result(
        "standard-automorphism-verification", "derived", ok and not not_ok,
        "conjugation images verify against the true conjugator and are rejected "
        "for the identity conjugator",
    ))
    out.append(_reported(
        "inverting-element-reference", "printed:w-expansions",
        "the reference text names an element said to invert the fourth-root "
        "generator by conjugation but never defines it; recorded, not implemented",
    ))
    return out


# -- public entry points --------------------------------------------------------------


def run_all(ring: LocalRing | str, seed: int = 0) -> list[CheckResult]:
    """All checks, in a fixed order, deterministic for a given (ring, seed)."""
    if isinstance(ring, str):
        ring = parse_ring_descriptor(ring)
    rng = random.Random(seed)
    results: list[CheckResult] = []
    results += _root_checks()
    results += _bracket_checks()
    results += _h_diag_checks()
    results += _w_golden_checks()
    results += _t_matrix_checks()
    results += _x_chain_checks()
    results += _seed_checks()
    results += _projector_checks()
    results += _span_checks(ring)
    results += _coordinate_checks(ring, rng)
    results += _rigidity_checks(ring)
    results += _automorphism_checks(ring)
    return results


def report_format(results: list[CheckResult]) -> dict:
    """Plain-data report: summary counts plus one entry per check."""
    counts = {"pass": 0, "fail": 0, "reported": 0}
    for r in results:
        counts[r.status] += 1
    return {
        "summary": {
            "total": len(results),
            "pass": counts["pass"],
            "reported": counts["reported"],
            "fail": counts["fail"],
        },
        "checks": [r.to_document() for r in results],
    }


if __name__ == "__main__":
    t0 = time.perf_counter()
    results = run_all("zmod:27", 0)
    elapsed = time.perf_counter() - t0
    width = max(len(r.check) for r in results)
    for r in results:
        print(f"{r.status:<8} {r.check:<{width}} {r.detail}")
    doc = report_format(results)
    print(f"\nsummary: {doc['summary']} in {elapsed:.1f}s")
