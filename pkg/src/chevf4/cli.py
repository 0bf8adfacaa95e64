"""Command-line interface for the F4 Chevalley-group toolkit.

One binary with subcommands::

    print-roots               the 48 roots with coordinates and decompositions
    print-structure-constants the nonzero bracket constants N(a, b)
    exp                       one-parameter root element as a matrix document
    mul                       product of two matrix documents
    inv                       inverse of a matrix document
    decompose                 unit-scalar / torus / unipotent coordinates
    generate-units            matrix-unit generation summary or one expression
    rigidity-kernel           kernel dimension of the conjugation-rigidity system
    check-standard            verify images against a standard automorphism
    verify-paper              run the full catalogued verification suite

Matrix and coordinate documents are JSON.  Exit status: 0 on success, 1 when
a requested check fails, 2 for usage errors.  All table printers emit rows in
a fixed deterministic order, and every random draw is controlled by ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import roots
from .algebra import get_algebra
from .automorphisms import (
    check_standard_on_generators,
    parse_ring_auto,
)
from .decomposition import NotInCoset, coordinates_to_document, recover
from .group import (
    GroupMatrix,
    matrix_from_document,
    matrix_to_document,
)
from .harness import report_format, run_all
from .rigidity import kernel_report
from .rings import NotInvertible, parse_ring_descriptor

_SURVIVOR_NOTE = (
    "note: over F_3 the determining-position list has a documented"
    " one-dimensional kernel spanned by the short-root direction X[+19];"
    " see the verification-suite check rigidity-kernel-p3"
)


class _UsageError(Exception):
    """Bad arguments detected after argparse (mismatched rings, bad files)."""


def _parse_ring(descriptor: str):
    try:
        return parse_ring_descriptor(descriptor)
    except ValueError as exc:
        raise _UsageError(f"bad ring descriptor {descriptor!r}: {exc}") from exc


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix(path: str) -> GroupMatrix:
    doc = _load_json(path)
    try:
        return matrix_from_document(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"{path} is not a matrix document: {exc}") from exc


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


# ---------------------------------------------------------------------------
# table printers


def _cmd_print_roots(args: argparse.Namespace) -> int:
    for alpha in roots.ALL_ROOTS:
        coords = ", ".join(str(c) for c in roots.root_coords(alpha))
        decomp = ", ".join(f"{n:d}" for n in roots.root_decomp(alpha))
        length = "long" if roots.is_long(alpha) else "short"
        print(f"{alpha:+d}\t({coords})\t{length}\t({decomp})")
    return 0


def _cmd_print_structure_constants(args: argparse.Namespace) -> int:
    alg = get_algebra()
    for alpha in sorted(roots.ALL_ROOTS):
        for beta in sorted(roots.ALL_ROOTS):
            total = roots.root_sum(alpha, beta)
            if total is None:
                continue
            n_val = alg.structure_constant(alpha, beta)
            print(f"{alpha:+d}\t{beta:+d}\t{n_val:+d}")
    return 0


# ---------------------------------------------------------------------------
# matrix arithmetic


def _cmd_exp(args: argparse.Namespace) -> int:
    ring = _parse_ring(args.ring)
    if args.root not in roots.ALL_ROOTS:
        raise _UsageError(f"--root must be a nonzero index in -24..24, got {args.root}")
    try:
        param = ring.from_text(args.t)
    except ValueError as exc:
        raise _UsageError(f"bad element text {args.t!r} for ring {args.ring}: {exc}") from exc
    from .group import evaluate_word

    matrix = evaluate_word(ring, [("x", args.root, param)])
    _print_json(matrix_to_document(matrix))
    return 0


def _cmd_mul(args: argparse.Namespace) -> int:
    left = _load_matrix(args.a)
    right = _load_matrix(args.b)
    if left.ring.descriptor != right.ring.descriptor:
        raise _UsageError(
            f"ring mismatch: {args.a} uses {left.ring.descriptor},"
            f" {args.b} uses {right.ring.descriptor}"
        )
    ring = left.ring
    product = GroupMatrix(ring, ring.mat_mul(left.entries, right.entries))
    _print_json(matrix_to_document(product))
    return 0


def _cmd_inv(args: argparse.Namespace) -> int:
    matrix = _load_matrix(args.infile)
    ring = matrix.ring
    try:
        inverse = GroupMatrix(ring, ring.mat_inv(matrix.entries))
    except NotInvertible as exc:
        print(f"matrix is not invertible: {exc}", file=sys.stderr)
        return 1
    _print_json(matrix_to_document(inverse))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    matrix = _load_matrix(args.infile)
    try:
        coords = recover(matrix)
    except NotInCoset as exc:
        diagnosis: dict = {"error": "not-in-coset", "message": str(exc)}
        if exc.position is not None:
            diagnosis["position"] = list(exc.position)
        _print_json(diagnosis)
        return 1
    _print_json(coordinates_to_document(coords))
    return 0


# ---------------------------------------------------------------------------
# generation, rigidity, automorphisms


def _cmd_generate_units(args: argparse.Namespace) -> int:
    from .matrix_units import generate_unit, span_check

    if args.emit is not None:
        i, j = args.emit
        if not (1 <= i <= roots.DIM and 1 <= j <= roots.DIM):
            raise _UsageError(f"--emit indices must lie in 1..{roots.DIM}, got {i} {j}")
        print(generate_unit(i, j).render())
        return 0
    ring = _parse_ring(args.ring)
    _print_json(span_check(ring))
    return 0


def _cmd_rigidity_kernel(args: argparse.Namespace) -> int:
    try:
        report = kernel_report(args.p)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(f"prime: {report['p']}")
    print(f"unknowns: {report['unknowns']}")
    print(f"equations: {report['equations']}")
    print(f"kernel dimension: {report['dimension']}")
    print(f"expected: {report['expected']}")
    if report["matches_expected"]:
        print("result: pass")
        return 0
    print("result: fail")
    if report["survivor"] is not None:
        print(f"{_SURVIVOR_NOTE} (direction: {report['survivor']})")
    return 1


def _cmd_check_standard(args: argparse.Namespace) -> int:
    conjugator = _load_matrix(args.conjugator)
    ring = conjugator.ring
    try:
        rho = parse_ring_auto(ring, args.rho)
    except ValueError as exc:
        raise _UsageError(f"bad --rho {args.rho!r}: {exc}") from exc
    images_doc = _load_json(args.images)
    if not isinstance(images_doc, dict):
        raise _UsageError(f"{args.images} must map generator labels to matrix documents")
    images = {}
    for label, doc in images_doc.items():
        try:
            images[label] = matrix_from_document(doc, ring=ring)
        except (KeyError, TypeError, ValueError) as exc:
            raise _UsageError(f"image {label!r} is not a matrix document: {exc}") from exc
    try:
        verified = check_standard_on_generators(images, conjugator, rho)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(f"verified: {'true' if verified else 'false'}")
    return 0 if verified else 1


# ---------------------------------------------------------------------------
# full verification suite


def _render_figures(directory: str, results, ring) -> list[str]:
    """Write the three deterministic report figures; return their paths."""
    import os

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    from .group import x_int
    from .matrix_units import cartan_projector_identities
    from .rigidity import GENERATOR_ROOTS

    os.makedirs(directory, exist_ok=True)
    paths = []

    # 1. support heatmap of the eight standard unipotent generators
    support = np.zeros((roots.DIM, roots.DIM), dtype=np.int64)
    eye = np.eye(roots.DIM, dtype=np.int64)
    for alpha in GENERATOR_ROOTS:
        support += np.abs(x_int(alpha, 1) - eye)
    fig, ax = plt.subplots(figsize=(7, 6))
    image = ax.imshow(support, cmap="viridis")
    ax.set_title("Support of the eight standard unipotent generators")
    ax.set_xlabel("column (basis position)")
    ax.set_ylabel("row (basis position)")
    fig.colorbar(image, ax=ax, label="summed |entry| away from the identity")
    path = os.path.join(directory, "generators.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    # 2. projector identity outcomes
    report = cartan_projector_identities()
    names = [check.name for check in report.checks]
    holds = [1 if check.holds else 0 for check in report.checks]
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(names) + 1.5))
    colors = ["#2a9d8f" if value else "#e76f51" for value in holds]
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xticks([])
    ax.invert_yaxis()
    ax.set_title("Cartan projector identities (green = holds exactly)")
    path = os.path.join(directory, "projectors.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    # 3. check-status summary bar chart
    counts = {"pass": 0, "reported": 0, "fail": 0}
    for result in results:
        counts[result.status] += 1
    fig, ax = plt.subplots(figsize=(5, 4))
    labels = list(counts)
    values = [counts[k] for k in labels]
    bars = ax.bar(labels, values, color=["#2a9d8f", "#e9c46a", "#e76f51"])
    ax.bar_label(bars)
    ax.set_ylabel("checks")
    ax.set_title(f"Verification suite over {ring.descriptor}")
    path = os.path.join(directory, "checks.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)
    return paths


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    ring = _parse_ring(args.ring)
    results = run_all(ring, seed=args.seed)
    width = max(len(result.check) for result in results)
    for result in results:
        print(f"{result.status:<8} {result.check:<{width}} {result.detail}")
    report = report_format(results)
    print(f"summary: {json.dumps(report['summary'])}")
    if args.json is not None:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
        print(f"report written to {args.json}", file=sys.stderr)
    if args.figures is not None:
        try:
            paths = _render_figures(args.figures, results, ring)
        except ImportError as exc:
            raise _UsageError(
                f"--figures needs matplotlib (install the 'plots' extra): {exc}"
            ) from exc
        for path in paths:
            print(f"figure written to {path}", file=sys.stderr)
    return 0 if report["summary"]["fail"] == 0 else 1


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevf4",
        description="Exact-arithmetic F4 Chevalley group over local rings with 1/2.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    p = sub.add_parser("print-roots", help="list the 48 roots in table order")
    p.set_defaults(func=_cmd_print_roots)

    p = sub.add_parser(
        "print-structure-constants",
        help="list the nonzero bracket constants N(a, b), sorted",
    )
    p.set_defaults(func=_cmd_print_structure_constants)

    p = sub.add_parser("exp", help="one-parameter root element as a matrix document")
    p.add_argument("--root", type=int, required=True, help="signed root index in -24..24")
    p.add_argument("--t", required=True, help="ring element in text form")
    p.add_argument("--ring", required=True, help="ring descriptor, e.g. zmod:27")
    p.set_defaults(func=_cmd_exp)

    p = sub.add_parser("mul", help="multiply two matrix documents")
    p.add_argument("--a", required=True, help="left factor (JSON matrix document)")
    p.add_argument("--b", required=True, help="right factor (JSON matrix document)")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("inv", help="invert a matrix document")
    p.add_argument("--in", dest="infile", required=True, help="JSON matrix document")
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser(
        "decompose",
        help="recover unit-scalar / torus / unipotent coordinates from a matrix",
    )
    p.add_argument("--in", dest="infile", required=True, help="JSON matrix document")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser(
        "generate-units",
        help="matrix-unit span summary, or one generating expression with --emit",
    )
    p.add_argument("--ring", default="zmod:27", help="ring descriptor (default zmod:27)")
    p.add_argument(
        "--emit",
        nargs=2,
        type=int,
        metavar=("I", "J"),
        help="print the expression tree for matrix unit (I, J), 1-based",
    )
    p.set_defaults(func=_cmd_generate_units)

    p = sub.add_parser(
        "rigidity-kernel",
        help="kernel dimension of the generator-conjugation linear system",
    )
    p.add_argument("--p", type=int, required=True, help="odd prime residue characteristic")
    p.set_defaults(func=_cmd_rigidity_kernel)

    p = sub.add_parser(
        "check-standard",
        help="verify generator images against a conjugation-and-ring-map candidate",
    )
    p.add_argument(
        "--images",
        required=True,
        help="JSON file mapping generator labels (x[+1] ... x[-4]) to matrix documents",
    )
    p.add_argument("--C", dest="conjugator", required=True, help="conjugating matrix document")
    p.add_argument("--rho", default="id", help="ring map: 'id' or 'eps:<element>' (default id)")
    p.set_defaults(func=_cmd_check_standard)

    p = sub.add_parser(
        "verify-paper",
        help="run the full catalogued verification suite and report each check",
    )
    p.add_argument("--ring", default="zmod:27", help="ring descriptor (default zmod:27)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    p.add_argument("--json", default=None, help="also write the full report as JSON here")
    p.add_argument(
        "--figures",
        default=None,
        metavar="DIR",
        help="also render the three report figures into DIR (needs matplotlib)",
    )
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
