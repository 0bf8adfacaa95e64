"""Command-line interface: document round-trips, exit codes, and dispatch."""

from __future__ import annotations

import json

import pytest

from chevf4 import roots
from chevf4.cli import main
from chevf4.group import evaluate_word, matrix_from_document, matrix_to_document
from chevf4.harness import CheckResult
from chevf4.rings import parse_ring_descriptor


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# printers


def test_print_roots_is_deterministic(capsys):
    code, out, _ = run_cli(capsys, "print-roots")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 48
    assert lines[0].startswith("+1\t")
    code2, out2, _ = run_cli(capsys, "print-roots")
    assert code2 == 0 and out2 == out


def test_print_structure_constants_sorted(capsys):
    code, out, _ = run_cli(capsys, "print-structure-constants")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert len(rows) == 816
    keys = [(int(a), int(b)) for a, b, _ in rows]
    assert keys == sorted(keys)
    for a, b, n in rows:
        assert int(n) != 0 and abs(int(n)) <= 2


# ---------------------------------------------------------------------------
# matrix document plumbing


def test_exp_zero_parameter_is_identity_document(capsys):
    code, out, _ = run_cli(capsys, "exp", "--root", "1", "--t", "0", "--ring", "zmod:27")
    assert code == 0
    doc = json.loads(out)
    assert doc["ring"] == "zmod:27"
    for i, row in enumerate(doc["rows"]):
        for j, text in enumerate(row):
            assert text == ("1" if i == j else "0")


def test_exp_output_roundtrips(capsys):
    code, out, _ = run_cli(capsys, "exp", "--root", "-7", "--t", "13", "--ring", "zmod:27")
    assert code == 0
    doc = json.loads(out)
    ring = parse_ring_descriptor("zmod:27")
    parsed = matrix_from_document(doc)
    direct = evaluate_word(ring, [("x", -7, ring.elem(13))])
    assert ring.mat_eq(parsed.entries, direct.entries)


def test_exp_rejects_bad_root(capsys):
    code, _, err = run_cli(capsys, "exp", "--root", "25", "--t", "0", "--ring", "zmod:27")
    assert code == 2 and "root" in err


def test_exp_rejects_bad_ring(capsys):
    code, _, err = run_cli(capsys, "exp", "--root", "1", "--t", "0", "--ring", "zmod:4")
    assert code == 2 and "ring" in err


def test_mul_and_inv_roundtrip(tmp_path, capsys):
    ring = parse_ring_descriptor("field:5")
    a = evaluate_word(ring, [("x", 3, ring.elem(2))])
    b = evaluate_word(ring, [("w", 1, ring.one)])
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    path_a.write_text(json.dumps(matrix_to_document(a)))
    path_b.write_text(json.dumps(matrix_to_document(b)))

    code, out, _ = run_cli(capsys, "mul", "--a", str(path_a), "--b", str(path_b))
    assert code == 0
    product_doc = json.loads(out)
    product_path = tmp_path / "ab.json"
    product_path.write_text(out)

    code, out, _ = run_cli(capsys, "inv", "--in", str(product_path))
    assert code == 0
    inverse = matrix_from_document(json.loads(out))
    product = matrix_from_document(product_doc)
    assert ring.mat_eq(
        ring.mat_mul(product.entries, inverse.entries), ring.mat_eye(roots.DIM)
    )


def test_mul_rejects_ring_mismatch(tmp_path, capsys):
    ring_a = parse_ring_descriptor("zmod:27")
    ring_b = parse_ring_descriptor("field:5")
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    path_a.write_text(json.dumps(matrix_to_document(evaluate_word(ring_a, []))))
    path_b.write_text(json.dumps(matrix_to_document(evaluate_word(ring_b, []))))
    code, _, err = run_cli(capsys, "mul", "--a", str(path_a), "--b", str(path_b))
    assert code == 2 and "mismatch" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "inv", "--in", "/nonexistent/m.json")
    assert code == 2 and "cannot read" in err


def test_malformed_json_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "inv", "--in", str(bad))
    assert code == 2 and "JSON" in err


# ---------------------------------------------------------------------------
# decompose


def test_decompose_roundtrip(tmp_path, capsys):
    ring = parse_ring_descriptor("zmod:27")
    word = [("h", 2, ring.elem(4)), ("x", 5, ring.elem(3)), ("x", -9, ring.elem(6))]
    matrix = evaluate_word(ring, word)
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix_to_document(matrix)))
    code, out, _ = run_cli(capsys, "decompose", "--in", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["ring"] == "zmod:27"
    assert doc["lambda"] == "1"
    assert len(doc["s"]) == 4 and len(doc["t"]) == 24 and len(doc["u"]) == 24


def test_decompose_diagnoses_nonmember(tmp_path, capsys):
    ring = parse_ring_descriptor("zmod:27")
    doc = matrix_to_document(evaluate_word(ring, []))
    doc["rows"][0][10] = "1"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "decompose", "--in", str(path))
    assert code == 1
    diagnosis = json.loads(out)
    assert diagnosis["error"] == "not-in-coset"
    assert "position" in diagnosis


# ---------------------------------------------------------------------------
# generate-units


def test_generate_units_summary(capsys):
    code, out, _ = run_cli(capsys, "generate-units", "--ring", "field:3")
    assert code == 0
    stats = json.loads(out)
    assert stats["total"] == stats["verified"] == 2704
    assert stats["failures"] == []


def test_generate_units_emit(capsys):
    code, out, _ = run_cli(capsys, "generate-units", "--emit", "1", "2")
    assert code == 0
    assert "x[1](1)" in out or "w[" in out


def test_generate_units_emit_bad_indices(capsys):
    code, _, err = run_cli(capsys, "generate-units", "--emit", "0", "2")
    assert code == 2 and "indices" in err


# ---------------------------------------------------------------------------
# rigidity-kernel


def test_rigidity_kernel_rejects_bad_prime(capsys):
    code, _, err = run_cli(capsys, "rigidity-kernel", "--p", "4")
    assert code == 2 and "prime" in err


def test_rigidity_kernel_p3_reports_documented_failure(capsys):
    code, out, _ = run_cli(capsys, "rigidity-kernel", "--p", "3")
    assert code == 1
    assert "kernel dimension: 1" in out
    assert "result: fail" in out
    assert "X[+19]" in out


def test_rigidity_kernel_p5_passes(capsys):
    code, out, _ = run_cli(capsys, "rigidity-kernel", "--p", "5")
    assert code == 0
    assert "kernel dimension: 0" in out and "result: pass" in out


# ---------------------------------------------------------------------------
# check-standard


def test_check_standard_cli(tmp_path, capsys):
    from chevf4.automorphisms import inner_auto, standard_generators

    ring = parse_ring_descriptor("zmod:27")
    w2 = evaluate_word(ring, [("w", 2, ring.one)])
    gens = standard_generators(ring)
    images = {label: matrix_to_document(inner_auto(w2, m)) for label, m in gens.items()}
    images_path = tmp_path / "images.json"
    images_path.write_text(json.dumps(images))
    c_path = tmp_path / "C.json"
    c_path.write_text(json.dumps(matrix_to_document(w2)))

    code, out, _ = run_cli(
        capsys, "check-standard", "--images", str(images_path), "--C", str(c_path)
    )
    assert code == 0 and "verified: true" in out

    e_path = tmp_path / "E.json"
    ring_eye = evaluate_word(ring, [])
    e_path.write_text(json.dumps(matrix_to_document(ring_eye)))
    code, out, _ = run_cli(
        capsys, "check-standard", "--images", str(images_path), "--C", str(e_path)
    )
    assert code == 1 and "verified: false" in out


def test_check_standard_bad_rho(tmp_path, capsys):
    from chevf4.automorphisms import standard_generators

    ring = parse_ring_descriptor("zmod:27")
    gens = standard_generators(ring)
    images_path = tmp_path / "images.json"
    images_path.write_text(
        json.dumps({label: matrix_to_document(m) for label, m in gens.items()})
    )
    c_path = tmp_path / "C.json"
    c_path.write_text(json.dumps(matrix_to_document(evaluate_word(ring, []))))
    code, _, err = run_cli(
        capsys,
        "check-standard", "--images", str(images_path), "--C", str(c_path),
        "--rho", "eps:2",
    )
    assert code == 2 and "rho" in err


def test_check_standard_missing_label(tmp_path, capsys):
    from chevf4.automorphisms import standard_generators

    ring = parse_ring_descriptor("zmod:27")
    gens = standard_generators(ring)
    images = {label: matrix_to_document(m) for label, m in list(gens.items())[:-1]}
    images_path = tmp_path / "images.json"
    images_path.write_text(json.dumps(images))
    c_path = tmp_path / "C.json"
    c_path.write_text(json.dumps(matrix_to_document(evaluate_word(ring, []))))
    code, _, err = run_cli(
        capsys, "check-standard", "--images", str(images_path), "--C", str(c_path)
    )
    assert code == 2


# ---------------------------------------------------------------------------
# verify-paper dispatch (suite itself is covered by the harness tests)


def _stub_results():
    return [
        CheckResult(check="alpha", citation="derived", status="pass", detail="ok"),
        CheckResult(check="beta", citation="printed:some-table", status="reported", detail="dev"),
    ]


def test_verify_paper_exit_zero_without_failures(tmp_path, capsys, monkeypatch):
    import chevf4.cli as cli_mod

    monkeypatch.setattr(cli_mod, "run_all", lambda ring, seed: _stub_results())
    report_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify-paper", "--ring", "zmod:27", "--seed", "3",
        "--json", str(report_path),
    )
    assert code == 0
    assert "alpha" in out and "beta" in out and "summary:" in out
    report = json.loads(report_path.read_text())
    assert report["summary"] == {"total": 2, "pass": 1, "reported": 1, "fail": 0}


def test_verify_paper_exit_one_on_failure(capsys, monkeypatch):
    import chevf4.cli as cli_mod

    failing = _stub_results() + [
        CheckResult(check="gamma", citation="derived", status="fail", detail="broken")
    ]
    monkeypatch.setattr(cli_mod, "run_all", lambda ring, seed: failing)
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 1
    assert "gamma" in out


def test_verify_paper_renders_figures(tmp_path, capsys, monkeypatch):
    pytest.importorskip("matplotlib")
    import chevf4.cli as cli_mod

    monkeypatch.setattr(cli_mod, "run_all", lambda ring, seed: _stub_results())
    figures = tmp_path / "figs"
    code, _, err = run_cli(
        capsys, "verify-paper", "--figures", str(figures)
    )
    assert code == 0
    for name in ("generators.png", "projectors.png", "checks.png"):
        target = figures / name
        assert target.exists() and target.stat().st_size > 0
        assert f"figure written to {target}" in err


# ---------------------------------------------------------------------------
# usage errors


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["no-such-command"])
    assert excinfo.value.code == 2


def test_no_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
