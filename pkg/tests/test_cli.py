import json

import pytest

from mutvis import cli, petersen_graph
from mutvis.documents import parse_edge_list, serialize_edge_list
from mutvis.errors import EdgeListParseError
from mutvis.verify import CriterionResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_edge_list_roundtrip():
    g = petersen_graph().graph
    text = serialize_edge_list(g, comments=["petersen"])
    clone = parse_edge_list(text)
    assert clone.edges == g.edges
    assert clone.n == g.n


@pytest.mark.parametrize(
    "document",
    [
        "",
        "3\n0 1\n1 2\n",  # header not 'n m'
        "3 2\n0 1\n",  # too few edge lines
        "3 1\n0 1\n1 2\n",  # too many edge lines
        "3 2\n0 1\n2 1\n",  # u >= v
        "3 2\n0 1\n0 3\n",  # out of range
        "4 2\n0 1\n2 3\n",  # disconnected
        "3 2\n0 1\n0 1\n",  # duplicate
        "x y\n",  # non-integer header
    ],
)
def test_edge_list_parse_errors(document):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(document)


def test_edge_list_comments_are_ignored():
    g = parse_edge_list("# hello\n3 2\n# mid\n0 1\n1 2\n")
    assert g.n == 3 and g.m == 2


def test_poly_command_text(capsys):
    code, out, _ = run_cli(
        capsys, "poly", "--family", "petersen", "--variant", "outer"
    )
    assert code == 0
    assert "coefficients: 1 10 30 30 5" in out
    assert "provenance: exhaustive" in out


def test_poly_command_structured(capsys):
    code, out, _ = run_cli(
        capsys,
        "poly",
        "--family",
        "path",
        "--params",
        "5",
        "--variant",
        "dual",
        "--output",
        "structured",
    )
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == ["1", "2", "3"]
    assert data["kind"] == "polynomial"
    assert data["variant"] == "dual"


def test_spectrum_command(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--family", "g_n", "--params", "2")
    assert code == 0
    assert "coefficients: 1 0 4" in out
    code, out, _ = run_cli(capsys, "spectrum", "--family", "cycle", "--params", "8")
    assert code == 0
    assert "coefficients: 1\n" in out


def test_spectrum_lemma_assisted_flag(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectrum",
        "--family",
        "f_t",
        "--params",
        "2,0",
        "--lemma-assisted",
    )
    assert code == 0
    assert "coefficients: 1 0 1" in out
    assert "provenance: lemma-assisted" in out


def test_check_command(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--family", "cycle", "--params", "6",
        "--variant", "dual", "--set", "0,1",
    )
    assert code == 0 and "qualifies: True" in out
    code, out, _ = run_cli(
        capsys, "check", "--family", "cycle", "--params", "7",
        "--variant", "total", "--set", "0,1",
    )
    assert code == 0 and "qualifies: False" in out
    assert "fast-path: False" in out and "naive: False" in out
    code, out, _ = run_cli(
        capsys, "check", "--family", "petersen", "--variant", "mv", "--set", "",
    )
    assert code == 0 and "qualifies: True" in out


def test_analyze_command(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family", "petersen")
    assert code == 0
    assert "geodetic: True" in out
    assert "total-visibility-number: 0" in out
    code, out, _ = run_cli(capsys, "analyze", "--family", "path", "--params", "6")
    assert code == 0
    assert "simplicial: 0 5" in out and "bypass: 0 5" in out


def test_construct_and_reload(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "construct", "--family", "g_n", "--params", "2")
    assert code == 0
    assert "# name x1=2" in out
    path = tmp_path / "g2.edges"
    path.write_text(out)
    code, out_file, _ = run_cli(
        capsys, "spectrum", "--input", str(path), "--output", "structured"
    )
    assert code == 0
    code2, out_family, _ = run_cli(
        capsys, "spectrum", "--family", "g_n", "--params", "2", "--output", "structured"
    )
    file_data, family_data = json.loads(out_file), json.loads(out_family)
    assert file_data["coefficients"] == family_data["coefficients"]
    assert file_data["degree"] == family_data["degree"]


def test_poly_on_tiny_edge_list_file(tmp_path, capsys):
    path = tmp_path / "k2.edges"
    path.write_text("2 1\n0 1\n")
    code, out, _ = run_cli(
        capsys, "poly", "--input", str(path), "--variant", "mv"
    )
    assert code == 0
    assert "coefficients: 1 2 1" in out
    assert "input: file:sha256:" in out


def test_exit_code_for_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 1\n2 1\n")
    code, _, err = run_cli(capsys, "analyze", "--input", str(bad))
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "analyze", "--input", str(tmp_path / "nope"))
    assert code == 2
    code, _, err = run_cli(capsys, "poly", "--variant", "mv")
    assert code == 2  # no graph source
    code, _, err = run_cli(
        capsys, "poly", "--family", "path", "--params", "x", "--variant", "mv"
    )
    assert code == 2


def test_exit_code_for_resource_limits(capsys):
    code, _, err = run_cli(
        capsys, "poly", "--family", "path", "--params", "18", "--variant", "mv"
    )
    assert code == 3
    assert "lemma-assisted" in err  # the hint


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["poly", "--family", "path", "--params", "5"])  # missing --variant
    assert info.value.code == 2


def test_verify_command_reports_and_exit_codes(monkeypatch, capsys):
    from mutvis import verify as verification

    def fake_run_all(limits):
        return [
            CriterionResult(1, "path-polynomials", "PASS", 0.1),
            CriterionResult(2, "balanced-bipartite", "SKIPPED", 0.0, "skipped: K44"),
        ]

    monkeypatch.setattr(verification, "run_all", fake_run_all)
    code, out, _ = run_cli(capsys, "verify", "--max-n", "6")
    assert code == 0
    assert "1 passed, 1 skipped, 0 failed" in out

    def failing_run_all(limits):
        return [CriterionResult(4, "cycle-spectra", "FAIL", 0.1, "C6 mismatch")]

    monkeypatch.setattr(verification, "run_all", failing_run_all)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    assert "FAIL" in out


def test_broken_dual_predicate_fails_verification(monkeypatch, capsys):
    # fault injection: a dual search that ignores the complement pairs must
    # be caught by the cycle-spectrum criterion and exit nonzero
    from mutvis import enumeration
    from mutvis import verify as verification

    monkeypatch.setattr(enumeration, "_OUT_ONLY", (False, False, False))
    result = verification.run_criterion(4)
    assert result.status == "FAIL"
    assert "C" in result.detail
    monkeypatch.setattr(verification, "run_all", lambda limits: [result])
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
