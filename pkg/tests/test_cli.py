"""Command-line contract: outputs, determinism, and exit codes."""

import json

from vctk.cli import cli_run

E8_WORD = "a7 a6 a5 a4 a3 a2 a1 b5 b4 b7 b6 b5 b7 b6 b5 b8 b7 b6 k2 k7 k8"


def run(capsys, *argv):
    code = cli_run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_convert_example(tmp_path, capsys):
    infile = tmp_path / "a2-S.json"
    infile.write_text('{"n": 2, "kind": "intersection", "entries": [[-2, 1], [1, -2]]}')
    code, out, _ = run(capsys, "convert", "--to", "seifert", "--in", str(infile))
    assert code == 0
    assert json.loads(out) == {"entries": [[1, 0], [-1, 1]], "kind": "seifert", "n": 2}


def test_convert_bare_matrix_needs_n(tmp_path, capsys):
    infile = tmp_path / "bare.json"
    infile.write_text("[[-2, 1], [1, -2]]")
    code, out, err = run(capsys, "convert", "--to", "monodromy", "--in", str(infile))
    assert code == 65
    code, out, _ = run(capsys, "convert", "--to", "monodromy", "--n", "2", "--in", str(infile))
    assert code == 0
    assert json.loads(out)["entries"] == [[-1, 1], [-1, 0]]


def test_moves_e8_reduction(capsys):
    code, out, _ = run(capsys, "moves", "--catalog", "E8:gabrielov", "--word", E8_WORD)
    assert code == 0
    gram = json.loads(out)["gram"]
    std = [[-2, 1, 0, 0, 0, 0, 0, 0], [1, -2, 1, 0, 0, 0, 0, 0], [0, 1, -2, 1, 0, 0, 0, 0],
           [0, 0, 1, -2, 1, 0, 0, 0], [0, 0, 0, 1, -2, 1, 0, 1], [0, 0, 0, 0, 1, -2, 1, 0],
           [0, 0, 0, 0, 0, 1, -2, 0], [0, 0, 0, 0, 1, 0, 0, -2]]
    assert gram == std


def test_convert_from_other_kinds(tmp_path, capsys):
    seifert = tmp_path / "L.json"
    seifert.write_text('{"n": 2, "kind": "seifert", "entries": [[1, 0], [-1, 1]]}')
    code, out, _ = run(capsys, "convert", "--to", "intersection", "--in", str(seifert))
    assert code == 0 and json.loads(out)["entries"] == [[-2, 1], [1, -2]]

    bare = tmp_path / "H.json"
    bare.write_text("[[-1, 1], [-1, 0]]")
    code, out, _ = run(capsys, "convert", "--to", "seifert", "--n", "2",
                       "--from", "monodromy", "--in", str(bare))
    assert code == 0 and json.loads(out)["entries"] == [[1, 0], [-1, 1]]


def test_verify_deterministic_and_green(capsys):
    code1, out1, _ = run(capsys, "verify", "slh", "--random", "40", "--seed", "42")
    code2, out2, _ = run(capsys, "verify", "slh", "--random", "40", "--seed", "42")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical under a fixed seed


def test_catalog_json_and_dot(capsys):
    code, out, _ = run(capsys, "catalog", "A2:pham", "--n", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["lattice"]["gram"] == [[2, 1], [1, 2]]

    code, out, _ = run(capsys, "catalog", "T(2,3,7)", "--dot")
    assert code == 0
    assert out.startswith("graph ")
    assert out.count("style=dashed") == 2  # the double dashed central edge


def test_orbit_command_and_diagram_emission(tmp_path, capsys):
    outdir = tmp_path / "diagrams"
    code, out, _ = run(capsys, "orbit", "--catalog", "A2", "--budget", "100",
                       "--emit-diagrams", str(outdir), "--stats")
    assert code == 0
    payload = json.loads(out)
    assert payload["basis_count"] == 12
    assert payload["complete"] is True
    assert len(list(outdir.glob("*.dot"))) == payload["diagram_count"] == 2

    code, out, _ = run(capsys, "orbit", "--catalog", "E8:gabrielov", "--budget", "50")
    assert code == 2  # budget exceeded
    assert json.loads(out)["complete"] is False


def test_ll_degree_and_constants(capsys):
    code, out, _ = run(capsys, "ll-degree", "E8")
    assert code == 0 and json.loads(out)["degree"] == 37968750
    code, out, _ = run(capsys, "constant", "D_count:E8")
    assert code == 0 and json.loads(out)["value"] == 324000000


def test_orbit_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("VCTK_BUDGET", "50")
    code, out, _ = run(capsys, "orbit", "--catalog", "E8:gabrielov")
    assert code == 2
    assert json.loads(out)["budget"] == 50


def test_exit_codes(capsys, tmp_path):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 64  # usage
    code, _, _ = run(capsys, "catalog", "Z9")
    assert code == 65  # bad input data
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "gram": [[-2, 1], [0, -2]]}')
    code, _, _ = run(capsys, "moves", "--basis", str(bad), "--word", "a1")
    assert code == 65
    code, _, _ = run(capsys, "moves", "--catalog", "A2", "--word", "a7")
    assert code == 65  # move index out of range
