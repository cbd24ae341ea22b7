"""Command line contracts: exit codes, emitters, round trips."""

import json

from geographer import circle_bundle, linalg
from geographer.cli import EXIT_INADMISSIBLE, EXIT_OK, EXIT_OPEN, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_realize_json_document(capsys):
    code, out, _ = run(capsys, "realize", "0", "4", "4")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    assert doc["recipe"]["label"] == "B(3,3,3;1)"
    assert doc["certificate"]["degeneracy"] == 4
    assert all(check["passed"] for check in doc["checks"])
    assert doc["citations"]
    # emitted text parses back to the identical document
    assert json.loads(json.dumps(doc)) == doc


def test_realize_tsv_single_row(capsys):
    code, out, _ = run(capsys, "realize", "0", "4", "4", "--format", "tsv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("a\tb\tc\t")
    assert lines[1].split("\t")[4] == "B(3,3,3;1)"


def test_realize_inadmissible_exit(capsys):
    code, out, err = run(capsys, "realize", "8", "2", "0")
    assert code == EXIT_INADMISSIBLE
    assert "non-positive multiple of 8" in err
    assert out == ""


def test_realize_open_case(capsys):
    code, out, _ = run(capsys, "realize", "0", "3", "1", "--null")
    assert code == EXIT_OPEN
    doc = json.loads(out)
    assert doc["status"] == "open"
    assert "open" in doc["reason"]
    assert doc["notes"]


def test_realize_null_success(capsys):
    code, out, _ = run(capsys, "realize", "0", "3", "3", "--null")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["recipe"]["label"] == "B(2,2,2;1)"
    assert doc["triple"]["parameter"] == "nullity"


def test_invariants_bundle(capsys):
    code, out, _ = run(capsys, "invariants", "--bundle", "1", "1", "2", "1")
    assert code == EXIT_OK
    doc = json.loads(out)
    cert = doc["certificate"]
    assert (cert["b1"], cert["degeneracy"], cert["nullity"]) == (2, 2, 2)
    names = {check["name"] for check in doc["checks"]}
    assert "degeneracy_pairing_rank_matches_formula" in names


def test_invariants_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "invariants", "--bundle", "1", "0", "2", "0")
    assert code == EXIT_INADMISSIBLE
    assert "0 <= d <= k" in err
    code, _, err = run(capsys, "invariants", "--bundle", "0", "2", "2", "1")
    assert code == EXIT_INADMISSIBLE
    assert "tag 1" in err


def test_invariants_fibersum_and_dolgachev(capsys):
    code, out, _ = run(capsys, "invariants", "--fibersum", "2", "1", "2", "2")
    assert code == EXIT_OK
    cert = json.loads(out)["certificate"]
    assert (cert["sigma"], cert["b1"]) == (-16, 3)

    code, out, _ = run(capsys, "invariants", "--dolgachev", "2", "3", "2", "3", "3")
    assert code == EXIT_OK
    cert = json.loads(out)["certificate"]
    assert (cert["sigma"], cert["b1"], cert["degeneracy"]) == (-8, 4, 2)
    assert cert["K_dot_omega"] == "unknown"


def test_invariants_tag_two_with_low_weight(capsys):
    code, out, _ = run(capsys, "invariants", "--bundle", "0", "2", "2", "2")
    assert code == EXIT_OK
    assert json.loads(out)["certificate"]["degeneracy"] == 1


def test_enumerate_tsv_contract(capsys):
    code, out, _ = run(capsys, "enumerate", "--sigma-min", "-8", "--b1-max", "2")
    assert code == EXIT_OK
    assert "\r" not in out
    lines = out.split("\n")
    assert lines[-1] == ""  # single trailing newline
    rows = lines[:-1]
    assert len(rows) == 7  # header plus six triples
    header = rows[0]
    assert header.split("\t")[:6] == ["a", "b", "c", "kind", "recipe", "family"]
    assert sum(1 for row in rows if row == header) == 1
    parsed = [row.split("\t")[:3] for row in rows[1:]]
    assert parsed == [
        ["0", "2", "0"],
        ["0", "2", "2"],
        ["-8", "0", "0"],
        ["-8", "1", "1"],
        ["-8", "2", "0"],
        ["-8", "2", "2"],
    ]


def test_enumerate_empty_region_has_header_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--sigma-min", "0", "--b1-max", "0")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 1
    assert lines[0].split("\t")[0] == "a"


def test_enumerate_json_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--sigma-min", "-8", "--b1-max", "2",
                       "--format", "json")
    assert code == EXIT_OK
    docs = json.loads(out)
    assert len(docs) == 6
    assert json.loads(json.dumps(docs)) == docs


def test_enumerate_rejects_bad_region(capsys):
    code, _, err = run(capsys, "enumerate", "--sigma-min", "8", "--b1-max", "2")
    assert code == EXIT_INADMISSIBLE
    assert "sigma-min" in err


def test_verify_small_grid_passes(capsys):
    code, out, _ = run(capsys, "verify", "--grid-max", "1")
    assert code == EXIT_OK
    assert "RESULT: PASS" in out
    assert "cases:" in out


def test_verify_rejects_empty_grid(capsys):
    code, _, err = run(capsys, "verify", "--grid-max", "0")
    assert code == EXIT_INADMISSIBLE


def test_verify_full_grid_case_count(capsys):
    code, out, _ = run(capsys, "verify", "--grid-max", "8")
    assert code == EXIT_OK
    cases_line = next(line for line in out.splitlines() if line.startswith("cases:"))
    assert int(cases_line.split(":")[1]) >= 300
    assert "RESULT: PASS" in out


def test_realize_is_byte_identical_across_runs(capsys):
    first = run(capsys, "realize", "-24", "5", "3")
    second = run(capsys, "realize", "-24", "5", "3")
    assert first == second and first[0] == EXIT_OK


def test_verify_catches_injected_pairing_fault(capsys, monkeypatch):
    original = circle_bundle.lefschetz_pairing

    def corrupted(data, spec, invariant_basis=None, cup=None):
        q, labels = original(data, spec, invariant_basis=invariant_basis, cup=cup)
        return linalg.zeros(*q.shape), labels  # kill the pairing entirely

    monkeypatch.setattr(circle_bundle, "lefschetz_pairing", corrupted)
    code, out, _ = run(capsys, "verify", "--grid-max", "2")
    assert code == 1
    assert "RESULT: FAIL" in out
    assert "FAIL (d=" in out


def test_usage_errors_exit_64(capsys):
    assert run(capsys, )[0] == EXIT_USAGE
    assert run(capsys, "realize", "zero", "4", "4")[0] == EXIT_USAGE
    assert run(capsys, "no-such-command")[0] == EXIT_USAGE
    assert run(capsys, "realize", "0")[0] == EXIT_USAGE


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "doc.json"
    code, out, _ = run(capsys, "realize", "0", "2", "0", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["recipe"]["label"] == "B(0,0,2;0)"


def test_genus_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("GEOGRAPHER_GENUS_DEFAULT", "5")
    code, out, _ = run(capsys, "realize", "0", "2", "0")
    assert code == EXIT_OK
    assert json.loads(out)["recipe"]["g"] == 5
    # an explicit flag beats the environment
    code, out, _ = run(capsys, "realize", "0", "2", "0", "--genus", "6")
    assert json.loads(out)["recipe"]["g"] == 6


def test_genus_environment_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("GEOGRAPHER_GENUS_DEFAULT", "tall")
    code, _, err = run(capsys, "realize", "0", "2", "0")
    assert code == EXIT_INADMISSIBLE
    assert "GEOGRAPHER_GENUS_DEFAULT" in err
