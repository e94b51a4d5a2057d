import json

import pytest

from eckardt import cli
from eckardt.cli import (
    EXIT_INCONSISTENT,
    EXIT_INPUT,
    EXIT_NO_CONSENSUS,
    EXIT_OK,
    EXIT_RESOURCE,
    RunConfig,
    dumps,
    main,
    run,
)

SINGULAR = "x0*x1*x2 + x3^3 + x4^3"


def _json(capsys, argv):
    status = main(argv + ["--json", "-"])
    out = capsys.readouterr().out
    return status, json.loads(out), out


def test_check_smooth_builtin(capsys):
    status, doc, _ = _json(capsys, ["check", "--builtin", "fermat"])
    assert status == EXIT_OK
    assert doc["report"]["smoothness"]["verdict"] == "smooth-certified"
    assert doc["report"]["input"]["builtin"] == "fermat"


def test_check_singular_is_not_an_error(capsys):
    status, doc, _ = _json(capsys, ["check", SINGULAR])
    assert status == EXIT_OK
    s = doc["report"]["smoothness"]
    assert s["verdict"] == "singular" and s["rational_singular_point"] == "(1:0:0:0:0)"


def test_report_on_singular_cubic_is_input_error(capsys):
    assert main(["report", SINGULAR]) == EXIT_INPUT
    assert "singular" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["eckardt", "x0^2"],
        ["eckardt", "x0^3 + y^3"],
        ["eckardt", "--builtin", "nope"],
        ["eckardt", "--builtin", "x1", "--primes", "10"],
        ["eckardt", "--builtin", "x1", "--primes", "32003,32003"],
        ["eckardt"],
        ["elliptic", "--builtin", "x1", "--point", "1:0:0:0:0"],
        ["elliptic", "--builtin", "x1", "--point", "1:2:3"],
    ],
)
def test_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_cubic_from_file(tmp_path, capsys):
    path = tmp_path / "cubic.txt"
    path.write_text("# a cubic with one Eckardt point\nx0^2*x2 + x2^2*x4 + x1^2*x3 + x3^2*x0 + x4^3\n")
    status, doc, _ = _json(capsys, ["eckardt", str(path)])
    assert status == EXIT_OK
    assert doc["report"]["input"]["builtin"] == "x1"
    assert doc["report"]["eckardt"]["total"] == 1


def test_no_consensus_exit_code(capsys):
    # every given prime divides the x4^3 coefficient, and escalation only reaches 5
    argv = ["eckardt", "--primes", "7,11,13", "x0^3 + x1^3 + x2^3 + x3^3 + 1001*x4^3"]
    assert main(argv) == EXIT_NO_CONSENSUS
    assert "no consensus" in capsys.readouterr().err


def test_resource_cap_exit_code(capsys):
    assert main(["eckardt", "--builtin", "fermat", "--max-basis", "5"]) == EXIT_RESOURCE
    assert "limit" in capsys.readouterr().err


def test_internal_inconsistency_exit_code(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise AssertionError("stratum counts do not add up")

    monkeypatch.setattr(cli, "eckardt_count", broken)
    assert main(["eckardt", "--builtin", "x1"]) == EXIT_INCONSISTENT
    assert "eckardt" in capsys.readouterr().err


def test_eckardt_rational_listing(capsys):
    status, doc, _ = _json(capsys, ["eckardt", "--builtin", "canonero", "--list-rational"])
    e = doc["report"]["eckardt"]
    assert status == EXIT_OK
    assert e["total"] == 2 and e["unanimous"]
    assert sorted(e["rational_points"]) == ["(0:1:0:0:0)", "(1:0:0:0:0)"]
    assert doc["report"]["input"]["builtin"] == "x3"


def test_json_is_canonical(capsys):
    status, doc, out = _json(capsys, ["eckardt", "--builtin", "x1"])
    assert status == EXIT_OK
    assert out == dumps(doc)
    assert out.endswith("}\n")
    assert list(doc) == ["report", "timings"]
    assert list(doc["report"]) == sorted(doc["report"])


def test_runs_are_deterministic():
    config = RunConfig(command="report", source=None, builtin="x1", chart_only=True)
    _, a = run(config)
    _, b = run(config)
    assert dumps(a["report"]) == dumps(b["report"])


def test_klein_report_is_all_zero(capsys):
    status, doc, _ = _json(capsys, ["report", "--builtin", "klein"])
    body = doc["report"]
    assert status == EXIT_OK
    assert body["eckardt"]["total"] == 0 and body["eckardt"]["strata"] == [0] * 5
    assert body["triple_lines"]["total"] == 0
    assert body["elliptic"]["curves"] == []
    assert all(row["match"] for row in body["comparison"])


def test_elliptic_at_point(capsys):
    status, doc, _ = _json(capsys, ["elliptic", "--builtin", "x1", "--point", "0:1:0:0:0"])
    (curve,) = doc["report"]["elliptic"]["curves"]
    assert status == EXIT_OK
    assert curve["plane_cubic"] == "x2^2*x3 + x3^2*x4 + x4^3"
    assert curve["inflection"]["distinct"] == 9


def test_triple_lines_per_cell(capsys):
    status, doc, _ = _json(capsys, ["triple-lines", "--builtin", "x7", "--per-cell"])
    t = doc["report"]["triple_lines"]
    assert status == EXIT_OK
    assert t["total"] == 2
    assert sum(t["per_cell"].values()) == 2
    assert {k: sum(v) for k, v in t["per_alpha_stratum"].items()} == t["per_cell"]


def test_generate_is_deterministic(capsys):
    s1, d1, _ = _json(capsys, ["generate", "--seed", "3"])
    s2, d2, _ = _json(capsys, ["generate", "--seed", "3"])
    g = d1["report"]["generate"]
    assert s1 == s2 == EXIT_OK
    assert g == d2["report"]["generate"]
    assert g["eckardt_total"] == 0 and g["witness_line_type"] == "triple"


def test_text_summary(capsys):
    assert main(["eckardt", "--builtin", "fermat"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Eckardt points: 30 strata [12, 9, 6, 3, 0]" in out


def test_json_written_to_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    assert main(["check", "--builtin", "klein", "--json", str(path)]) == EXIT_OK
    doc = json.loads(path.read_text())
    assert doc["report"]["command"] == "check"
    assert "smoothness" in doc["timings"]


def test_compare_skips_conventions_without_values():
    body = {
        "main_component": {
            "per_curve": [{"distinct": 8, "multiplicity": 8, "rational": 0}, {"distinct": 8, "multiplicity": 8, "rational": 2}],
            "pairwise_curves": {"0-1": {"distinct": 1, "multiplicity": 1, "rational": None}},
        }
    }
    rows = {r["quantity"]: r for r in cli.compare("x3", body)}
    assert rows["Ep.P"]["conventions"] == ["distinct", "multiplicity"]
    assert rows["Ep.Eq"]["conventions"] == ["distinct", "multiplicity"]


@pytest.mark.no_certify
def test_fano_main_section(capsys):
    status, doc, _ = _json(capsys, ["report", "--builtin", "x1", "--main-component"])
    body = doc["report"]
    m = body["main_component"]
    assert status == EXIT_OK
    assert m["per_curve"] == [{"distinct": 9, "multiplicity": 9, "rational": 1}]
    assert m["saturation_stable"] and m["contains_m"]
    assert all(row["match"] for row in body["comparison"])
