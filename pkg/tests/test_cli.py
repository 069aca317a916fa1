"""Command-line surface: grammars, exit codes, JSON schema, determinism."""

import json

import pytest

from cuspgerms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    assert code == 0, err
    return json.loads(out)


# -- exit codes -----------------------------------------------------------------


def test_success_exit_code(capsys):
    code, out, _ = run(capsys, "semigroup", "info", "--p", "2", "--q", "3")
    assert code == 0
    assert "conductor" in out


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "semigroup", "info", "--p", "4", "--q", "6")
    assert code == 1
    assert out == ""
    assert "coprime" in err


def test_bad_germ_is_domain_error(capsys):
    code, _, err = run(capsys, "curve", "analyze", "--p", "2", "--q", "3",
                       "--germ", "t^5 + O(t^3)")
    assert code == 1
    assert "error" in err


def test_witness_out_of_range_is_domain_error(capsys):
    code, _, err = run(capsys, "rado", "witness", "--max-k", "5", "--n", "7")
    assert code == 1
    assert "maxK" in err


def test_usage_error_exit_code(capsys):
    for argv in (["bogus"], ["semigroup"], ["curve", "analyze", "--p", "2"],
                 ["semigroup", "info", "--p", "x", "--q", "3"]):
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        assert excinfo.value.code == 2
        capsys.readouterr()


# -- report schema ------------------------------------------------------------------


def test_report_envelope_fields(capsys):
    report = run_json(capsys, "semigroup", "info", "--p", "2", "--q", "3")
    assert set(report) == {"command", "inputs", "results", "findings"}
    assert report["command"] == "semigroup info"
    assert report["inputs"] == {"p": 2, "q": 3, "bound": 3}
    assert report["results"]["conductor"] == 2
    assert report["results"]["frobenius"] == 1
    assert report["results"]["membersUpToBound"] == [0, 2, 3]
    assert report["results"]["gapsUpToBound"] == [1]


def test_semigroup_bound_flag(capsys):
    report = run_json(capsys, "semigroup", "info", "--p", "3", "--q", "4", "--bound", "8")
    assert report["results"]["membersUpToBound"] == [0, 3, 4, 6, 7, 8]


def test_curve_analyze_report(capsys):
    report = run_json(capsys, "curve", "analyze", "--p", "3", "--q", "4")
    results = report["results"]
    assert results["curve"] == "gamma:3,4"
    assert results["germ"] == "t"
    assert results["decision"] == "CertainlyNo"
    assert results["witnessExponent"] == 1
    assert results["minPower"] == 3
    assert results["stablePower"] == 6
    assert results["orderOfFlatness"] == "1/3"
    assert results["coveringDegree"] == 3
    assert results["projectionAxis"] == "z2"
    assert results["whitneyCone"] == "z2"
    assert results["weierstrass"]["factored"] == "T^3 - z"
    assert results["weierstrass"]["annihilatesPullback"] is True
    assert results["unitOrderGerm"]["m"] == 1


def test_curve_analyze_with_germ(capsys):
    report = run_json(capsys, "curve", "analyze", "--p", "2", "--q", "3",
                      "--germ", "t^2 + 1/2*t^3 + O(t^9)")
    results = report["results"]
    assert results["decision"] == "CertainlyYes"
    assert results["witnessExponent"] is None
    assert results["minPower"] == 1
    assert results["weierstrass"] is None
    assert any("monomial" in f for f in report["findings"])


def test_unknown_decisions_reported_in_band(capsys):
    report = run_json(capsys, "curve", "analyze", "--p", "2", "--q", "3",
                      "--germ", "1 + O(t^1)")
    results = report["results"]
    assert results["decision"].startswith("Unknown(")
    assert results["minPower"] is None
    assert any("minPower" in f for f in report["findings"])


def test_curve_multiplier_report(capsys):
    report = run_json(capsys, "curve", "multiplier", "--p", "2", "--q", "3",
                      "--a", "1", "--b", "0")
    results = report["results"]
    assert results["floorCheck"] is True
    assert results["exactCheck"] is True
    assert results["monomialPullbackExponent"] == 3


def test_rado_witness_report(capsys):
    report = run_json(capsys, "rado", "witness", "--max-k", "12", "--n", "5")
    results = report["results"]
    assert results["witnessSite"] == 6
    assert results["curve"] == "gamma:6,7"
    assert results["decision"] == "CertainlyNo"
    assert results["witnessExponent"] == 5
    assert results["powerGerm"].startswith("t^5")


def test_rado_witness_at_scale(capsys):
    report = run_json(capsys, "rado", "witness", "--max-k", "101", "--n", "100")
    assert report["results"]["witnessSite"] == 101


def test_theorem1_bound_report(capsys):
    report = run_json(capsys, "theorem1", "bound", "--max-k", "12", "--region", "5")
    results = report["results"]
    assert results["nOmega"] == 20
    assert results["power"] == 20
    assert results["perSite"] == {"2": "CertainlyYes", "3": "CertainlyYes",
                                  "4": "CertainlyYes", "5": "CertainlyYes"}
    assert results["aggregate"] == "CertainlyYes"
    assert results["sharpness"]["power"] == 19
    assert results["sharpness"]["decision"] == "CertainlyNo"


def test_theorem1_bound_with_power(capsys):
    report = run_json(capsys, "theorem1", "bound", "--max-k", "12", "--region", "3",
                      "--n", "2")
    assert report["results"]["perSite"]["3"] == "CertainlyNo"
    assert report["results"]["aggregate"] == "CertainlyNo"


def test_nagata_demo_reports(capsys):
    inv = run_json(capsys, "nagata", "demo", "--g", "inv", "--max-pow", "4")
    rows = inv["results"]["powers"]
    assert [r["extends"] for r in rows] == [False, True, True, True]
    assert rows[1]["section"] == "(z^2) + eps*(2)"
    assert inv["findings"]

    exp = run_json(capsys, "nagata", "demo", "--g", "expinv", "--max-pow", "4")
    assert all(r["extends"] is False for r in exp["results"]["powers"])
    assert any("essential" in f for f in exp["findings"])


# -- determinism ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["semigroup", "info", "--p", "5", "--q", "7"],
        ["--json", "curve", "analyze", "--p", "3", "--q", "4"],
        ["rado", "witness", "--max-k", "12", "--n", "5"],
        ["--json", "theorem1", "bound", "--max-k", "12", "--region", "5"],
        ["nagata", "demo", "--g", "inv", "--max-pow", "6"],
    ],
)
def test_byte_identical_output(capsys, argv):
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    assert code1 == code2 == 0
    assert first == second
    assert first  # nonempty
