import csv
import io
import json
import subprocess
import sys

import pytest

from hurwitz_strata.cli import SCHEMA, main, run


def report(argv):
    code, text = run(argv)
    return code, json.loads(text)


def test_stratum_deg_caustic():
    code, rep = report(["stratum-deg", "--type", "caustic", "--kappa", "3,1"])
    assert code == 0
    assert rep["schema"] == SCHEMA
    assert rep["results"][0]["value"] == "3"
    assert rep["results"][0]["kappa"] == [3, 1]


def test_stratum_deg_warn_negative():
    code, rep = report(["stratum-deg", "--type", "maxwell", "--kappa", "2,2", "--warn-negative"])
    assert code == 0 and rep["results"][0]["value"] == "-3" and rep["warnings"]
    _, quiet = report(["stratum-deg", "--type", "maxwell", "--kappa", "2,2"])
    assert quiet["warnings"] == []


def test_compare_maxwell_discrepant():
    code, rep = report(["compare", "--family", "maxwell", "--kappa", "1,1,1,1"])
    assert code == 0
    row = rep["results"][0]
    assert (row["printed"], row["oracle"], row["status"]) == ("4", "12", "DISCREPANT")
    assert rep["status"] == "DISCREPANT"


def test_compare_caustic_agrees():
    _, rep = report(["compare", "--family", "caustic", "--kappa", "1,1,1,1,1"])
    row = rep["results"][0]
    assert row["printed"] == row["oracle"] == "1620" and row["status"] == "AGREE"


def test_verify_kazarian():
    code, rep = report(["verify", "--suite", "kazarian", "--max-m", "6"])
    assert code == 0 and rep["status"] == "PASS"
    assert len(rep["results"]) == 5 + 5


@pytest.mark.parametrize("suite", ["l42", "abel-set", "abel-classical", "coeff", "delta00"])
def test_verify_other_suites(suite):
    code, rep = report(["verify", "--suite", suite, "--max-m", "5"])
    assert code == 0 and rep["status"] == "PASS"


def test_verify_failure_exit_code(monkeypatch):
    from hurwitz_strata import cli

    def broken(max_m, seed):
        return [{"check": "x", "pass": False, "counterexample": {"t": [1]}}]

    monkeypatch.setitem(cli.SUITES, "coeff", (broken, 3))
    code, rep = report(["verify", "--suite", "coeff"])
    assert code == 3 and rep["status"] == "FAIL"
    assert rep["results"][0]["counterexample"] == {"t": [1]}


def test_psi_segre_delta_kl():
    assert report(["psi-integral", "--l", "1,1,0,0,0"])[1]["results"][0]["value"] == "2"
    seg = report(["segre-deg", "--kappa", "1,1,1,1", "--k", "1"])[1]["results"][0]
    assert seg["value"] == "8" and seg["agree"] is True
    assert report(["delta00", "--kappa", "2,2", "--method", "split"])[1]["results"][0]["value"] == "1"
    assert report(["delta00", "--kappa", "2,1"])[1]["results"][0]["value"] == "1"
    assert report(["kl-codim2", "--which", "1", "--n", "4"])[1]["results"][0]["value"] == "3/2"


def test_hurwitz_closed_modes():
    _, p = report(["hurwitz-closed", "--family", "caustic", "--kappa", "2,1", "--mode", "printed"])
    _, c = report(["hurwitz-closed", "--family", "caustic", "--kappa", "2,1", "--mode", "calibrated"])
    assert p["results"][0]["value"] == "1/6" and c["results"][0]["value"] == "1"
    assert p["inputs"]["mode"] == "printed"


def test_oracle_command():
    code, rep = report(["oracle", "--classes", "3,1;2,1,1;2,1,1;2,1,1;2,1,1"])
    assert code == 0
    assert rep["results"][0] == {"n": 4, "count_all": "864", "count_transitive": "648", "h": "27", "genus": 0}
    _, dfs = report(["oracle", "--classes", "3,1;2,1,1;2,1,1;2,1,1;2,1,1", "--method", "dfs"])
    assert dfs["results"] == rep["results"]


def test_specialize():
    code, rep = report(["specialize", "--range", "4..6"])
    assert code == 0 and rep["status"] == "PASS"
    assert len(rep["results"]) == 3 * 4


def test_sweep():
    code, rep = report(["sweep", "--family", "caustic", "--kappa-all-n", "5", "--oracle"])
    assert code == 0
    assert len(rep["results"]) == 3 + 5 + 7
    assert all(r["calibrated_status"] == "AGREE" for r in rep["results"])


def test_csv_output():
    code, text = run(["kl-codim2", "--which", "2", "--n", "5", "--csv"])
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and rows == [{"which": "2", "n": "5", "value": "24"}]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["bogus"], 1),
        (["kl-codim2", "--which", "4", "--n", "5"], 1),
        (["stratum-deg", "--type", "caustic", "--kappa", "1,0"], 1),
        (["stratum-deg", "--type", "maxwell", "--kappa", "2,1"], 2),
        (["psi-integral", "--l", "1,0,0"], 2),
        (["oracle", "--classes", "7;7", "--method", "dfs"], 2),
    ],
)
def test_error_exit_codes(argv, code):
    got, text = run(argv)
    assert got == code
    rep = json.loads(text)
    assert rep["status"] == "ERROR" and rep["error"]


def test_deterministic_output():
    argv = ["verify", "--suite", "kazarian", "--max-m", "5", "--seed", "7"]
    assert run(argv) == run(argv)


def test_main_prints(capsys):
    assert main(["kl-codim2", "--which", "3", "--n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["results"][0]["value"] == "1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hurwitz_strata", "stratum-deg", "--type", "caustic", "--kappa", "1^3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["value"] == "3"
