import json

import pytest

from nsdeg import NumericalSemigroup, classify
from nsdeg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "5,7,9", "--json")
    assert code == 0
    assert json.loads(out) == NumericalSemigroup([5, 7, 9]).to_dict()


def test_degrees_json_golden(capsys):
    code, out, _ = run(capsys, "degrees", "5,7,9", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == classify(NumericalSemigroup([5, 7, 9])).to_dict()
    assert payload["cdeg"] == 2 and payload["bideg"] == 1 and payload["tdeg"] == 1


def test_degrees_text(capsys):
    code, out, _ = run(capsys, "degrees", "2,3")
    assert code == 0
    assert "cdeg  0" in out and "gorenstein        True" in out


def test_ideal_ops(capsys):
    code, out, _ = run(capsys, "ideal", "5,7,9", "--ideal-gens", "5,7", "--json")
    assert code == 0
    assert json.loads(out) == {"min": 5, "conductor": 19,
                               "elements": [5, 7, 10, 12, 14, 15, 16, 17]}
    code, out, _ = run(capsys, "ideal", "5,7,9", "--ideal-gens", "5,7",
                       "--op", "bidual", "--json")
    assert json.loads(out)["elements"] == [5, 7, 10, 12]
    code, out, _ = run(capsys, "ideal", "5,7,9", "--ideal-gens", "0",
                       "--op", "colon", "--rhs", "5,7", "--json")
    assert json.loads(out)["elements"] == [0, 2, 5, 7]


def test_ideal_colon_needs_rhs(capsys):
    code, _, err = run(capsys, "ideal", "5,7,9", "--ideal-gens", "5,7",
                       "--op", "colon")
    assert code == 1
    assert "--rhs" in err


def test_mm_text(capsys):
    code, out, _ = run(capsys, "mm", "5,7,9")
    assert code == 0
    assert "A = <5,7,9,11,13>" in out
    assert "formula cdeg+e0-2r = 3" in out
    assert "[PASS]" in out
    assert "lambda(A/mC) = 7" in out


def test_mm_iterate(capsys):
    code, out, _ = run(capsys, "mm", "5,7,9", "--iterate", "5", "--json")
    steps = json.loads(out)["steps"]
    # the tower collapses: <5,7,9> -> <5,7,9,11,13> -> <2,5> -> <2,3> -> N
    assert [s["mm_gens"] for s in steps] == [
        [5, 7, 9, 11, 13], [2, 5], [2, 3], [1]]
    assert all(s["formula_ok"] and s["mc_canonical"] for s in steps)


def test_herzog(capsys):
    code, out, _ = run(capsys, "herzog", "5,7,9", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["cdeg"] == 2 and payload["bideg"] == 1
    assert len(payload["orderings"]) == 6


def test_herzog_rejects_symmetric(capsys):
    code, _, err = run(capsys, "herzog", "4,5,6")
    assert code == 1
    assert "symmetric" in err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "5,7,9", "--nmax", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classes"] == [{
        "ideal": {"min": 0, "conductor": 14,
                  "elements": [0, 2, 5, 7, 9, 10, 11, 12]},
        "n": 1, "irreducible": False}]


def test_roots_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("NSDEG_BUDGET", "3")
    code, _, err = run(capsys, "roots", "5,7,9")
    assert code == 4
    assert "budget" in err


def test_survey(tmp_path, capsys):
    out = tmp_path / "s.jsonl"
    code, text, _ = run(capsys, "survey", "--max-genus", "6",
                        "--out", str(out))
    assert code == 0
    assert "50 semigroups" in text
    assert len(out.read_text().splitlines()) == 50


def test_survey_checks_subset(tmp_path, capsys):
    code, text, _ = run(capsys, "survey", "--max-genus", "4",
                        "--checks", "bideg_eq_tdeg,cdeg_ge_bideg")
    assert code == 0
    assert "conjecture violations: 0" in text


def test_survey_json_summary(capsys):
    code, out, _ = run(capsys, "survey", "--max-genus", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["records"] == 15 and payload["violations"] == 0


def test_internal_invariant_exit_code(capsys, monkeypatch):
    from nsdeg import InternalInvariantViolation
    import nsdeg.cli as cli_mod

    def boom(_):
        raise InternalInvariantViolation("forced for the exit-code contract")

    monkeypatch.setattr(cli_mod, "classify", boom)
    code, _, err = run(capsys, "degrees", "5,7,9")
    assert code == 3
    assert "invariant" in err


def test_survey_bad_check_name(capsys):
    code, _, err = run(capsys, "survey", "--max-genus", "3",
                       "--checks", "nonsense")
    assert code == 1
    assert "nonsense" in err


def test_invalid_semigroup_exit_code(capsys):
    code, _, err = run(capsys, "degrees", "2,4")
    assert code == 2
    assert "gcd" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "degrees", "2,x")
    assert code == 1
    code, _, _ = run(capsys)
    assert code == 1
    code, _, _ = run(capsys, "no-such-command")
    assert code == 1
