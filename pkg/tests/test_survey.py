import filecmp
import json

import pytest

import oracles
from nsdeg import (InternalInvariantViolation, NumericalSemigroup,
                   SurveyConfig, enumerate_by_genus, format_summary,
                   genus_counts, survey_run, tree_children, verify_record)
from nsdeg.survey import ALL_CHECKS


def test_tree_children_of_full_semigroup():
    kids = tree_children(NumericalSemigroup([1]))
    assert kids == [NumericalSemigroup([2, 3])]


def test_tree_children_23():
    kids = tree_children(NumericalSemigroup([2, 3]))
    assert kids == [NumericalSemigroup([3, 4, 5]), NumericalSemigroup([2, 5])]


def test_tree_children_345():
    kids = tree_children(NumericalSemigroup([3, 4, 5]))
    assert kids == [NumericalSemigroup([4, 5, 6, 7]),
                    NumericalSemigroup([3, 5, 7]),
                    NumericalSemigroup([3, 4])]


def test_tree_children_genus_increments():
    for H in enumerate_by_genus(6):
        for child in tree_children(H):
            assert child.genus == H.genus + 1


def test_genus_counts_match_gapset_oracle():
    assert oracles.genus_counts_by_gapsets(7) == [1, 1, 2, 4, 7, 12, 23, 39]
    assert genus_counts(7) == [1, 1, 2, 4, 7, 12, 23, 39]


def test_genus_counts_frozen_through_8():
    assert genus_counts(8) == [1, 1, 2, 4, 7, 12, 23, 39, 67]


def test_enumeration_is_duplicate_free():
    seen = list(enumerate_by_genus(7))
    assert len(seen) == len(set(seen)) == 89


def test_verify_record_579():
    rec = verify_record(NumericalSemigroup([5, 7, 9]))
    assert all(v is True for v in rec.checks.values()), rec.checks
    d = rec.to_dict()
    assert d["cdeg"] == 2 and d["checks"]["herzog"] is True


def test_verify_record_full_semigroup():
    rec = verify_record(NumericalSemigroup([1]))
    assert rec.checks["tcdeg_formula"] == "na"
    assert rec.checks["nu_mm"] == "na"
    assert rec.checks["canonical_mm"] == "na"
    assert rec.checks["herzog"] == "na"
    assert rec.checks["bideg_eq_tdeg"] is True


def test_verify_record_345_exercises_almost_gorenstein():
    rec = verify_record(NumericalSemigroup([3, 4, 5]))
    assert rec.report.almost_gorenstein
    assert rec.checks["ag_implies_bideg1"] is True
    assert rec.checks["herzog"] is True


def test_verify_record_checks_subset():
    cfg = SurveyConfig(gmax=8, checks=("bideg_eq_tdeg",))
    rec = verify_record(NumericalSemigroup([5, 7, 9]), cfg)
    assert rec.checks["bideg_eq_tdeg"] is True
    assert rec.checks["cdeg_ge_bideg"] == "na"
    assert rec.checks["root_prop"] == "na"


def test_survey_run_gmax6(tmp_path):
    out = tmp_path / "s.jsonl"
    summary = survey_run(SurveyConfig(gmax=6, out=str(out)))
    assert summary.records == 50
    assert summary.per_genus == [1, 1, 2, 4, 7, 12, 23]
    assert summary.violations == 0
    assert summary.min_cdeg_minus_bideg == 0
    assert not (tmp_path / "s.jsonl.violations.jsonl").exists()
    lines = out.read_text().splitlines()
    assert len(lines) == 50
    first = json.loads(lines[0])
    assert first["gens"] == [1] and first["genus"] == 0
    assert list(first) == ["gens", "type", "multiplicity", "genus",
                           "frobenius", "shift", "cdeg", "bideg", "tdeg",
                           "gorenstein", "almost_gorenstein",
                           "nearly_gorenstein", "goto", "checks"]
    assert list(first["checks"]) == list(ALL_CHECKS)
    # records are sorted by (genus, gens)
    keys = [(r["genus"], r["gens"]) for r in map(json.loads, lines)]
    assert keys == sorted(keys)


def test_survey_run_gmax0():
    summary = survey_run(SurveyConfig(gmax=0))
    assert summary.records == 1
    assert summary.rows[0]["gens"] == [1]


def test_survey_deterministic_across_workers(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    survey_run(SurveyConfig(gmax=9, workers=1, out=str(a)))
    survey_run(SurveyConfig(gmax=9, workers=3, out=str(b)))
    assert filecmp.cmp(a, b, shallow=False)


def test_survey_csv(tmp_path):
    out = tmp_path / "s.csv"
    survey_run(SurveyConfig(gmax=4, out=str(out), fmt="csv"))
    lines = out.read_text().splitlines()
    header = lines[0].split(",")
    assert header[:6] == ["gens", "type", "multiplicity", "genus",
                          "frobenius", "shift"]
    assert header[-len(ALL_CHECKS):] == list(ALL_CHECKS)
    assert len(lines) == 1 + 15
    assert lines[1].startswith('"1"') or lines[1].startswith("1,")


def test_survey_rejects_unknown_check():
    with pytest.raises(ValueError):
        SurveyConfig(gmax=3, checks=("no_such_check",))


def test_format_summary_mentions_caps():
    summary = survey_run(SurveyConfig(gmax=3))
    text = format_summary(summary)
    assert "root_genus_cap" in text and "root_nmax" in text
    assert "conjecture violations: 0" in text
