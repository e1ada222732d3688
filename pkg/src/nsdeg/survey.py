"""Exhaustive verification over all numerical semigroups up to a genus bound.

Enumeration walks the semigroup tree rooted at the full semigroup: the
children of H are the sets H minus one minimal generator exceeding the
Frobenius number, which reach every semigroup of each genus exactly once.
Subtrees hanging below a fixed split depth can be handed to worker
processes; records are merge-sorted at the end, so output is byte-identical
for every worker count.

Every check named in a record encodes a theorem, except `cdeg_ge_bideg`,
which encodes the conjectured inequality cdeg >= bideg: a failing theorem raises
InternalInvariantViolation (a bug by definition), while a conjecture
violation is collected as a first-class counterexample artifact.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass, field
from itertools import islice

from .degrees import DegreeReport, cdeg, classify, embed_canonical
from .derived import herzog_all_orderings, mm_ring
from .errors import InternalInvariantViolation
from .relideal import (canonical_ideal, maximal_ideal, module_generators,
                       rebase)
from .roots import enumerate_ideals, rootset
from .semigroup import NumericalSemigroup, _mask

ALL_CHECKS = (
    "bideg_eq_tdeg",
    "cdeg_ge_bideg",
    "gor_iff_symmetric",
    "ag_implies_bideg1",
    "cdeg_ge_type_minus_1",
    "tcdeg_formula",
    "nu_mm",
    "canonical_mm",
    "duality_sample",
    "herzog",
    "root_prop",
)

CONJECTURE_CHECKS = ("cdeg_ge_bideg",)


@dataclass(frozen=True)
class SurveyConfig:
    gmax: int
    checks: tuple[str, ...] = ALL_CHECKS
    out: str | None = None
    fmt: str = "jsonl"
    workers: int = 1
    split_depth: int = 8
    duality_samples: int = 16
    root_genus_cap: int = 10
    root_nmax: int = 3
    node_budget: int = 10_000_000

    def __post_init__(self):
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.fmt not in ("jsonl", "csv"):
            raise ValueError(f"format must be jsonl or csv, got {self.fmt!r}")


@dataclass(frozen=True)
class SurveyRecord:
    report: DegreeReport
    checks: dict

    def to_dict(self) -> dict:
        d = self.report.to_dict()
        d["checks"] = dict(self.checks)
        return d


# -- the semigroup tree -----------------------------------------------------

def tree_children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """H minus one effective generator (> Frobenius), genus raised by one."""
    out = []
    for g in H.gens:
        if g > H.frobenius:
            width = g + 1
            bits = (H.bits | (_mask(width) & ~_mask(H.conductor))) & ~(1 << g)
            out.append(NumericalSemigroup._from_membership(bits, width))
    return out


def enumerate_by_genus(gmax: int):
    """Every numerical semigroup of genus <= gmax, each exactly once."""
    if gmax < 0:
        return
    stack = [NumericalSemigroup([1])]
    while stack:
        H = stack.pop()
        yield H
        if H.genus < gmax:
            stack.extend(tree_children(H))


def genus_counts(gmax: int) -> list[int]:
    """Number of semigroups of each genus 0..gmax."""
    counts = [0] * (gmax + 1)
    for H in enumerate_by_genus(gmax):
        counts[H.genus] += 1
    return counts


# -- per-semigroup verification ----------------------------------------------

def verify_record(H: NumericalSemigroup,
                  cfg: SurveyConfig | None = None) -> SurveyRecord:
    """Run every requested check on one semigroup; "na" marks checks that
    do not apply (or were not requested)."""
    if cfg is None:
        cfg = SurveyConfig(gmax=H.genus)
    wanted = set(cfg.checks)
    rep = classify(H)
    checks = {name: "na" for name in ALL_CHECKS}

    if "bideg_eq_tdeg" in wanted:
        checks["bideg_eq_tdeg"] = rep.bideg == rep.tdeg
    if "cdeg_ge_bideg" in wanted:
        checks["cdeg_ge_bideg"] = rep.cdeg >= rep.bideg
    if "gor_iff_symmetric" in wanted:
        checks["gor_iff_symmetric"] = len(
            {rep.gorenstein, rep.cdeg == 0, rep.bideg == 0, rep.tdeg == 0}) == 1
    if "ag_implies_bideg1" in wanted:
        applies = rep.almost_gorenstein and not rep.gorenstein
        checks["ag_implies_bideg1"] = (not applies) or rep.bideg == 1
    if "cdeg_ge_type_minus_1" in wanted:
        checks["cdeg_ge_type_minus_1"] = rep.cdeg >= rep.type - 1

    if H.genus > 0 and wanted & {"tcdeg_formula", "nu_mm", "canonical_mm"}:
        A = mm_ring(H)
        M = maximal_ideal(H)
        if "tcdeg_formula" in wanted:
            predicted = rep.cdeg + rep.multiplicity - 2 * rep.type
            checks["tcdeg_formula"] = cdeg(A) == predicted
        if "nu_mm" in wanted:
            checks["nu_mm"] = module_generators(M.colon(M)) == rep.type + 1
        if "canonical_mm" in wanted:
            D = rebase(M.add(embed_canonical(H)), A)
            checks["canonical_mm"] = D.iso_equal(canonical_ideal(A))

    if "duality_sample" in wanted:
        K = canonical_ideal(H)
        checks["duality_sample"] = all(
            K.colon(K.colon(I)) == I
            for I in islice(enumerate_ideals(H), cfg.duality_samples))

    if "herzog" in wanted and len(H.gens) == 3 and not H.is_symmetric():
        data = herzog_all_orderings(H)
        checks["herzog"] = (
            all(rep.cdeg in d.cdeg_candidates for d in data)
            and all(d.predicted_bideg == rep.bideg
                    for d in data if d.hypothesis))

    if "root_prop" in wanted and H.genus <= cfg.root_genus_cap:
        classes = rootset(H, cfg.root_nmax, node_budget=cfg.node_budget)
        if H.is_symmetric():
            checks["root_prop"] = any(
                rc.n == 1 and rc.irreducible for rc in classes)
        else:
            checks["root_prop"] = not any(rc.irreducible for rc in classes)

    for name, value in checks.items():
        if value is False and name not in CONJECTURE_CHECKS:
            raise InternalInvariantViolation(
                f"theorem check {name!r} failed for {H}")
    return SurveyRecord(report=rep, checks=checks)


# -- the survey run -----------------------------------------------------------

@dataclass
class SurveySummary:
    config: SurveyConfig
    records: int
    per_genus: list[int]
    tallies: dict
    min_cdeg_minus_bideg: int | None
    max_cdeg_minus_bideg: int | None
    violations: int
    out_path: str | None
    violations_path: str | None
    rows: list = field(repr=False, default_factory=list)


def _subtree_rows(args) -> list[dict]:
    gens, cfg = args
    stack = [NumericalSemigroup(gens)]
    rows = []
    while stack:
        node = stack.pop()
        rows.append(verify_record(node, cfg).to_dict())
        if node.genus < cfg.gmax:
            stack.extend(tree_children(node))
    return rows


def _collect_rows(cfg: SurveyConfig) -> list[dict]:
    if cfg.workers <= 1 or cfg.gmax <= cfg.split_depth:
        return _subtree_rows(((1,), cfg))
    rows = []
    tasks = []
    stack = [NumericalSemigroup([1])]
    while stack:
        node = stack.pop()
        if node.genus == cfg.split_depth:
            tasks.append((node.gens, cfg))
            continue
        rows.append(verify_record(node, cfg).to_dict())
        if node.genus < cfg.gmax:
            stack.extend(tree_children(node))
    with multiprocessing.Pool(cfg.workers) as pool:
        for chunk in pool.imap_unordered(_subtree_rows, tasks):
            rows.extend(chunk)
    return rows


def survey_run(cfg: SurveyConfig) -> SurveySummary:
    """Run the survey, write any requested output files, and summarize."""
    rows = _collect_rows(cfg)
    rows.sort(key=lambda r: (r["genus"], r["gens"]))

    per_genus = [0] * (cfg.gmax + 1)
    tallies = {name: {"pass": 0, "fail": 0, "na": 0} for name in ALL_CHECKS}
    lo = hi = None
    violations = []
    for r in rows:
        per_genus[r["genus"]] += 1
        diff = r["cdeg"] - r["bideg"]
        lo = diff if lo is None else min(lo, diff)
        hi = diff if hi is None else max(hi, diff)
        for name, value in r["checks"].items():
            key = "na" if value == "na" else ("pass" if value else "fail")
            tallies[name][key] += 1
        if r["checks"]["cdeg_ge_bideg"] is False:
            violations.append(r)

    out_path = violations_path = None
    if cfg.out:
        out_path = cfg.out
        _write_rows(rows, out_path, cfg.fmt)
        if violations:
            violations_path = out_path + ".violations.jsonl"
            _write_rows(violations, violations_path, "jsonl")

    return SurveySummary(
        config=cfg,
        records=len(rows),
        per_genus=per_genus,
        tallies=tallies,
        min_cdeg_minus_bideg=lo,
        max_cdeg_minus_bideg=hi,
        violations=len(violations),
        out_path=out_path,
        violations_path=violations_path,
        rows=rows,
    )


def _flat_row(r: dict) -> list:
    flat = []
    for key, value in r.items():
        if key == "gens":
            flat.append(",".join(str(g) for g in value))
        elif key == "checks":
            for name in ALL_CHECKS:
                v = value[name]
                flat.append(v if v == "na" else str(bool(v)).lower())
        elif isinstance(value, bool):
            flat.append(str(value).lower())
        else:
            flat.append(value)
    return flat


def _write_rows(rows: list[dict], path: str, fmt: str) -> None:
    if fmt == "jsonl":
        with open(path, "w") as fh:
            for r in rows:
                fh.write(json.dumps(r, separators=(",", ":")) + "\n")
        return
    columns = [k for k in DegreeReport.__dataclass_fields__] + list(ALL_CHECKS)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow(_flat_row(r))
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def format_summary(s: SurveySummary) -> str:
    lines = []
    lines.append(f"survey: genus <= {s.config.gmax}, {s.records} semigroups")
    lines.append("per-genus counts: "
                 + " ".join(str(n) for n in s.per_genus))
    lines.append(f"{'check':<22}{'pass':>8}{'fail':>8}{'na':>8}")
    for name in ALL_CHECKS:
        t = s.tallies[name]
        lines.append(f"{name:<22}{t['pass']:>8}{t['fail']:>8}{t['na']:>8}")
    lines.append(f"cdeg - bideg: min {s.min_cdeg_minus_bideg}, "
                 f"max {s.max_cdeg_minus_bideg}")
    lines.append(f"conjecture violations: {s.violations}")
    if s.out_path:
        lines.append(f"wrote {s.out_path} ({s.records} records)")
    if s.violations_path:
        lines.append(f"wrote {s.violations_path} ({s.violations} records)")
    c = s.config
    lines.append(
        f"config: workers={c.workers} split_depth={c.split_depth} "
        f"duality_samples={c.duality_samples} root_genus_cap={c.root_genus_cap} "
        f"root_nmax={c.root_nmax} node_budget={c.node_budget}")
    return "\n".join(lines)
