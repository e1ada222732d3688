"""HTTP front end: pydantic request/response models over the calculator.

Run with `nsdeg serve` or `uvicorn nsdeg.service:app`.  Every endpoint is a
stateless wrapper around the core modules; the survey endpoint is capped at
a moderate genus bound, larger sweeps belong to the CLI.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import derived, roots, survey
from .degrees import classify
from .errors import BudgetExceeded, InternalInvariantViolation, NsdegError
from .relideal import RelativeIdeal
from .semigroup import NumericalSemigroup

SURVEY_GMAX_LIMIT = 12

app = FastAPI(title="nsdeg", description="numerical semigroup degree calculator")


class GensRequest(BaseModel):
    gens: list[int] = Field(min_length=1, examples=[[5, 7, 9]])


class SemigroupInfo(BaseModel):
    gens: list[int]
    frobenius: int
    conductor: int
    genus: int
    multiplicity: int
    type: int
    pf: list[int]
    symmetric: bool


class DegreesResponse(BaseModel):
    gens: list[int]
    type: int
    multiplicity: int
    genus: int
    frobenius: int
    shift: int
    cdeg: int
    bideg: int
    tdeg: int
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    goto: bool


class IdealRequest(BaseModel):
    gens: list[int] = Field(min_length=1)
    ideal_gens: list[int] = Field(min_length=1)
    op: str = Field("none", pattern="^(none|dual|bidual|trace|colon)$")
    rhs: list[int] | None = None


class IdealResponse(BaseModel):
    min: int
    conductor: int
    elements: list[int]


class MmRequest(BaseModel):
    gens: list[int] = Field(min_length=1)
    iterate: int = Field(1, ge=1, le=64)


class MmResponse(BaseModel):
    steps: list[dict]


class HerzogResponse(BaseModel):
    gens: list[int]
    cdeg: int
    bideg: int
    orderings: list[dict]
    hypothesis_holds: bool
    predicted_bideg_ok: bool
    cdeg_candidates_ok: bool


class RootsRequest(BaseModel):
    gens: list[int] = Field(min_length=1)
    nmax: int = Field(roots.DEFAULT_NMAX, ge=1, le=16)


class RootsResponse(BaseModel):
    gens: list[int]
    classes: list[dict]


class SurveyRequest(BaseModel):
    max_genus: int = Field(ge=0, le=SURVEY_GMAX_LIMIT)
    checks: list[str] | None = None
    include_records: bool = True


class SurveyResponse(BaseModel):
    records: int
    per_genus: list[int]
    tallies: dict
    min_cdeg_minus_bideg: int | None
    max_cdeg_minus_bideg: int | None
    violations: int
    rows: list[dict] | None


def _semigroup(gens: list[int]) -> NumericalSemigroup:
    try:
        return NumericalSemigroup(gens)
    except NsdegError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/semigroup", response_model=SemigroupInfo)
def semigroup_info(req: GensRequest):
    return _semigroup(req.gens).to_dict()


@app.post("/degrees", response_model=DegreesResponse)
def degrees(req: GensRequest):
    return classify(_semigroup(req.gens)).to_dict()


@app.post("/ideal", response_model=IdealResponse)
def ideal(req: IdealRequest):
    H = _semigroup(req.gens)
    try:
        I = RelativeIdeal.from_generators(H, req.ideal_gens)
        if req.op == "dual":
            I = I.dual()
        elif req.op == "bidual":
            I = I.bidual()
        elif req.op == "trace":
            I = I.trace()
        elif req.op == "colon":
            if not req.rhs:
                raise HTTPException(status_code=422,
                                    detail="op=colon needs rhs generators")
            I = I.colon(RelativeIdeal.from_generators(H, req.rhs))
    except NsdegError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return I.to_dict()


@app.post("/mm", response_model=MmResponse)
def mm(req: MmRequest):
    H = _semigroup(req.gens)
    try:
        return {"steps": derived.mm_report(H, req.iterate)}
    except NsdegError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/herzog", response_model=HerzogResponse)
def herzog(req: GensRequest):
    H = _semigroup(req.gens)
    try:
        return derived.herzog_report(H)
    except NsdegError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/roots", response_model=RootsResponse)
def roots_endpoint(req: RootsRequest):
    H = _semigroup(req.gens)
    try:
        classes = roots.rootset(H, req.nmax)
    except BudgetExceeded as exc:
        raise HTTPException(status_code=429, detail=str(exc))
    return {"gens": list(H.gens), "classes": [rc.to_dict() for rc in classes]}


@app.post("/survey", response_model=SurveyResponse)
def survey_endpoint(req: SurveyRequest):
    checks = tuple(req.checks) if req.checks else survey.ALL_CHECKS
    try:
        cfg = survey.SurveyConfig(gmax=req.max_genus, checks=checks)
        summary = survey.survey_run(cfg)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except InternalInvariantViolation as exc:
        raise HTTPException(status_code=500, detail=str(exc))
    return {
        "records": summary.records,
        "per_genus": summary.per_genus,
        "tallies": summary.tallies,
        "min_cdeg_minus_bideg": summary.min_cdeg_minus_bideg,
        "max_cdeg_minus_bideg": summary.max_cdeg_minus_bideg,
        "violations": summary.violations,
        "rows": summary.rows if req.include_records else None,
    }
