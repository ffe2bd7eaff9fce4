"""FastAPI service exposing the constructions and verification reports."""

from __future__ import annotations

import json
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import selftest, tables
from ..curve import CurveModel, XiEnd, diagram_from_json
from ..tworep import GlueContext, XiContext, duality_matrix, glue_check, \
    line_context, theta_check, zigzag_check
from .schemas import (AffineRequest, AlgebraRequest, DualRequest, GlueRequest,
                      HeckeRequest, Report, ReportList, SelftestRequest,
                      TableResponse, ThetaRequest)

app = FastAPI(title="strandcat", version="0.1.0")


def _parse_diagram(data: dict) -> CurveModel:
    try:
        return diagram_from_json(json.dumps(data))
    except (ValueError, KeyError) as exc:
        raise HTTPException(status_code=422, detail=f"bad diagram: {exc}")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/hecke", response_model=TableResponse)
def hecke_endpoint(req: HeckeRequest) -> TableResponse:
    return TableResponse(**tables.hecke_tables(req.n, req.affine, req.lmax,
                                               req.cbound))


@app.post("/affine", response_model=TableResponse)
def affine_endpoint(req: AffineRequest) -> TableResponse:
    return TableResponse(**tables.affine_tables(req.n))


@app.post("/algebra", response_model=TableResponse)
def algebra_endpoint(req: AlgebraRequest) -> TableResponse:
    curve = _parse_diagram(req.diagram)
    for m in req.objects:
        if m not in curve.mark_ids:
            raise HTTPException(status_code=422, detail=f"unknown mark {m}")
    out = tables.algebra_tables(curve, req.objects, req.mu, req.winding,
                                req.lmax, req.max_strands)
    return TableResponse(**out)


@app.post("/glue", response_model=Report)
def glue_endpoint(req: GlueRequest) -> Report:
    models = [_parse_diagram(d) for d in req.diagrams]
    comps = []
    ids = []
    pos = []
    matching = []
    ends = []
    for m in models:
        off = len(comps)
        moff = len(ids)
        comps += list(m.components)
        ids += list(m.mark_ids)
        pos += [(c + off, x) for (c, x) in m.mark_pos]
        matching += [(i + moff, j + moff) for (i, j) in m.matching]
        ends += [XiEnd(x.name, x.comp + off, x.side, x.base) for x in m.xi_ends]
    try:
        curve = CurveModel(tuple(comps), tuple(ids), tuple(pos),
                           tuple(matching), tuple(ends))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    names = {x.name for x in ends}
    if req.xi_out not in names or req.xi_in not in names:
        raise HTTPException(status_code=422, detail="missing ray ends")
    M = tuple(sorted((curve.zpoint_of_mark(m) for m in curve.mark_ids),
                     key=lambda z: z.key()))
    glue = GlueContext(XiContext(curve, M), req.xi_out, req.xi_in)
    try:
        rep = glue_check(glue, req.mu, req.winding)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return Report(**rep)


@app.post("/theta", response_model=Report)
def theta_endpoint(req: ThetaRequest) -> Report:
    return Report(**theta_check(req.s, req.cbound))


@app.post("/dual", response_model=ReportList)
def dual_endpoint(req: DualRequest) -> ReportList:
    try:
        ctx = line_context([Fraction(x) for x in req.marks],
                           req.oriented_middle)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    S = ctx.M
    reports = []
    for tsize in range(0, len(S) + 1):
        if tsize + req.n != len(S):
            continue
        reports.append(Report(**duality_matrix(ctx, S[:tsize], S, req.n)))
    reports.append(Report(**zigzag_check(ctx, S, S)))
    status = "pass" if all(r.status == "pass" for r in reports) else "fail"
    return ReportList(status=status, reports=reports)


@app.post("/selftest", response_model=ReportList)
def selftest_endpoint(req: SelftestRequest) -> ReportList:
    reports = []
    for num, fn in selftest.CRITERIA:
        if req.only is not None and num not in req.only:
            continue
        if fn in (selftest.criterion_crossing_oracle,
                  selftest.criterion_differential_soundness):
            rep = fn(req.seed)
        else:
            rep = fn()
        rep["criterion"] = num
        reports.append(Report(**rep))
    status = "pass" if all(r.status == "pass" for r in reports) else "fail"
    return ReportList(status=status, reports=reports)
