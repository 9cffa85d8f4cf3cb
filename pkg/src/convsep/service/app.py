"""FastAPI service exposing the construction, synthesis and verification API.

The service is stateless; every endpoint is a pure function of its JSON
request.  The CLI drives this app in-process by default, or over HTTP when
it is served with uvicorn.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from ..abelian import conjugate_measures, make_group
from ..instances import random_decomposition
from ..separability import (
    CapacityError,
    NotPositiveSemidefiniteError,
    VerdictStatus,
    operator_dual_side,
    operator_from_decomposition,
    operator_from_mappings,
    ppt_check,
    relative_max_norm_distance,
    synthesize_mappings,
)
from ..serialization import (
    decomposition_from_json,
    mapping_from_json,
    mapping_to_json,
    operator_from_json,
    operator_to_json,
)
from ..spectral import ORTHO_TOL, PairClass, gram_spectral_condition
from ..transform import VectorMapping
from . import schemas

DEMO_TOL = 1e-12
ROUNDTRIP_TOL = 1e-8
PSD_TOL_SCALE = 1e-8

app = FastAPI(
    title="convsep",
    description="Separable operators from tensor convolutions on finite abelian groups",
)


def _bad_request(exc: Exception):
    raise HTTPException(status_code=400, detail=str(exc))


def _load_mappings(models: list[schemas.MappingModel]):
    return [mapping_from_json(m.model_dump()) for m in models]


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/construct", response_model=schemas.OperatorModel)
def construct(req: schemas.ConstructRequest):
    try:
        op = operator_from_mappings(_load_mappings(req.mappings))
    except ValueError as exc:
        _bad_request(exc)
    return operator_to_json(op)


@app.post("/dual", response_model=schemas.OperatorModel)
def dual(req: schemas.ConstructRequest):
    try:
        op = operator_dual_side(_load_mappings(req.mappings))
    except ValueError as exc:
        _bad_request(exc)
    return operator_to_json(op)


@app.post("/synthesize", response_model=schemas.SynthesizeResponse)
def synthesize(req: schemas.SynthesizeRequest):
    try:
        d = decomposition_from_json(req.decomposition.model_dump())
        group = make_group(req.group.moduli)
        measure = conjugate_measures(group, req.primal_weight)
        mappings = synthesize_mappings(d, group, measure)
        target = operator_from_decomposition(d)
        rebuilt = operator_from_mappings(mappings)
    except (CapacityError, ValueError) as exc:
        _bad_request(exc)
    residual = relative_max_norm_distance(rebuilt.matrix, target.matrix)
    return {
        "mappings": [mapping_to_json(m) for m in mappings],
        "residual": residual,
        "tolerance": ROUNDTRIP_TOL,
        "ok": residual <= ROUNDTRIP_TOL,
    }


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest):
    try:
        op = operator_from_json(req.operator.model_dump())
    except ValueError as exc:
        _bad_request(exc)
    m = len(op.shape.dims)
    cuts = req.cuts if req.cuts is not None else list(range(1, m))
    verdicts = []
    overall = VerdictStatus.INCONCLUSIVE
    certified = False
    try:
        for cut in cuts:
            v = ppt_check(op, cut, decisive=req.decisive)
            verdicts.append(
                schemas.CutVerdictModel(
                    cut=cut,
                    status=v.status.value,
                    violating_eigenvalue=(
                        v.violation.eigenvalue if v.violation else None
                    ),
                    note=v.note,
                )
            )
            if v.status is VerdictStatus.ENTANGLED_PPT:
                overall = VerdictStatus.ENTANGLED_PPT
            elif v.status is VerdictStatus.SEPARABLE_CERTIFIED:
                certified = True
    except (NotPositiveSemidefiniteError, ValueError) as exc:
        _bad_request(exc)
    if overall is not VerdictStatus.ENTANGLED_PPT and certified:
        overall = VerdictStatus.SEPARABLE_CERTIFIED
    return {
        "status": overall.value,
        "verdicts": verdicts,
        "tolerance_scale": PSD_TOL_SCALE,
    }


@app.post("/spectral", response_model=schemas.SpectralResponse)
def spectral(req: schemas.SpectralRequest):
    try:
        mapping = mapping_from_json(req.mapping.model_dump())
    except ValueError as exc:
        _bad_request(exc)
    verdict = gram_spectral_condition(mapping)
    table = [
        [
            schemas.PairEntryModel(
                kind=entry.kind.value,
                coefficient=(
                    entry.coefficient
                    if entry.kind is PairClass.REAL_PROPORTIONAL
                    else None
                ),
            )
            for entry in row
        ]
        for row in verdict.pairwise
    ]
    return {"is_spectral": verdict.is_spectral, "pairwise": table, "tolerance": ORTHO_TOL}


@app.post("/demo-intro", response_model=schemas.DemoIntroResponse)
def demo_intro(req: schemas.DemoIntroRequest):
    try:
        v0, v1, w0, w1 = (
            np.array([complex(re, im) for re, im in vec], dtype=complex)
            for vec in (req.v0, req.v1, req.w0, req.w1)
        )
        group = make_group([2])
        measure = conjugate_measures(group)
        mappings = [
            VectorMapping(group, measure, np.array([v0, v1])),
            VectorMapping(group, measure, np.array([w0, w1])),
        ]
        primal = operator_from_mappings(mappings)
        dual_form = operator_dual_side(mappings)
    except ValueError as exc:
        _bad_request(exc)
    diff = float(np.max(np.abs(primal.matrix - dual_form.matrix)))
    return {
        "primal": operator_to_json(primal),
        "dual": operator_to_json(dual_form),
        "max_diff": diff,
        "tolerance": DEMO_TOL,
        "ok": diff <= DEMO_TOL,
    }


@app.post("/roundtrip", response_model=schemas.RoundtripResponse)
def roundtrip(req: schemas.RoundtripRequest):
    try:
        d = random_decomposition(req.seed, req.dims, req.terms)
        group = make_group(req.moduli)
        measure = conjugate_measures(group, req.primal_weight)
        mappings = synthesize_mappings(d, group, measure)
        target = operator_from_decomposition(d)
        rebuilt = operator_from_mappings(mappings)
    except (CapacityError, ValueError) as exc:
        _bad_request(exc)
    residual = relative_max_norm_distance(rebuilt.matrix, target.matrix)
    return {
        "residual": residual,
        "tolerance": ROUNDTRIP_TOL,
        "ok": residual <= ROUNDTRIP_TOL,
    }
