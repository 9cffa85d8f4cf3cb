"""Pydantic request/response models for the service."""

from __future__ import annotations

from pydantic import BaseModel, Field

ComplexPair = tuple[float, float]


class GroupModel(BaseModel):
    moduli: list[int]


class MappingModel(BaseModel):
    group: GroupModel
    dim: int
    primal_weight: float = 1.0
    values: list[list[ComplexPair]]


class OperatorModel(BaseModel):
    dims: list[int]
    matrix: list[list[ComplexPair]]


class DecompositionTermModel(BaseModel):
    weight: float
    factors: list[list[ComplexPair]]


class DecompositionModel(BaseModel):
    dims: list[int]
    terms: list[DecompositionTermModel]


class ConstructRequest(BaseModel):
    mappings: list[MappingModel] = Field(min_length=2)


class SynthesizeRequest(BaseModel):
    decomposition: DecompositionModel
    group: GroupModel
    primal_weight: float = 1.0


class SynthesizeResponse(BaseModel):
    mappings: list[MappingModel]
    residual: float
    tolerance: float
    ok: bool


class VerifyRequest(BaseModel):
    operator: OperatorModel
    cuts: list[int] | None = None  # default: every bipartition cut
    decisive: bool = False


class CutVerdictModel(BaseModel):
    cut: int
    status: str
    violating_eigenvalue: float | None = None
    note: str = ""


class VerifyResponse(BaseModel):
    status: str
    verdicts: list[CutVerdictModel]
    tolerance_scale: float


class SpectralRequest(BaseModel):
    mapping: MappingModel


class PairEntryModel(BaseModel):
    kind: str
    coefficient: float | None = None


class SpectralResponse(BaseModel):
    is_spectral: bool
    pairwise: list[list[PairEntryModel]]
    tolerance: float


class DemoIntroRequest(BaseModel):
    v0: list[ComplexPair]
    v1: list[ComplexPair]
    w0: list[ComplexPair]
    w1: list[ComplexPair]


class DemoIntroResponse(BaseModel):
    primal: OperatorModel
    dual: OperatorModel
    max_diff: float
    tolerance: float
    ok: bool


class RoundtripRequest(BaseModel):
    seed: int
    moduli: list[int]
    dims: list[int]
    terms: int
    primal_weight: float = 1.0


class RoundtripResponse(BaseModel):
    residual: float
    tolerance: float
    ok: bool
