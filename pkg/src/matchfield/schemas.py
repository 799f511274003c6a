"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator


class PartitionRequest(BaseModel):
    partition: list[int] = Field(min_length=1)

    @field_validator("partition")
    @classmethod
    def _positive_parts(cls, parts: list[int]) -> list[int]:
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        return parts


class PowerRequest(PartitionRequest):
    power: int = Field(default=1, ge=1)


class CanonRequest(PowerRequest):
    monomial: str


class BettiRequest(PowerRequest):
    oracle: bool = False


class ComplexRequest(PowerRequest):
    decomposition: str = "paper-bl"
    dot: bool = False


class VerifyRequest(PowerRequest):
    checks: list[str] = Field(default=["all"])
    decomposition: str = "paper-bl"

    @field_validator("checks")
    @classmethod
    def _known_checks(cls, checks: list[str]) -> list[str]:
        allowed = {"lq", "exchange", "containment", "resolution", "all"}
        unknown = set(checks) - allowed
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}; allowed {sorted(allowed)}")
        return checks


class HilbertRequest(PartitionRequest):
    power: int = Field(default=1, ge=1)
    closed_form: bool = False


class SweepRequest(BaseModel):
    max_n: int = Field(ge=3, le=7)
    max_power: int = Field(default=2, ge=1, le=3)
    decomposition: str = "paper-bl"
    with_oracle: bool = True
    with_resolution: bool = True
    parallelism: int | None = Field(default=None, ge=1)


class GeneratorsResponse(BaseModel):
    partition: str
    n: int
    count: int
    columns: list[list[int]]
    monomials: list[str]


class PowerResponse(BaseModel):
    partition: str
    power: int
    count: int
    monomials: list[str]


class OrderEntry(BaseModel):
    index: int
    monomial: str
    set_size: int
    set_vars: list[str]


class OrderResponse(BaseModel):
    partition: str
    power: int
    entries: list[OrderEntry]


class CanonResponse(BaseModel):
    partition: str
    power: int
    monomial: str
    columns: list[list[int]]
    text: str


class BettiResponse(BaseModel):
    partition: str
    power: int
    formula: list[int]
    oracle: list[int] | None = None
    match: bool | None = None


class ComplexResponse(BaseModel):
    partition: str
    power: int
    decomposition: str
    f_vector: list[int]
    complex: dict
    dot: str | None = None


class LQCheck(BaseModel):
    ok: bool
    failure_index: int | None = None
    failure_witness: str | None = None


class CountCheck(BaseModel):
    ok: bool
    checked: int
    violations: int
    sample: list[str] = []


class ResolutionCheck(BaseModel):
    ok: bool
    d_squared: bool
    linear: bool
    multidegrees_checked: int
    failures: int
    sample: list[str] = []


class VerifyResponse(BaseModel):
    partition: str
    power: int
    decomposition: str
    ok: bool
    lq: LQCheck | None = None
    exchange: CountCheck | None = None
    containment: CountCheck | None = None
    resolution: ResolutionCheck | None = None
    betti: list[int] | None = None
    betti_oracle: list[int] | None = None
    betti_match: bool | None = None


class HilbertResponse(BaseModel):
    partition: str
    power: int
    numerator: list[int]
    denominator_exponent: int
    multiplicity: int
    closed_form_numerator: list[int] | None = None
    closed_form_matches: bool | None = None


class SweepRow(BaseModel):
    partition: str
    power: int
    generators: int
    lq_pass: bool
    exchange_pass: bool | None
    containment_pass: bool | None
    d_squared_pass: bool | None
    bs_acyclicity_pass: bool | None
    betti: list[int] | None
    f_vector: list[int] | None
    formula_vs_oracle: bool | None
    seconds: float


class SweepResponse(BaseModel):
    max_n: int
    max_power: int
    all_pass: bool
    rows: list[SweepRow]
    csv: str


class HealthResponse(BaseModel):
    status: str
    version: str
