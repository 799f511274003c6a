"""HTTP service exposing the verification pipeline.

All computation happens in the core package; the endpoints validate requests,
call into it, and shape responses. Endpoints are synchronous on purpose: the
work is CPU bound and runs in the server's worker threads.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, schemas
from .complexes import build_complex, verify_resolution
from .decomposition import DecompositionFunction, verify_exchange, verify_set_containment
from .matching import generators
from .monomials import Monomial, Partition
from .oracle import closed_form_Q, hilbert_series, multiplicity, total_betti
from .quotients import (LQFailure, betti_from_sets, power_generators,
                        verify_linear_quotients)
from .runner import sweep
from .tableaux import canonical_rep


def _partition(parts: list[int]) -> Partition:
    try:
        return Partition(tuple(parts))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="matchfield",
        version=__version__,
        description="Matching field ideal powers: linear quotients, "
                    "cellular resolutions, exact verification.",
    )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/generators", response_model=schemas.GeneratorsResponse)
    def field_generators(req: schemas.PartitionRequest) -> schemas.GeneratorsResponse:
        a = _partition(req.partition)
        try:
            cols = generators(a)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.GeneratorsResponse(
            partition=str(a), n=a.n, count=len(cols),
            columns=[list(c) for c in cols],
            monomials=[c.monomial(a.n).text() for c in cols],
        )

    @app.post("/power", response_model=schemas.PowerResponse)
    def power(req: schemas.PowerRequest) -> schemas.PowerResponse:
        a = _partition(req.partition)
        og = power_generators(a, req.power)
        return schemas.PowerResponse(
            partition=str(a), power=req.power, count=len(og),
            monomials=[m.text() for m in og.monomials],
        )

    @app.post("/order", response_model=schemas.OrderResponse)
    def order(req: schemas.PowerRequest) -> schemas.OrderResponse:
        a = _partition(req.partition)
        result = verify_linear_quotients(a, req.power)
        if isinstance(result, LQFailure):
            raise HTTPException(
                status_code=409,
                detail=f"no linear quotient certificate: colon ideal at index "
                       f"{result.index} has non-variable generator "
                       f"{result.witness.text()}")
        entries = [
            schemas.OrderEntry(
                index=j, monomial=m.text(),
                set_size=len(result.sets[j]),
                set_vars=[str(v) for v in sorted(result.sets[j])],
            )
            for j, m in enumerate(result.generators.monomials)
        ]
        return schemas.OrderResponse(partition=str(a), power=req.power, entries=entries)

    @app.post("/canon", response_model=schemas.CanonResponse)
    def canon(req: schemas.CanonRequest) -> schemas.CanonResponse:
        a = _partition(req.partition)
        try:
            m = Monomial.from_text(req.monomial, a.n)
            tableau = canonical_rep(m, a, req.power)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.CanonResponse(
            partition=str(a), power=req.power, monomial=m.text(),
            columns=tableau.to_json(), text=str(tableau),
        )

    @app.post("/betti", response_model=schemas.BettiResponse)
    def betti(req: schemas.BettiRequest) -> schemas.BettiResponse:
        a = _partition(req.partition)
        result = verify_linear_quotients(a, req.power)
        if isinstance(result, LQFailure):
            raise HTTPException(status_code=409, detail="no linear quotient certificate")
        formula = betti_from_sets(result)
        oracle = match = None
        if req.oracle:
            oracle = total_betti(result.generators.monomials)
            match = tuple(oracle) == formula
        return schemas.BettiResponse(
            partition=str(a), power=req.power, formula=list(formula),
            oracle=None if oracle is None else list(oracle), match=match,
        )

    @app.post("/complex", response_model=schemas.ComplexResponse)
    def complex_endpoint(req: schemas.ComplexRequest) -> schemas.ComplexResponse:
        a = _partition(req.partition)
        if req.decomposition not in DecompositionFunction.KINDS:
            raise HTTPException(status_code=400,
                                detail=f"decomposition must be one of "
                                       f"{DecompositionFunction.KINDS}")
        result = verify_linear_quotients(a, req.power)
        if isinstance(result, LQFailure):
            raise HTTPException(status_code=409, detail="no linear quotient certificate")
        complex_ = build_complex(DecompositionFunction(req.decomposition, result))
        return schemas.ComplexResponse(
            partition=str(a), power=req.power, decomposition=req.decomposition,
            f_vector=list(complex_.f_vector()), complex=complex_.to_json(),
            dot=complex_.to_dot() if req.dot else None,
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        a = _partition(req.partition)
        if req.decomposition not in DecompositionFunction.KINDS:
            raise HTTPException(status_code=400,
                                detail=f"decomposition must be one of "
                                       f"{DecompositionFunction.KINDS}")
        wanted = set(req.checks)
        if "all" in wanted:
            wanted = {"lq", "exchange", "containment", "resolution", "betti"}
        response = schemas.VerifyResponse(
            partition=str(a), power=req.power,
            decomposition=req.decomposition, ok=True)

        result = verify_linear_quotients(a, req.power)
        if isinstance(result, LQFailure):
            response.lq = schemas.LQCheck(
                ok=False, failure_index=result.index,
                failure_witness=result.witness.text())
            response.ok = False
            return response
        response.lq = schemas.LQCheck(ok=True)

        b = DecompositionFunction(req.decomposition, result)
        if "exchange" in wanted:
            report = verify_exchange(b)
            response.exchange = schemas.CountCheck(
                ok=report.ok, checked=report.checked,
                violations=len(report.violations),
                sample=[f"{v.m.text()}: {v.s}/{v.t} -> "
                        f"{v.via_t.text()} != {v.via_s.text()}"
                        for v in report.violations[:5]])
            response.ok = response.ok and report.ok
        if "containment" in wanted:
            report = verify_set_containment(b)
            response.containment = schemas.CountCheck(
                ok=report.ok, checked=report.checked,
                violations=len(report.violations),
                sample=[f"{v.m.text()}: {v.t} -> {v.target.text()} adds "
                        f"{','.join(str(x) for x in v.extra)}"
                        for v in report.violations[:5]])
            # containment is reported, not required: the complex construction
            # only needs the exchange property
        if "resolution" in wanted:
            report = verify_resolution(build_complex(b))
            response.resolution = schemas.ResolutionCheck(
                ok=report.ok, d_squared=report.is_complex, linear=report.linear,
                multidegrees_checked=report.multidegrees_checked,
                failures=len(report.failures),
                sample=[m.text() for m in report.failures[:5]])
            response.ok = response.ok and report.ok
        if "betti" in wanted:
            formula = betti_from_sets(result)
            oracle = total_betti(result.generators.monomials)
            response.betti = list(formula)
            response.betti_oracle = list(oracle)
            response.betti_match = oracle == formula
            response.ok = response.ok and response.betti_match
        return response

    @app.post("/hilbert", response_model=schemas.HilbertResponse)
    def hilbert(req: schemas.HilbertRequest) -> schemas.HilbertResponse:
        a = _partition(req.partition)
        og = power_generators(a, req.power)
        try:
            series = hilbert_series(og.monomials, a.n)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        closed = matches = None
        if req.closed_form:
            closed = closed_form_Q(a.n)
            matches = (a.parts == (a.n,) and req.power == 1
                       and closed == series.numerator)
        return schemas.HilbertResponse(
            partition=str(a), power=req.power,
            numerator=list(series.numerator),
            denominator_exponent=series.denominator_exponent,
            multiplicity=multiplicity(series),
            closed_form_numerator=None if closed is None else list(closed),
            closed_form_matches=matches,
        )

    @app.post("/sweep", response_model=schemas.SweepResponse)
    def sweep_endpoint(req: schemas.SweepRequest) -> schemas.SweepResponse:
        try:
            report = sweep(req.max_n, req.max_power,
                           decomposition=req.decomposition,
                           with_oracle=req.with_oracle,
                           with_resolution=req.with_resolution,
                           parallelism=req.parallelism)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        rows = [
            schemas.SweepRow(
                partition=",".join(str(p) for p in r.partition),
                power=r.ell, generators=r.n_generators, lq_pass=r.lq_ok,
                exchange_pass=None if r.exchange_violations is None
                else r.exchange_violations == 0,
                containment_pass=None if r.containment_violations is None
                else r.containment_violations == 0,
                d_squared_pass=r.d_squared_ok,
                bs_acyclicity_pass=r.resolution_ok,
                betti=None if r.betti_formula is None else list(r.betti_formula),
                f_vector=None if r.f_vector is None else list(r.f_vector),
                formula_vs_oracle=r.betti_match,
                seconds=round(r.seconds, 3),
            )
            for r in report.rows
        ]
        return schemas.SweepResponse(
            max_n=req.max_n, max_power=req.max_power,
            all_pass=report.all_pass, rows=rows, csv=report.to_csv(),
        )

    return app


app = create_app()
