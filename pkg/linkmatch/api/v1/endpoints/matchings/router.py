from fastapi import APIRouter, Query
from fastapi.concurrency import run_in_threadpool

from linkmatch.api.v1.endpoints.matchings.schemas import (
    ApproxResponse,
    ExactResponse,
    KernelResponse,
    MatchingValidateRequest,
    MatchingValidationResponse,
)
from linkmatch.dependencies import ApproxServiceDep, ExactServiceDep, KernelServiceDep
from linkmatch.schemas.common import (
    ApiResponse,
    GammaEdgePayload,
    MatchingPayload,
    StreamPayload,
)
from linkmatch.services.stream_service import StreamService

router = APIRouter()


@router.post("/validate")
async def validate_matching(
    request: MatchingValidateRequest,
) -> ApiResponse[MatchingValidationResponse]:
    """Check that a gamma-matching lies in the stream and is pairwise independent."""
    stream = request.stream.to_stream()
    matching = request.matching.to_matching()
    service = StreamService()
    report = await run_in_threadpool(service.validate_matching, stream, matching)
    maximal = None
    if report.ok:
        maximal = await run_in_threadpool(service.is_maximal, stream, matching)
    return ApiResponse(
        data=MatchingValidationResponse(
            ok=report.ok, maximal=maximal, violations=report.violations
        )
    )


@router.post("/approx")
async def approx_matching(
    request: StreamPayload,
    service: ApproxServiceDep,
    gamma: int = Query(..., ge=1),
) -> ApiResponse[ApproxResponse]:
    """Greedy maximal gamma-matching, at least half the optimum."""
    matching = await run_in_threadpool(service.greedy_matching, request.to_stream(), gamma)
    bottom = sorted(v.as_tuple() for v in service.bottom_vertices(matching))
    return ApiResponse(
        data=ApproxResponse(
            size=len(matching),
            matching=MatchingPayload.from_matching(matching),
            bottom_vertices=bottom,
        )
    )


@router.post("/exact")
async def exact_matching(
    request: StreamPayload,
    service: ExactServiceDep,
    gamma: int = Query(..., ge=1),
    k: int | None = Query(None, ge=0),
    budget: int | None = Query(None, ge=1),
    force: bool = False,
) -> ApiResponse[ExactResponse]:
    """Maximum gamma-matching, or whether one of size k exists."""
    stream = request.to_stream()
    gamma_edges = await run_in_threadpool(service.check_size, stream, gamma, force)
    if k is not None:
        exists = await run_in_threadpool(
            service.exact_decision, stream, gamma, k, budget, gamma_edges
        )
        return ApiResponse(data=ExactResponse(gamma=gamma, k=k, exists=exists))
    result = await run_in_threadpool(
        service.exact_maximum, stream, gamma, budget, gamma_edges
    )
    return ApiResponse(
        data=ExactResponse(
            gamma=gamma,
            optimum=result.optimum,
            explored_nodes=result.explored_nodes,
            matching=MatchingPayload.from_matching(result.witness),
        )
    )


@router.post("/kernelize")
async def kernelize(
    request: StreamPayload,
    service: KernelServiceDep,
    gamma: int = Query(..., ge=1),
    k: int = Query(..., ge=1),
    prune_only: bool = False,
) -> ApiResponse[KernelResponse]:
    """Solve, reject, or shrink the instance for solution size k."""
    stream = request.to_stream()
    method = service.prune if prune_only else service.kernelize
    outcome = await run_in_threadpool(method, stream, gamma, k)
    return ApiResponse(
        data=KernelResponse(
            verdict=outcome.verdict,
            gamma=outcome.gamma,
            k=outcome.k,
            greedy_size=len(outcome.greedy),
            matching=(
                MatchingPayload.from_matching(outcome.matching)
                if outcome.matching is not None
                else None
            ),
            stream=(
                StreamPayload.from_stream(outcome.stream)
                if outcome.stream is not None
                else None
            ),
            pool=(
                [GammaEdgePayload.from_gamma_edge(e) for e in outcome.pool]
                if outcome.pool is not None
                else None
            ),
            stats=outcome.stats,
        ),
        message=f"verdict: {outcome.verdict.value}",
    )
