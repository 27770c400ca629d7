from fastapi import APIRouter, Query
from fastapi.concurrency import run_in_threadpool

from linkmatch.api.v1.endpoints.streams.schemas import (
    CompressResponse,
    GammaEdgesResponse,
    StreamValidationResponse,
)
from linkmatch.schemas.common import ApiResponse, GammaEdgePayload, StreamPayload
from linkmatch.services.compress_service import CompressService
from linkmatch.services.stream_service import StreamService

router = APIRouter()


@router.post("/validate")
async def validate_stream(request: StreamPayload) -> ApiResponse[StreamValidationResponse]:
    """Check the link-stream invariants."""
    stream = request.to_stream()
    report = StreamService().validate_stream(stream)
    return ApiResponse(
        data=StreamValidationResponse(
            ok=report.ok,
            vertices=stream.n,
            instants=stream.tau,
            edges=stream.m,
            violations=report.violations,
        )
    )


@router.post("/gamma-edges")
async def gamma_edges(
    request: StreamPayload,
    gamma: int = Query(..., ge=1),
) -> ApiResponse[GammaEdgesResponse]:
    """List the gamma-edges of a stream in canonical order."""
    stream = request.to_stream()
    edges = await run_in_threadpool(StreamService().enumerate_gamma_edges, stream, gamma)
    return ApiResponse(
        data=GammaEdgesResponse(
            gamma=gamma,
            count=len(edges),
            gamma_edges=[GammaEdgePayload.from_gamma_edge(e) for e in edges],
        )
    )


@router.post("/compress")
async def compress_stream(
    request: StreamPayload,
    delta: int = Query(...),
) -> ApiResponse[CompressResponse]:
    compressed = await run_in_threadpool(
        CompressService().delta_compress, request.to_stream(), delta
    )
    return ApiResponse(
        data=CompressResponse(delta=delta, stream=StreamPayload.from_stream(compressed))
    )
