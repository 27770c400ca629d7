from pydantic import BaseModel

from linkmatch.models.report import Violation
from linkmatch.schemas.common import GammaEdgePayload, StreamPayload


class StreamValidationResponse(BaseModel):
    ok: bool
    vertices: int
    instants: int
    edges: int
    violations: list[Violation]


class GammaEdgesResponse(BaseModel):
    gamma: int
    count: int
    gamma_edges: list[GammaEdgePayload]


class CompressResponse(BaseModel):
    delta: int
    stream: StreamPayload
