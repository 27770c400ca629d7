from pydantic import BaseModel

from linkmatch.models.kernel import KernelStats, KernelVerdict
from linkmatch.models.report import Violation
from linkmatch.schemas.common import GammaEdgePayload, MatchingPayload, StreamPayload


class MatchingValidateRequest(BaseModel):
    stream: StreamPayload
    matching: MatchingPayload


class MatchingValidationResponse(BaseModel):
    ok: bool
    maximal: bool | None = None
    violations: list[Violation]


class ApproxResponse(BaseModel):
    size: int
    matching: MatchingPayload
    bottom_vertices: list[tuple[int, str]]


class ExactResponse(BaseModel):
    gamma: int
    k: int | None = None
    exists: bool | None = None
    optimum: int | None = None
    explored_nodes: int | None = None
    matching: MatchingPayload | None = None


class KernelResponse(BaseModel):
    verdict: KernelVerdict
    gamma: int
    k: int
    greedy_size: int
    matching: MatchingPayload | None = None
    stream: StreamPayload | None = None
    pool: list[GammaEdgePayload] | None = None
    stats: KernelStats
