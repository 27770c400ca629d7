from typing import Generic, TypeVar

from pydantic import BaseModel, Field, model_validator

from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import LinkStream

T = TypeVar("T")


class ApiResponse(BaseModel, Generic[T]):
    """Standard API response wrapper."""

    data: T
    success: bool = True
    message: str | None = None


class ErrorResponse(BaseModel):
    """Standard error response."""

    detail: str
    success: bool = False


class HealthStatus(BaseModel):
    """Health check response."""

    status: str = "healthy"
    version: str


class StreamPayload(BaseModel):
    """A link stream on the wire; edges are [t, u, v] triples."""

    t_min: int | None = None
    t_max: int | None = None
    vertices: list[str] | None = None
    edges: list[tuple[int, str, str]] = Field(default_factory=list)

    def to_stream(self) -> LinkStream:
        return LinkStream.from_edges(
            self.edges, vertices=self.vertices, t_min=self.t_min, t_max=self.t_max
        )

    @classmethod
    def from_stream(cls, stream: LinkStream) -> "StreamPayload":
        return cls(
            t_min=stream.t_min,
            t_max=stream.t_max,
            vertices=sorted(stream.vertices),
            edges=stream.sorted_edges(),
        )


class GammaEdgePayload(BaseModel):
    start: int
    u: str
    v: str
    gamma: int = Field(ge=1)

    @model_validator(mode="after")
    def _distinct_endpoints(self) -> "GammaEdgePayload":
        if self.u == self.v:
            raise ValueError(f"gamma-edge endpoints must be distinct, got {self.u!r} twice")
        return self

    def to_gamma_edge(self) -> GammaEdge:
        return GammaEdge(start=self.start, u=self.u, v=self.v, gamma=self.gamma)

    @classmethod
    def from_gamma_edge(cls, edge: GammaEdge) -> "GammaEdgePayload":
        return cls(start=edge.start, u=edge.u, v=edge.v, gamma=edge.gamma)


class MatchingPayload(BaseModel):
    gamma: int = Field(ge=1)
    members: list[GammaEdgePayload] = Field(default_factory=list)

    @model_validator(mode="after")
    def _members_share_gamma(self) -> "MatchingPayload":
        for member in self.members:
            if member.gamma != self.gamma:
                raise ValueError(
                    f"member ({member.start},{member.u},{member.v}) has gamma={member.gamma}, "
                    f"matching has gamma={self.gamma}"
                )
        return self

    def to_matching(self) -> GammaMatching:
        return GammaMatching(
            gamma=self.gamma,
            members=frozenset(m.to_gamma_edge() for m in self.members),
        )

    @classmethod
    def from_matching(cls, matching: GammaMatching) -> "MatchingPayload":
        return cls(
            gamma=matching.gamma,
            members=[GammaEdgePayload.from_gamma_edge(e) for e in matching.sorted_members()],
        )
