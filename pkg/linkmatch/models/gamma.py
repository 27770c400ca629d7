from typing import Any

from pydantic import Field, model_validator

from linkmatch.models.base import FrozenModel
from linkmatch.models.stream import LinkStream, TemporalVertex, TimedEdge


class GammaEdge(FrozenModel):
    """The block of ``gamma`` consecutive timed edges between u and v from ``start``.

    A value may exist without being present in any stream; see ``exists_in``.
    """

    start: int
    u: str
    v: str
    gamma: int = Field(ge=1)

    @model_validator(mode="before")
    @classmethod
    def _order_endpoints(cls, data: Any) -> Any:
        if isinstance(data, dict) and "u" in data and "v" in data:
            u, v = str(data["u"]), str(data["v"])
            if u == v:
                raise ValueError("gamma-edge endpoints must be distinct")
            if v < u:
                data = {**data, "u": v, "v": u}
        return data

    @property
    def end(self) -> int:
        """Last instant covered."""
        return self.start + self.gamma - 1

    @property
    def sort_key(self) -> tuple[int, str, str]:
        return (self.start, self.u, self.v)

    def timed_edges(self) -> list[TimedEdge]:
        return [(t, self.u, self.v) for t in range(self.start, self.end + 1)]

    def temporal_vertices(self) -> frozenset[TemporalVertex]:
        return frozenset(
            TemporalVertex(time=t, vertex=x)
            for t in range(self.start, self.end + 1)
            for x in (self.u, self.v)
        )

    def bottom_vertices(self) -> tuple[TemporalVertex, TemporalVertex]:
        return (
            TemporalVertex(time=self.end, vertex=self.u),
            TemporalVertex(time=self.end, vertex=self.v),
        )

    def exists_in(self, stream: LinkStream) -> bool:
        """True iff all gamma constituent timed edges are in the stream."""
        return all(edge in stream.edges for edge in self.timed_edges())

    def __str__(self) -> str:
        return f"Γ_{self.gamma}({self.start},{self.u},{self.v})"


class GammaMatching(FrozenModel):
    """A set of gamma-edges sharing one gamma value."""

    gamma: int = Field(ge=1)
    members: frozenset[GammaEdge] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def _same_gamma(self) -> "GammaMatching":
        mismatched = [e for e in self.members if e.gamma != self.gamma]
        if mismatched:
            raise ValueError(
                f"matching with gamma={self.gamma} holds {mismatched[0]}"
            )
        return self

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[GammaEdge]:
        return sorted(self.members, key=lambda e: e.sort_key)
