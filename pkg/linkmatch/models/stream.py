from collections import defaultdict
from collections.abc import Iterable
from functools import cached_property

from pydantic import Field

from linkmatch.exceptions import BadRequestError
from linkmatch.models.base import FrozenModel

# (t, u, v) with u <= v in canonical vertex order
TimedEdge = tuple[int, str, str]


def normalize_edge(t: int, u: str, v: str) -> TimedEdge:
    """Return the timed edge with its endpoints in canonical order."""
    u, v = str(u), str(v)
    if v < u:
        u, v = v, u
    return (int(t), u, v)


class TemporalVertex(FrozenModel):
    """A vertex considered at one instant."""

    time: int
    vertex: str

    def as_tuple(self) -> tuple[int, str]:
        return (self.time, self.vertex)


class LinkStream(FrozenModel):
    """A link stream (T, V, E) over the inclusive integer interval [t_min, t_max].

    Edges are stored with their endpoints in canonical order, so E is a set of
    undirected timed edges. Construction does not reject invariant violations;
    use ``StreamService.validate_stream`` for that.
    """

    t_min: int
    t_max: int
    vertices: frozenset[str] = Field(default_factory=frozenset)
    edges: frozenset[TimedEdge] = Field(default_factory=frozenset)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, str, str]],
        vertices: Iterable[str] | None = None,
        t_min: int | None = None,
        t_max: int | None = None,
    ) -> "LinkStream":
        """Build a stream, de-duplicating edges and inferring missing bounds."""
        normalized = frozenset(normalize_edge(t, u, v) for t, u, v in edges)
        if normalized:
            times = [t for t, _, _ in normalized]
            t_min = min(times) if t_min is None else t_min
            t_max = max(times) if t_max is None else t_max
        elif t_min is None or t_max is None:
            raise BadRequestError(
                "cannot infer the time interval of a stream without edges"
            )
        if vertices is None:
            vertex_set = frozenset(x for _, u, v in normalized for x in (u, v))
        else:
            vertex_set = frozenset(str(x) for x in vertices)
        return cls(t_min=t_min, t_max=t_max, vertices=vertex_set, edges=normalized)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkStream):
            return NotImplemented
        return (
            self.t_min == other.t_min
            and self.t_max == other.t_max
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.t_min, self.t_max, self.vertices, self.edges))

    @property
    def tau(self) -> int:
        """Number of instants |T|."""
        return max(self.t_max - self.t_min + 1, 0)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_order(self) -> tuple[str, ...]:
        """Canonical vertex order: sorted identifiers, endpoints included."""
        endpoints = {x for _, u, v in self.edges for x in (u, v)}
        return tuple(sorted(self.vertices | endpoints))

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        """Dense integer index of each vertex in canonical order."""
        return {vertex: i for i, vertex in enumerate(self.vertex_order)}

    @cached_property
    def pair_times(self) -> dict[tuple[str, str], tuple[int, ...]]:
        """Sorted activity instants of every vertex pair."""
        times: dict[tuple[str, str], list[int]] = defaultdict(list)
        for t, u, v in self.edges:
            times[(u, v)].append(t)
        return {pair: tuple(sorted(ts)) for pair, ts in times.items()}

    def has_edge(self, t: int, u: str, v: str) -> bool:
        return normalize_edge(t, u, v) in self.edges

    def sorted_edges(self) -> list[TimedEdge]:
        return sorted(self.edges)
