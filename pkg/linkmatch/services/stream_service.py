import logging

from pydantic import BaseModel

from linkmatch.exceptions import BadRequestError
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.report import ValidationReport, Violation, ViolationKind
from linkmatch.models.stream import LinkStream, TemporalVertex

logger = logging.getLogger(__name__)


class StreamSummary(BaseModel):
    vertices: int
    instants: int
    edges: int
    t_min: int
    t_max: int


def check_gamma(gamma: int) -> None:
    if gamma < 1:
        raise BadRequestError(f"gamma must be >= 1, got {gamma}")


class StreamService:
    """Service for link streams: validation, gamma-edges and matchings."""

    def validate_stream(self, stream: LinkStream) -> ValidationReport:
        """Check the link-stream invariants, naming every offending edge."""
        violations: list[Violation] = []
        if stream.t_min > stream.t_max:
            violations.append(
                Violation(
                    kind=ViolationKind.EMPTY_INTERVAL,
                    detail=f"[{stream.t_min}, {stream.t_max}] is empty",
                )
            )
        for t, u, v in stream.sorted_edges():
            edge = f"({t},{{{u},{v}}})"
            if not stream.t_min <= t <= stream.t_max:
                violations.append(
                    Violation(
                        kind=ViolationKind.TIME_OUT_OF_INTERVAL,
                        detail=f"{edge} outside [{stream.t_min}, {stream.t_max}]",
                    )
                )
            if u == v:
                violations.append(Violation(kind=ViolationKind.SELF_LOOP, detail=edge))
            for x in {u, v} - stream.vertices:
                violations.append(
                    Violation(
                        kind=ViolationKind.UNKNOWN_VERTEX,
                        detail=f"{edge} uses vertex '{x}' not in V",
                    )
                )
        return ValidationReport(violations=violations)

    def temporal_vertices_of(self, edge: GammaEdge) -> frozenset[TemporalVertex]:
        return edge.temporal_vertices()

    def independent(self, first: GammaEdge, second: GammaEdge) -> bool:
        """True iff the two gamma-edges share no temporal vertex."""
        if first.gamma != second.gamma:
            raise BadRequestError(
                f"cannot compare gamma-edges with gamma {first.gamma} and {second.gamma}"
            )
        if not {first.u, first.v} & {second.u, second.v}:
            return True
        return abs(first.start - second.start) >= first.gamma

    def enumerate_gamma_edges(self, stream: LinkStream, gamma: int) -> list[GammaEdge]:
        """All gamma-edges present in the stream, in canonical order.

        Each pair's activity instants are split into runs of consecutive
        instants; a run of length r yields r - gamma + 1 gamma-edges.
        """
        check_gamma(gamma)
        found: list[tuple[int, str, str]] = []
        if gamma > stream.tau:
            return []
        for (u, v), times in stream.pair_times.items():
            if u == v:
                continue
            run_start = None
            previous = None
            for t in times:
                if not stream.t_min <= t <= stream.t_max:
                    continue
                if previous is None or t != previous + 1:
                    run_start = t
                previous = t
                if t - run_start + 1 >= gamma:
                    found.append((t - gamma + 1, u, v))
        found.sort()
        logger.debug("%d gamma-edges for gamma=%d over %d edges", len(found), gamma, stream.m)
        return [
            GammaEdge.model_construct(start=start, u=u, v=v, gamma=gamma)
            for start, u, v in found
        ]

    def validate_matching(
        self, stream: LinkStream, matching: GammaMatching
    ) -> ValidationReport:
        """Check that every member exists in the stream and members are independent."""
        violations: list[Violation] = []
        members = matching.sorted_members()
        for edge in members:
            if not edge.exists_in(stream):
                violations.append(
                    Violation(kind=ViolationKind.GAMMA_EDGE_MISSING, detail=str(edge))
                )
        owner: dict[tuple[int, str], GammaEdge] = {}
        reported: set[tuple[GammaEdge, GammaEdge]] = set()
        for edge in members:
            for t in range(edge.start, edge.end + 1):
                for x in (edge.u, edge.v):
                    other = owner.setdefault((t, x), edge)
                    if other is edge or (other, edge) in reported:
                        continue
                    reported.add((other, edge))
                    violations.append(
                        Violation(
                            kind=ViolationKind.SHARED_TEMPORAL_VERTEX,
                            detail=f"{other} and {edge} share ({t},{x})",
                        )
                    )
        return ValidationReport(violations=violations)

    def is_maximal(
        self, stream: LinkStream, matching: GammaMatching
    ) -> bool:
        """True iff no gamma-edge of the stream can be added to the matching."""
        used = {
            (tv.time, tv.vertex)
            for edge in matching.members
            for tv in edge.temporal_vertices()
        }
        for edge in self.enumerate_gamma_edges(stream, matching.gamma):
            if edge in matching.members:
                continue
            if all(
                (t, x) not in used
                for t in range(edge.start, edge.end + 1)
                for x in (edge.u, edge.v)
            ):
                return False
        return True

    def stream_summary(self, stream: LinkStream) -> StreamSummary:
        return StreamSummary(
            vertices=stream.n,
            instants=stream.tau,
            edges=stream.m,
            t_min=stream.t_min,
            t_max=stream.t_max,
        )

    def restrict(self, stream: LinkStream, t_start: int, t_end: int) -> LinkStream:
        """The piece of the stream inside [t_start, t_end], vertex set unchanged."""
        if t_start > t_end:
            raise BadRequestError(f"empty window [{t_start}, {t_end}]")
        return LinkStream(
            t_min=t_start,
            t_max=t_end,
            vertices=stream.vertices,
            edges=frozenset(e for e in stream.edges if t_start <= e[0] <= t_end),
        )
