import logging

import numpy as np

from linkmatch.config import Settings, get_settings
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import LinkStream, TemporalVertex
from linkmatch.services.stream_service import StreamService, check_gamma

logger = logging.getLogger(__name__)


class DenseMarks:
    """Occupancy bitmap over vertices x instants."""

    def __init__(self, vertex_count: int, instants: int):
        self.cells = np.zeros((vertex_count, instants), dtype=bool)

    def any_marked(self, vertex: int, offset: int, gamma: int) -> bool:
        return bool(self.cells[vertex, offset : offset + gamma].any())

    def mark(self, vertex: int, offset: int, gamma: int) -> None:
        self.cells[vertex, offset : offset + gamma] = True


class SparseMarks:
    """Occupancy as a set of (vertex, offset) cells, for streams too large for a bitmap."""

    def __init__(self) -> None:
        self.cells: set[tuple[int, int]] = set()

    def any_marked(self, vertex: int, offset: int, gamma: int) -> bool:
        return any((vertex, o) in self.cells for o in range(offset, offset + gamma))

    def mark(self, vertex: int, offset: int, gamma: int) -> None:
        self.cells.update((vertex, o) for o in range(offset, offset + gamma))


class ApproxService:
    """Greedy maximal gamma-matching (a 2-approximation) and its bottom vertices."""

    def __init__(
        self,
        settings: Settings | None = None,
        stream_service: StreamService | None = None,
    ):
        self.settings = settings or get_settings()
        self.streams = stream_service or StreamService()

    def _marks(self, stream: LinkStream) -> DenseMarks | SparseMarks:
        cells = len(stream.vertex_order) * stream.tau
        if cells <= self.settings.dense_mark_threshold:
            return DenseMarks(len(stream.vertex_order), stream.tau)
        logger.info("using sparse occupancy for %d cells", cells)
        return SparseMarks()

    def greedy_matching(
        self,
        stream: LinkStream,
        gamma: int,
        gamma_edges: list[GammaEdge] | None = None,
        mark_rejected: bool = False,
    ) -> GammaMatching:
        """Scan gamma-edges in canonical order, keeping those whose temporal vertices are all free.

        Kept gamma-edges mark their 2*gamma temporal vertices as occupied.
        ``mark_rejected`` also marks the temporal vertices of skipped
        gamma-edges; that variant is not maximal in general and is kept only
        for comparison.
        """
        check_gamma(gamma)
        if gamma_edges is None:
            gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        index = stream.vertex_index
        marks = self._marks(stream)
        selected: list[GammaEdge] = []
        for edge in gamma_edges:
            u, v = index[edge.u], index[edge.v]
            offset = edge.start - stream.t_min
            free = not (
                marks.any_marked(u, offset, gamma) or marks.any_marked(v, offset, gamma)
            )
            if free:
                selected.append(edge)
            if free or mark_rejected:
                marks.mark(u, offset, gamma)
                marks.mark(v, offset, gamma)
        logger.info(
            "greedy gamma-matching of size %d from %d gamma-edges (gamma=%d)",
            len(selected),
            len(gamma_edges),
            gamma,
        )
        return GammaMatching(gamma=gamma, members=frozenset(selected))

    def bottom_vertices(self, matching: GammaMatching) -> frozenset[TemporalVertex]:
        """Last-instant temporal vertices of every member: exactly 2|matching| of them."""
        return frozenset(
            vertex for edge in matching.members for vertex in edge.bottom_vertices()
        )
