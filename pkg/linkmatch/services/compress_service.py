import logging

from pydantic import BaseModel

from linkmatch.exceptions import BadRequestError
from linkmatch.models.stream import LinkStream

logger = logging.getLogger(__name__)


class CompressionPoint(BaseModel):
    """Size of a stream after one delta-compression."""

    delta: int
    instants: int
    edges: int


class CompressService:
    """Time-compression of link streams."""

    def check_delta(self, stream: LinkStream, delta: int) -> None:
        if not 1 < delta < stream.tau:
            raise BadRequestError(
                f"delta must satisfy 1 < delta < |T| = {stream.tau}, got {delta}"
            )

    def delta_compress(self, stream: LinkStream, delta: int) -> LinkStream:
        """Rescale time by delta: instant t' falls in bucket floor(t' / delta).

        A pair is linked at bucket t iff it is linked at some instant of
        [delta*t, delta*(t+1)). The vertex set is kept as is.
        """
        self.check_delta(stream, delta)
        edges = frozenset((t // delta, u, v) for t, u, v in stream.edges)
        compressed = LinkStream(
            t_min=stream.t_min // delta,
            t_max=stream.t_max // delta,
            vertices=stream.vertices,
            edges=edges,
        )
        logger.info(
            "delta=%d compression: %d -> %d timed edges, %d -> %d instants",
            delta,
            stream.m,
            compressed.m,
            stream.tau,
            compressed.tau,
        )
        return compressed

    def compression_profile(
        self, stream: LinkStream, deltas: list[int]
    ) -> list[CompressionPoint]:
        """Remaining instants and timed edges for each delta; invalid deltas are skipped."""
        points = []
        for delta in sorted(set(deltas)):
            try:
                compressed = self.delta_compress(stream, delta)
            except BadRequestError as exc:
                logger.warning("skipping delta=%d: %s", delta, exc.detail)
                continue
            points.append(
                CompressionPoint(
                    delta=delta, instants=compressed.tau, edges=compressed.m
                )
            )
        return points
