import logging
from collections import defaultdict
from fractions import Fraction

from linkmatch.exceptions import BadRequestError
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.kernel import KernelOutcome, KernelStats, KernelVerdict
from linkmatch.models.stream import LinkStream
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.stream_service import StreamService, check_gamma

logger = logging.getLogger(__name__)


def kernel_edge_bound(k: int, gamma: int) -> int:
    """Upper bound 2(k-1)(2k-1)gamma^2 on the kernel's timed edges."""
    return 2 * (k - 1) * (2 * k - 1) * gamma * gamma


def kernel_pool_bound(k: int, gamma: int) -> int:
    """Upper bound 2(k-1)(2k-1)gamma on the kernel's gamma-edge pool."""
    return 2 * (k - 1) * (2 * k - 1) * gamma


class KernelService:
    """Kernelization of gamma-matching parameterized by the solution size k."""

    def __init__(
        self,
        approx_service: ApproxService | None = None,
        stream_service: StreamService | None = None,
    ):
        self.streams = stream_service or StreamService()
        self.approx = approx_service or ApproxService(stream_service=self.streams)

    def kernelize(
        self,
        stream: LinkStream,
        gamma: int,
        k: int,
        gamma_edges: list[GammaEdge] | None = None,
        greedy: GammaMatching | None = None,
    ) -> KernelOutcome:
        """Answer directly from the greedy matching, or prune to an equivalent instance.

        With l the greedy size: l >= k is a solution, 2l < k rules out any
        solution, and otherwise the kernel keeps only timed edges of gamma-edges
        near the greedy matching's bottom temporal vertices.
        """
        check_gamma(gamma)
        if k < 1:
            raise BadRequestError(f"k must be >= 1, got {k}")
        if gamma_edges is None:
            gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        if greedy is None:
            greedy = self.approx.greedy_matching(stream, gamma, gamma_edges)
        size = len(greedy)
        stats = KernelStats(input_edges=stream.m, greedy_size=size, k=k)
        if size >= k:
            logger.info("greedy size %d >= k=%d: solution found", size, k)
            return KernelOutcome(
                verdict=KernelVerdict.SOLUTION_FOUND,
                gamma=gamma,
                k=k,
                greedy=greedy,
                matching=greedy,
                stats=stats,
            )
        if 2 * size < k:
            logger.info("greedy size %d < k/2 with k=%d: no solution", size, k)
            return KernelOutcome(
                verdict=KernelVerdict.NO_SOLUTION,
                gamma=gamma,
                k=k,
                greedy=greedy,
                stats=stats,
            )
        return self.prune(stream, gamma, k, greedy, gamma_edges)

    def prune(
        self,
        stream: LinkStream,
        gamma: int,
        k: int,
        greedy: GammaMatching | None = None,
        gamma_edges: list[GammaEdge] | None = None,
    ) -> KernelOutcome:
        """Build the gamma-edge pool and the pruned stream unconditionally."""
        check_gamma(gamma)
        if k < 1:
            raise BadRequestError(f"k must be >= 1, got {k}")
        if gamma_edges is None:
            gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        if greedy is None:
            greedy = self.approx.greedy_matching(stream, gamma, gamma_edges)

        # gamma-edges by (start, endpoint), partners in canonical order
        incident: dict[tuple[int, str], list[tuple[str, GammaEdge]]] = defaultdict(list)
        for edge in gamma_edges:
            incident[(edge.start, edge.u)].append((edge.v, edge))
            incident[(edge.start, edge.v)].append((edge.u, edge))

        keep = 2 * k - 1
        pool: set[GammaEdge] = set()
        for bottom in self.approx.bottom_vertices(greedy):
            first = max(stream.t_min, bottom.time - gamma + 1)
            for start in range(first, bottom.time + 1):
                candidates = sorted(
                    incident.get((start, bottom.vertex), ()), key=lambda c: c[0]
                )
                pool.update(edge for _, edge in candidates[:keep])

        kernel_edges = frozenset(e for edge in pool for e in edge.timed_edges())
        kernel = LinkStream(
            t_min=stream.t_min,
            t_max=stream.t_max,
            vertices=stream.vertices,
            edges=kernel_edges,
        )
        stats = KernelStats(
            input_edges=stream.m,
            kernel_edges=kernel.m,
            pool_size=len(pool),
            greedy_size=len(greedy),
            k=k,
        )
        logger.info(
            "kernel for k=%d: %d gamma-edges in pool, %d -> %d timed edges",
            k,
            len(pool),
            stream.m,
            kernel.m,
        )
        return KernelOutcome(
            verdict=KernelVerdict.KERNEL,
            gamma=gamma,
            k=k,
            greedy=greedy,
            stream=kernel,
            pool=sorted(pool, key=lambda e: e.sort_key),
            stats=stats,
        )

    def kernel_gamma_edge_ratio(
        self, source: LinkStream, kernel: LinkStream, gamma: int
    ) -> Fraction:
        """Gamma-edges of the kernel over gamma-edges of its input; 0/0 counts as 1."""
        before = len(self.streams.enumerate_gamma_edges(source, gamma))
        after = len(self.streams.enumerate_gamma_edges(kernel, gamma))
        if before == 0:
            return Fraction(1)
        return Fraction(after, before)
