from enum import Enum

from pydantic import BaseModel

from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import LinkStream


class KernelVerdict(str, Enum):
    SOLUTION_FOUND = "solution_found"
    NO_SOLUTION = "no_solution"
    KERNEL = "kernel"


class KernelStats(BaseModel):
    """Sizes recorded by one kernelization run."""

    input_edges: int
    kernel_edges: int | None = None
    pool_size: int | None = None
    greedy_size: int
    k: int

    @property
    def edge_ratio(self) -> float | None:
        if self.kernel_edges is None:
            return None
        if self.input_edges == 0:
            return 1.0
        return self.kernel_edges / self.input_edges


class KernelOutcome(BaseModel):
    """Result of kernelization for parameter k.

    ``matching`` is set for SOLUTION_FOUND, ``stream`` and ``pool`` for KERNEL.
    """

    verdict: KernelVerdict
    gamma: int
    k: int
    greedy: GammaMatching
    matching: GammaMatching | None = None
    stream: LinkStream | None = None
    pool: list[GammaEdge] | None = None
    stats: KernelStats
