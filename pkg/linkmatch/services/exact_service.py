import logging
import sys

from linkmatch.config import Settings, get_settings
from linkmatch.exceptions import (
    BadRequestError,
    BudgetExceededError,
    InstanceTooLargeError,
)
from linkmatch.models.exact import ExactResult
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import LinkStream
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.stream_service import StreamService, check_gamma

logger = logging.getLogger(__name__)


class BranchAndBound:
    """Take-or-skip search over gamma-edges in canonical order.

    Temporal vertices are integer cells ``vertex * tau + offset``. The
    canonically smallest remaining gamma-edge is taken without branching when
    no remaining gamma-edge competes with it on one of its endpoints: some
    optimum then contains it.
    """

    def __init__(
        self,
        stream: LinkStream,
        gamma_edges: list[GammaEdge],
        incumbent: list[int],
        budget: int,
        target: int | None = None,
    ):
        self.gamma = gamma_edges[0].gamma if gamma_edges else 1
        self.budget = budget
        self.target = target
        index = stream.vertex_index
        tau = stream.tau
        self.starts = [e.start for e in gamma_edges]
        self.ends = [e.end for e in gamma_edges]
        self.ends_u = [index[e.u] for e in gamma_edges]
        self.ends_v = [index[e.v] for e in gamma_edges]
        self.cells = [
            tuple(
                x * tau + (t - stream.t_min)
                for x in (self.ends_u[i], self.ends_v[i])
                for t in range(e.start, e.end + 1)
            )
            for i, e in enumerate(gamma_edges)
        ]
        self.size = len(gamma_edges)
        self.occupied = bytearray(len(stream.vertex_order) * tau)
        self.u_rivals, self.v_rivals = self._rivals()
        self.selected: list[int] = []
        self.best = list(incumbent)
        self.nodes = 0

    def _rivals(self) -> tuple[list[list[int]], list[list[int]]]:
        """Later gamma-edges overlapping each gamma-edge through its u (resp. v) endpoint."""
        u_rivals: list[list[int]] = []
        v_rivals: list[list[int]] = []
        for i in range(self.size):
            a, b = self.ends_u[i], self.ends_v[i]
            on_u, on_v = [], []
            j = i + 1
            while j < self.size and self.starts[j] <= self.ends[i]:
                pair = (self.ends_u[j], self.ends_v[j])
                if a in pair:
                    on_u.append(j)
                if b in pair:
                    on_v.append(j)
                j += 1
            u_rivals.append(on_u)
            v_rivals.append(on_v)
        return u_rivals, v_rivals

    @property
    def done(self) -> bool:
        return self.target is not None and len(self.best) >= self.target

    def _free(self, i: int) -> bool:
        occupied = self.occupied
        return not any(occupied[c] for c in self.cells[i])

    def _take(self, i: int) -> None:
        for c in self.cells[i]:
            self.occupied[c] = 1
        self.selected.append(i)

    def _release(self) -> None:
        for c in self.cells[self.selected.pop()]:
            self.occupied[c] = 0

    def _forced(self, i: int) -> bool:
        return not any(self._free(j) for j in self.u_rivals[i]) or not any(
            self._free(j) for j in self.v_rivals[i]
        )

    def _upper_bound(self, i: int) -> int:
        """Bound on how many remaining gamma-edges can still be added.

        Minimum of the free gamma-edge count, twice a greedy matching over
        them, and half the sum over vertices of disjoint windows per vertex.
        """
        count = greedy = windows = 0
        used: set[int] = set()
        last_end: dict[int, int] = {}
        for j in range(i, self.size):
            if not self._free(j):
                continue
            count += 1
            cells = self.cells[j]
            if used.isdisjoint(cells):
                greedy += 1
                used.update(cells)
            for x in (self.ends_u[j], self.ends_v[j]):
                if self.starts[j] > last_end.get(x, -1 << 62):
                    windows += 1
                    last_end[x] = self.ends[j]
        return min(count, 2 * greedy, windows // 2)

    def run(self) -> list[int]:
        limit = sys.getrecursionlimit()
        if limit < 2 * self.size + 200:
            sys.setrecursionlimit(2 * self.size + 200)
        if not self.done:
            self._search(0)
        return self.best

    def _search(self, i: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.budget, self.nodes)
        forced = 0
        try:
            while True:
                while i < self.size and not self._free(i):
                    i += 1
                if len(self.selected) > len(self.best):
                    self.best = list(self.selected)
                    logger.debug("incumbent %d after %d nodes", len(self.best), self.nodes)
                if self.done or i == self.size:
                    return
                threshold = len(self.best)
                if self.target is not None:
                    threshold = max(threshold, self.target - 1)
                if len(self.selected) + self._upper_bound(i) <= threshold:
                    return
                if not self._forced(i):
                    break
                self._take(i)
                forced += 1
                i += 1
            self._take(i)
            try:
                self._search(i + 1)
            finally:
                self._release()
            if not self.done:
                self._search(i + 1)
        finally:
            for _ in range(forced):
                self._release()


class ExactService:
    """Exact maximum gamma-matching, used as a correctness oracle."""

    def __init__(
        self,
        settings: Settings | None = None,
        approx_service: ApproxService | None = None,
        stream_service: StreamService | None = None,
    ):
        self.settings = settings or get_settings()
        self.streams = stream_service or StreamService()
        self.approx = approx_service or ApproxService(self.settings, self.streams)

    def check_size(
        self, stream: LinkStream, gamma: int, force: bool = False
    ) -> list[GammaEdge]:
        """Enumerate gamma-edges, refusing instances above the configured cap unless forced."""
        gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        cap = self.settings.exact_max_gamma_edges
        if len(gamma_edges) > cap and not force:
            raise InstanceTooLargeError(len(gamma_edges), cap)
        return gamma_edges

    def _search(
        self,
        stream: LinkStream,
        gamma: int,
        gamma_edges: list[GammaEdge],
        node_budget: int | None,
        target: int | None,
    ) -> tuple[list[GammaEdge], int]:
        greedy = self.approx.greedy_matching(stream, gamma, gamma_edges)
        position = {edge: i for i, edge in enumerate(gamma_edges)}
        incumbent = sorted(position[e] for e in greedy.members)
        search = BranchAndBound(
            stream,
            gamma_edges,
            incumbent,
            budget=node_budget or self.settings.exact_node_budget,
            target=target,
        )
        best = search.run()
        logger.info(
            "exact search: best %d (greedy %d) over %d gamma-edges in %d nodes",
            len(best),
            len(incumbent),
            len(gamma_edges),
            search.nodes,
        )
        return [gamma_edges[i] for i in best], search.nodes

    def exact_maximum(
        self,
        stream: LinkStream,
        gamma: int,
        node_budget: int | None = None,
        gamma_edges: list[GammaEdge] | None = None,
    ) -> ExactResult:
        """A maximum gamma-matching, or BudgetExceededError if the budget runs out."""
        check_gamma(gamma)
        if gamma_edges is None:
            gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        witness, nodes = self._search(stream, gamma, gamma_edges, node_budget, None)
        return ExactResult(
            optimum=len(witness),
            witness=GammaMatching(gamma=gamma, members=frozenset(witness)),
            explored_nodes=nodes,
        )

    def exact_decision(
        self,
        stream: LinkStream,
        gamma: int,
        k: int,
        node_budget: int | None = None,
        gamma_edges: list[GammaEdge] | None = None,
    ) -> bool:
        """True iff the stream has a gamma-matching of size at least k."""
        check_gamma(gamma)
        if k < 0:
            raise BadRequestError(f"k must be >= 0, got {k}")
        if k == 0:
            return True
        # each member consumes 2*gamma temporal vertices
        if k > (len(stream.vertex_order) * stream.tau) // (2 * gamma):
            return False
        if gamma_edges is None:
            gamma_edges = self.streams.enumerate_gamma_edges(stream, gamma)
        if len(gamma_edges) < k:
            return False
        witness, _ = self._search(stream, gamma, gamma_edges, node_budget, k)
        return len(witness) >= k
