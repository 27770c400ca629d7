import random
import time
from itertools import combinations, islice

import pytest

from linkmatch.config import Settings
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import TemporalVertex
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.exact_service import ExactService
from linkmatch.services.stream_service import StreamService
from tests.conftest import build_stream


@pytest.fixture
def service() -> ApproxService:
    return ApproxService(Settings())


def g2(start: int, u: str, v: str) -> GammaEdge:
    return GammaEdge(start=start, u=u, v=v, gamma=2)


def test_no_gamma_edges_gives_empty_matching(service: ApproxService):
    stream = build_stream([(0, "a", "b"), (2, "a", "b")])
    assert len(service.greedy_matching(stream, 2)) == 0


def test_factor_two_instance(service: ApproxService, factor_two_stream):
    matching = service.greedy_matching(factor_two_stream, 2)
    assert matching.members == {g2(0, "b", "c")}
    optimum = ExactService(Settings()).exact_maximum(factor_two_stream, 2)
    assert optimum.optimum == 2
    assert optimum.witness.members == {g2(1, "a", "b"), g2(1, "c", "d")}


def test_disjoint_pairs_reach_optimum(service: ApproxService):
    stream = build_stream([(0, "a", "b"), (1, "a", "b"), (2, "c", "d"), (3, "c", "d")])
    matching = service.greedy_matching(stream, 2)
    assert matching.members == {g2(0, "a", "b"), g2(2, "c", "d")}


def test_greedy_is_valid_and_maximal(service: ApproxService, random_stream):
    streams = StreamService()
    rng = random.Random(3)
    for _ in range(40):
        stream = random_stream(rng, 7, 12)
        for gamma in (1, 2, 3):
            matching = service.greedy_matching(stream, gamma)
            assert streams.validate_matching(stream, matching).ok
            assert streams.is_maximal(stream, matching)


def test_sparse_marks_agree_with_dense(random_stream):
    dense = ApproxService(Settings())
    sparse = ApproxService(Settings(dense_mark_threshold=0))
    rng = random.Random(5)
    for _ in range(20):
        stream = random_stream(rng, 6, 10)
        assert dense.greedy_matching(stream, 2) == sparse.greedy_matching(stream, 2)


def test_marking_rejected_gamma_edges_loses_maximality(service: ApproxService):
    # the rejected Γ_2(1,b,c) would block (2,c), so Γ_2(2,c,d) is missed
    stream = build_stream([(0, "a", "b"), (1, "a", "b"), (1, "b", "c"), (2, "b", "c"), (2, "c", "d"), (3, "c", "d")])
    streams = StreamService()
    literal = service.greedy_matching(stream, 2, mark_rejected=True)
    greedy = service.greedy_matching(stream, 2)
    assert literal.members == {g2(0, "a", "b")}
    assert not streams.is_maximal(stream, literal)
    assert not g2(2, "c", "d").temporal_vertices() & service.bottom_vertices(literal)
    assert greedy.members == {g2(0, "a", "b"), g2(2, "c", "d")}
    assert streams.is_maximal(stream, greedy)


def test_bottom_vertices(service: ApproxService):
    assert service.bottom_vertices(GammaMatching(gamma=2)) == frozenset()
    single = GammaMatching(
        gamma=3, members=frozenset({GammaEdge(start=0, u="a", v="b", gamma=3)})
    )
    assert service.bottom_vertices(single) == {
        TemporalVertex(time=2, vertex="a"),
        TemporalVertex(time=2, vertex="b"),
    }
    pair = GammaMatching(gamma=2, members=frozenset({g2(0, "a", "b"), g2(2, "a", "b")}))
    assert {v.as_tuple() for v in service.bottom_vertices(pair)} == {
        (1, "a"),
        (1, "b"),
        (3, "a"),
        (3, "b"),
    }


def test_sandwich_and_bottom_vertex_property(service: ApproxService, random_stream):
    """greedy <= OPT <= 2 greedy, and every optimal member meets a greedy bottom vertex."""
    exact = ExactService(Settings(), service)
    rng = random.Random(2024)
    checked = 0
    for index in range(170):
        stream = random_stream(rng, rng.randint(2, 8), rng.randint(2, 12), density=rng.uniform(0.15, 0.45))
        for gamma in (2, 3, 5):
            greedy = service.greedy_matching(stream, gamma)
            result = exact.exact_maximum(stream, gamma)
            assert len(greedy) <= result.optimum <= 2 * len(greedy), (index, gamma)
            bottom = service.bottom_vertices(greedy)
            assert len(bottom) == 2 * len(greedy)
            for member in result.witness.members:
                assert member.temporal_vertices() & bottom, (index, gamma, str(member))
            checked += 1
    assert checked >= 500


def best_time(run, repeats: int = 3) -> float:
    timings = []
    for _ in range(repeats):
        started = time.perf_counter()
        run()
        timings.append(time.perf_counter() - started)
    return min(timings)


@pytest.mark.slow
def test_doubling_edges_at_fixed_size_stays_linear(service: ApproxService):
    vertices = [f"v{i}" for i in range(60)]
    tau = 100

    def stream_with(pair_count: int):
        pairs = list(islice(combinations(vertices, 2), pair_count))
        edges = [(t, u, v) for u, v in pairs for t in range(tau)]
        return build_stream(edges, t_min=0, t_max=tau - 1, vertices=vertices)

    base, doubled = stream_with(300), stream_with(600)
    assert doubled.m == 2 * base.m
    base_time = best_time(lambda: service.greedy_matching(base, 2))
    doubled_time = best_time(lambda: service.greedy_matching(doubled, 2))
    assert doubled_time <= 3 * base_time + 0.05
