import random
from fractions import Fraction

import pytest

from linkmatch.config import Settings
from linkmatch.exceptions import BadRequestError
from linkmatch.models.kernel import KernelVerdict
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.exact_service import ExactService
from linkmatch.services.kernel_service import (
    KernelService,
    kernel_edge_bound,
    kernel_pool_bound,
)
from tests.conftest import build_stream


@pytest.fixture
def approx() -> ApproxService:
    return ApproxService(Settings())


@pytest.fixture
def service(approx: ApproxService) -> KernelService:
    return KernelService(approx)


def five_disjoint_pairs():
    return build_stream(
        [(t, f"a{i}", f"b{i}") for i in range(5) for t in (0, 1)]
    )


def test_bounds():
    assert kernel_edge_bound(3, 2) == 2 * 2 * 5 * 4
    assert kernel_pool_bound(3, 2) == 2 * 2 * 5 * 2
    assert kernel_edge_bound(1, 5) == 0


def test_solution_found_when_greedy_is_large_enough(service: KernelService):
    outcome = service.kernelize(five_disjoint_pairs(), 2, 5)
    assert outcome.verdict is KernelVerdict.SOLUTION_FOUND
    assert outcome.matching is not None and len(outcome.matching) == 5
    assert outcome.stream is None


def test_no_solution_when_greedy_is_too_small(service: KernelService):
    stream = build_stream([(0, "a", "b"), (1, "a", "b")])
    outcome = service.kernelize(stream, 2, 3)
    assert outcome.verdict is KernelVerdict.NO_SOLUTION
    assert outcome.stats.greedy_size == 1
    assert outcome.stream is None and outcome.pool is None


def test_k_must_be_positive(service: KernelService):
    with pytest.raises(BadRequestError):
        service.kernelize(five_disjoint_pairs(), 2, 0)
    with pytest.raises(BadRequestError):
        service.prune(five_disjoint_pairs(), 2, 0)


def test_factor_two_instance_keeps_the_optimum(service: KernelService, factor_two_stream):
    outcome = service.kernelize(factor_two_stream, 2, 2)
    assert outcome.verdict is KernelVerdict.KERNEL
    assert outcome.stream is not None
    assert ExactService(Settings()).exact_decision(outcome.stream, 2, 2)
    assert {e.sort_key for e in outcome.pool} == {
        (0, "b", "c"),
        (1, "a", "b"),
        (1, "c", "d"),
    }
    assert outcome.stream.vertices == factor_two_stream.vertices
    assert (outcome.stream.t_min, outcome.stream.t_max) == (0, 2)


def test_pool_keeps_the_smallest_partners(service: KernelService):
    # star around "c": the greedy matching holds Γ_1(0,a,c), k=2 keeps 3 partners per slot
    stream = build_stream([(0, "c", x) for x in ("a", "b", "d", "e", "f")] + [(0, "y", "z")])
    outcome = service.prune(stream, 1, 2)
    kept = {(e.u, e.v) for e in outcome.pool}
    assert ("a", "c") in kept
    assert ("b", "c") in kept and ("c", "d") in kept
    assert ("c", "e") not in kept and ("c", "f") not in kept
    assert ("y", "z") in kept


def test_prune_only_builds_kernel_unconditionally(service: KernelService):
    outcome = service.prune(five_disjoint_pairs(), 2, 5)
    assert outcome.verdict is KernelVerdict.KERNEL
    assert outcome.stats.kernel_edges == 10
    assert outcome.stats.pool_size == 5
    assert outcome.stats.edge_ratio == 1.0


def test_kernel_gamma_edge_ratio(service: KernelService):
    stream = five_disjoint_pairs()
    assert service.kernel_gamma_edge_ratio(stream, stream, 2) == Fraction(1)
    empty = build_stream([], t_min=0, t_max=1, vertices=stream.vertices)
    assert service.kernel_gamma_edge_ratio(stream, empty, 2) == Fraction(0)
    assert service.kernel_gamma_edge_ratio(empty, empty, 2) == Fraction(1)


def test_kernel_soundness(service: KernelService, approx: ApproxService, random_stream):
    """Kernel and input agree on the decision for k, within the size bounds."""
    exact = ExactService(Settings(), approx)
    rng = random.Random(7)
    checked = 0
    attempts = 0
    while checked < 200 and attempts < 5000:
        attempts += 1
        stream = random_stream(rng, rng.randint(3, 8), rng.randint(4, 10), density=rng.uniform(0.2, 0.5))
        gamma = rng.choice((1, 2, 3))
        greedy = approx.greedy_matching(stream, gamma)
        size = len(greedy)
        if size == 0:
            continue
        k = size + 1
        outcome = service.kernelize(stream, gamma, k, greedy=greedy)
        assert outcome.verdict is KernelVerdict.KERNEL
        assert outcome.stream is not None
        assert outcome.stream.edges <= stream.edges
        assert outcome.stats.kernel_edges <= kernel_edge_bound(k, gamma)
        assert outcome.stats.pool_size <= kernel_pool_bound(k, gamma)
        assert set(greedy.members) <= set(outcome.pool)
        assert exact.exact_decision(stream, gamma, k) == exact.exact_decision(
            outcome.stream, gamma, k
        )
        checked += 1
    assert checked == 200
