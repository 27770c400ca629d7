import random

import pytest

from linkmatch.config import Settings
from linkmatch.exceptions import BadRequestError, BudgetExceededError, InstanceTooLargeError
from linkmatch.services.exact_service import ExactService
from linkmatch.services.stream_service import StreamService
from tests.conftest import brute_force_optimum, build_stream


@pytest.fixture
def service() -> ExactService:
    return ExactService(Settings())


def test_no_gamma_edges(service: ExactService):
    stream = build_stream([(0, "a", "b"), (2, "a", "b")])
    result = service.exact_maximum(stream, 2)
    assert result.optimum == 0
    assert len(result.witness) == 0


def test_factor_two_instance(service: ExactService, factor_two_stream):
    result = service.exact_maximum(factor_two_stream, 2)
    assert result.optimum == 2
    assert StreamService().validate_matching(factor_two_stream, result.witness).ok
    assert service.exact_decision(factor_two_stream, 2, 2)
    assert not service.exact_decision(factor_two_stream, 2, 3)


def test_decision_k_zero_is_always_true(service: ExactService):
    stream = build_stream([], t_min=0, t_max=0, vertices=["a"])
    assert service.exact_decision(stream, 3, 0)


def test_decision_counting_bound(service: ExactService):
    stream = build_stream([(0, "a", "b"), (1, "a", "b")])
    assert service.exact_decision(stream, 2, 1)
    assert not service.exact_decision(stream, 2, 2)


def test_decision_rejects_negative_k(service: ExactService, factor_two_stream):
    with pytest.raises(BadRequestError):
        service.exact_decision(factor_two_stream, 2, -1)


def test_budget_exceeded(service: ExactService, factor_two_stream):
    with pytest.raises(BudgetExceededError) as info:
        service.exact_maximum(factor_two_stream, 2, node_budget=1)
    assert info.value.status_code == 422


def test_size_cap(factor_two_stream):
    service = ExactService(Settings(exact_max_gamma_edges=2))
    with pytest.raises(InstanceTooLargeError):
        service.check_size(factor_two_stream, 2)
    assert len(service.check_size(factor_two_stream, 2, force=True)) == 3


def test_matches_brute_force(service: ExactService, random_stream):
    rng = random.Random(17)
    streams = StreamService()
    for _ in range(60):
        stream = random_stream(rng, rng.randint(2, 5), rng.randint(2, 6), density=0.25)
        for gamma in (1, 2, 3):
            optimum = brute_force_optimum(stream, gamma)
            result = service.exact_maximum(stream, gamma)
            assert result.optimum == optimum
            assert streams.validate_matching(stream, result.witness).ok
            for k in range(optimum + 2):
                assert service.exact_decision(stream, gamma, k) == (optimum >= k)
