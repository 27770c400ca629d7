import random

import pytest

from linkmatch.exceptions import BadRequestError
from linkmatch.repositories import StreamRepository
from linkmatch.services.compress_service import CompressService
from tests.conftest import build_stream


@pytest.fixture
def service() -> CompressService:
    return CompressService()


def test_worked_example(service: CompressService):
    stream = build_stream([(0, "a", "b"), (5, "a", "b")], t_min=0, t_max=5)
    compressed = service.delta_compress(stream, 3)
    assert compressed.edges == {(0, "a", "b"), (1, "a", "b")}
    assert (compressed.t_min, compressed.t_max) == (0, 1)
    assert compressed.m == 2


def test_single_instant_collapses_to_one_bucket(service: CompressService):
    stream = build_stream(
        [(0, "a", "b"), (0, "b", "c"), (0, "a", "c")], t_min=0, t_max=9
    )
    compressed = service.delta_compress(stream, 2)
    assert {t for t, _, _ in compressed.edges} == {0}
    assert compressed.m == 3
    assert compressed.tau == 5


def test_vertices_are_kept(service: CompressService):
    stream = build_stream([(0, "a", "b"), (7, "a", "b")], vertices=["a", "b", "lonely"])
    assert service.delta_compress(stream, 2).vertices == {"a", "b", "lonely"}


@pytest.mark.parametrize("delta", [0, 1, 6, 10])
def test_delta_out_of_range(service: CompressService, delta: int):
    stream = build_stream([(0, "a", "b"), (5, "a", "b")], t_min=0, t_max=5)
    with pytest.raises(BadRequestError):
        service.delta_compress(stream, delta)


def test_agrees_with_set_builder_definition(service: CompressService, random_stream):
    rng = random.Random(99)
    repo = StreamRepository()
    for _ in range(100):
        stream = random_stream(rng, rng.randint(2, 7), rng.randint(3, 30))
        assert repo.loads(repo.dumps(stream))[0] == stream
        delta = rng.randint(2, stream.tau - 1)
        expected = {
            (t, u, v)
            for t in range(stream.t_min // delta, stream.t_max // delta + 1)
            for (u, v) in stream.pair_times
            if any(stream.has_edge(s, u, v) for s in range(delta * t, delta * (t + 1)))
        }
        assert service.delta_compress(stream, delta).edges == expected


def test_compression_profile_skips_invalid_deltas(service: CompressService):
    stream = build_stream(
        [(t, "a", "b") for t in range(0, 12, 2)] + [(3, "b", "c")], t_min=0, t_max=11
    )
    points = service.compression_profile(stream, [4, 1, 2, 50, 3])
    assert [p.delta for p in points] == [2, 3, 4]
    by_delta = {p.delta: p for p in points}
    assert by_delta[2].instants == 6
    assert by_delta[2].edges == 7
    assert by_delta[3].edges == 5
    assert by_delta[4].edges == 4
