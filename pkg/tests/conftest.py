import random
from collections.abc import AsyncGenerator, Callable
from itertools import combinations

import pytest
import pytest_asyncio
from httpx import ASGITransport, AsyncClient

from linkmatch.config import Settings, get_settings
from linkmatch.models.gamma import GammaEdge
from linkmatch.models.stream import LinkStream
from linkmatch.services.stream_service import StreamService
from main import app

StreamFactory = Callable[..., LinkStream]


@pytest.fixture
def settings(tmp_path) -> Settings:
    """Settings with a temporary dataset directory."""
    return Settings(dataset_dir=tmp_path, exact_node_budget=2_000_000)


@pytest_asyncio.fixture(scope="function")
async def client(settings: Settings) -> AsyncGenerator[AsyncClient, None]:
    """Create test client with overridden settings."""
    app.dependency_overrides[get_settings] = lambda: settings

    async with AsyncClient(
        transport=ASGITransport(app=app),
        base_url="http://test",
    ) as ac:
        yield ac

    app.dependency_overrides.clear()


def build_stream(edges, t_min=None, t_max=None, vertices=None) -> LinkStream:
    """Stream from (t, u, v) triples."""
    return LinkStream.from_edges(edges, vertices=vertices, t_min=t_min, t_max=t_max)


@pytest.fixture
def factor_two_stream() -> LinkStream:
    """Greedy takes Γ_2(0,b,c) and blocks both gamma-edges of the optimum."""
    return build_stream(
        [(0, "b", "c"), (1, "b", "c"), (1, "a", "b"), (2, "a", "b"), (1, "c", "d"), (2, "c", "d")]
    )


@pytest.fixture
def random_stream() -> StreamFactory:
    """Factory of random streams over vertices v0.. and instants [0, tau - 1]."""

    def make(
        rng: random.Random,
        vertex_count: int,
        tau: int,
        density: float = 0.3,
        persistence: float = 0.6,
    ) -> LinkStream:
        # links tend to persist so gamma-edges actually occur
        vertices = [f"v{i}" for i in range(vertex_count)]
        edges = []
        for u, v in combinations(vertices, 2):
            active = rng.random() < density
            for t in range(tau):
                if active:
                    edges.append((t, u, v))
                    active = rng.random() < persistence
                else:
                    active = rng.random() < density / 2
        return LinkStream.from_edges(edges, vertices=vertices, t_min=0, t_max=tau - 1)

    return make


def brute_force_optimum(stream: LinkStream, gamma: int) -> int:
    """Largest set of pairwise independent gamma-edges, by plain enumeration."""
    service = StreamService()
    edges = service.enumerate_gamma_edges(stream, gamma)

    def best(i: int, chosen: list[GammaEdge]) -> int:
        if i == len(edges):
            return len(chosen)
        skip = best(i + 1, chosen)
        if all(service.independent(edges[i], c) for c in chosen):
            return max(skip, best(i + 1, [*chosen, edges[i]]))
        return skip

    return best(0, [])
