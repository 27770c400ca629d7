import logging

import numpy as np
from pydantic import ValidationError

from linkmatch import __version__
from linkmatch.config import Settings, get_settings
from linkmatch.exceptions import BadRequestError
from linkmatch.models.generator import GeneratorConfig, ParticleState
from linkmatch.models.stream import LinkStream, TimedEdge, normalize_edge

logger = logging.getLogger(__name__)

# same cell plus half of the 8-neighbourhood: every pair of adjacent cells once
NEIGHBOUR_OFFSETS = ((0, 0), (1, -1), (1, 0), (1, 1), (0, 1))


class GeneratorService:
    """Random link streams from groups of particles moving in a 2D arena.

    Each step, a particle keeps a ``friction`` fraction of its velocity, gets a
    random push of norm at most ``wind``, is capped at ``max_speed`` and
    bounces off the arena walls. Two groups are linked at an instant when any
    two of their particles are closer than ``radius``.
    """

    PRNG = "numpy.random.PCG64"

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()

    def default_config(self, **overrides: object) -> GeneratorConfig:
        """Settings defaults, overridden by every non-None keyword."""
        s = self.settings
        values: dict[str, object] = {
            "group_count": s.generator_groups,
            "particles_per_group": s.generator_particles_per_group,
            "radius": s.generator_radius,
            "friction": s.generator_friction,
            "wind": s.generator_wind,
            "max_speed": s.generator_max_speed,
            "arena_width": s.generator_arena_width,
            "arena_height": s.generator_arena_height,
            "duration": s.generator_duration,
            "seed": s.generator_seed,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return GeneratorConfig(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = ".".join(str(part) for part in error["loc"])
            raise BadRequestError(f"invalid generator config {field}: {error['msg']}") from None

    def rng(self, config: GeneratorConfig) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(config.seed))

    def initial_state(
        self, config: GeneratorConfig, rng: np.random.Generator
    ) -> ParticleState:
        """Uniform positions over the arena, zero velocities, round-robin groups."""
        count = config.particle_count
        positions = rng.uniform(
            (0.0, 0.0), (config.arena_width, config.arena_height), size=(count, 2)
        )
        return ParticleState(
            positions=positions,
            velocities=np.zeros((count, 2)),
            groups=np.arange(count) % config.group_count,
        )

    def step(
        self, state: ParticleState, config: GeneratorConfig, rng: np.random.Generator
    ) -> ParticleState:
        count = len(state.groups)
        angle = rng.uniform(0.0, 2 * np.pi, count)
        magnitude = config.wind * np.sqrt(rng.uniform(0.0, 1.0, count))
        push = np.column_stack((magnitude * np.cos(angle), magnitude * np.sin(angle)))
        velocities = config.friction * state.velocities + push

        speed = np.hypot(velocities[:, 0], velocities[:, 1])
        too_fast = speed > config.max_speed
        velocities[too_fast] *= (config.max_speed / speed[too_fast])[:, None]

        bounds = np.array([config.arena_width, config.arena_height])
        positions = state.positions + velocities
        below = positions < 0
        above = positions > bounds
        positions = np.where(below, -positions, positions)
        positions = np.where(above, 2 * bounds - positions, positions)
        velocities = np.where(below | above, -velocities, velocities)
        np.clip(positions, 0.0, bounds, out=positions)
        return ParticleState(positions=positions, velocities=velocities, groups=state.groups)

    def contact_pairs(self, state: ParticleState, radius: float) -> np.ndarray:
        """Sorted unique (g1, g2) group pairs, g1 < g2, with particles closer than radius.

        Particles are bucketed in square cells of side ``radius`` so only
        particles in the same or adjacent cells are compared.
        """
        positions, groups = state.positions, state.groups
        cells = np.floor(positions / radius).astype(np.int64)
        cells -= cells.min(axis=0) - 1
        span = int(cells[:, 1].max()) + 2
        keys = cells[:, 0] * span + cells[:, 1]
        order = np.argsort(keys, kind="stable")
        sorted_keys = keys[order]
        particles = np.arange(len(keys))

        found = [np.empty((0, 2), dtype=np.int64)]
        for dx, dy in NEIGHBOUR_OFFSETS:
            target = keys + dx * span + dy
            low = np.searchsorted(sorted_keys, target, side="left")
            high = np.searchsorted(sorted_keys, target, side="right")
            counts = high - low
            total = int(counts.sum())
            if total == 0:
                continue
            first = np.repeat(particles, counts)
            within = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            second = order[np.repeat(low, counts) + within]
            if (dx, dy) == (0, 0):
                keep = first < second
                first, second = first[keep], second[keep]
            delta = positions[first] - positions[second]
            close = np.einsum("ij,ij->i", delta, delta) < radius * radius
            g1, g2 = groups[first[close]], groups[second[close]]
            cross = g1 != g2
            found.append(
                np.column_stack((np.minimum(g1, g2)[cross], np.maximum(g1, g2)[cross]))
            )
        return np.unique(np.concatenate(found), axis=0)

    def edges_at(
        self, state: ParticleState, config: GeneratorConfig, t: int
    ) -> set[TimedEdge]:
        return {
            normalize_edge(t, config.group_name(int(a)), config.group_name(int(b)))
            for a, b in self.contact_pairs(state, config.radius)
        }

    def generate(self, config: GeneratorConfig) -> LinkStream:
        """Run ``duration`` instants from a seeded initial state; deterministic per seed."""
        rng = self.rng(config)
        state = self.initial_state(config, rng)
        edges: set[TimedEdge] = set()
        for t in range(config.duration):
            if t > 0:
                state = self.step(state, config, rng)
            edges.update(self.edges_at(state, config, t))
        stream = LinkStream(
            t_min=0,
            t_max=config.duration - 1,
            vertices=frozenset(config.group_name(g) for g in range(config.group_count)),
            edges=frozenset(edges),
        )
        logger.info(
            "generated %d timed edges over %d groups and %d instants (seed %d)",
            stream.m,
            config.group_count,
            config.duration,
            config.seed,
        )
        return stream

    def metadata(self, config: GeneratorConfig) -> dict[str, object]:
        """Sidecar content: full config, seed and PRNG identity."""
        return {
            **config.model_dump(),
            "prng": self.PRNG,
            "generator_version": __version__,
        }
