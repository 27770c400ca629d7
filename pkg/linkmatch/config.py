from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8")

    # App
    app_name: str = "linkmatch"
    debug: bool = False
    log_level: str = "INFO"

    # Datasets
    dataset_dir: Path | None = None

    # Exact solver
    exact_node_budget: int = 10_000_000
    exact_max_gamma_edges: int = 2_000

    # Approximation: dense occupancy bitmap up to this many (vertex, instant) cells
    dense_mark_threshold: int = 100_000_000

    # Generator defaults (tuned for ~2e5 timed edges at 100 groups x 200 steps)
    generator_groups: int = 100
    generator_particles_per_group: int = 10
    generator_radius: float = 28.0
    generator_friction: float = 0.9
    generator_wind: float = 1.0
    generator_max_speed: float = 4.0
    generator_arena_width: float = 1000.0
    generator_arena_height: float = 1000.0
    generator_duration: int = 200
    generator_seed: int = 0

    # Sweep
    sweep_workers: int = 1


@lru_cache
def get_settings() -> Settings:
    return Settings()
