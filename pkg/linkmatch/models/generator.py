import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class GeneratorConfig(BaseModel):
    """Parameters of the moving-particle link-stream generator."""

    model_config = ConfigDict(frozen=True)

    group_count: int = Field(ge=1)
    particles_per_group: int = Field(ge=1)
    radius: float = Field(gt=0)
    friction: float = Field(ge=0, le=1)
    wind: float = Field(ge=0)
    max_speed: float = Field(gt=0)
    arena_width: float = Field(gt=0)
    arena_height: float = Field(gt=0)
    duration: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2**64)

    @property
    def particle_count(self) -> int:
        return self.group_count * self.particles_per_group

    def group_name(self, index: int) -> str:
        return f"P{index + 1}"


class ParticleState(BaseModel):
    """Positions, velocities and group of every particle, one row per particle."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    positions: np.ndarray
    velocities: np.ndarray
    groups: np.ndarray

    @model_validator(mode="after")
    def _check_shapes(self) -> "ParticleState":
        count = len(self.groups)
        if self.positions.shape != (count, 2) or self.velocities.shape != (count, 2):
            raise ValueError("positions and velocities must be (particles, 2) arrays")
        return self

    def speeds(self) -> np.ndarray:
        return np.hypot(self.velocities[:, 0], self.velocities[:, 1])
