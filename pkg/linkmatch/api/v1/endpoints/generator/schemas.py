from pydantic import BaseModel, Field

from linkmatch.schemas.common import StreamPayload


class GeneratorRequest(BaseModel):
    """Overrides of the configured generator defaults."""

    group_count: int | None = Field(default=None, ge=1)
    particles_per_group: int | None = Field(default=None, ge=1)
    radius: float | None = Field(default=None, gt=0)
    friction: float | None = Field(default=None, ge=0, le=1)
    wind: float | None = Field(default=None, ge=0)
    max_speed: float | None = Field(default=None, gt=0)
    arena_width: float | None = Field(default=None, gt=0)
    arena_height: float | None = Field(default=None, gt=0)
    duration: int | None = Field(default=None, ge=1)
    seed: int | None = Field(default=None, ge=0)


class GeneratorResponse(BaseModel):
    metadata: dict[str, object]
    stream: StreamPayload
