from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Base class for immutable domain values."""

    model_config = ConfigDict(frozen=True)
