from pydantic import BaseModel, Field


class ExperimentRecord(BaseModel):
    """One row of the experiment harness: sizes, greedy and kernel results, timings."""

    dataset: str
    delta: int | None = None
    gamma: int = Field(ge=1)
    vertices: int = Field(ge=0)
    instants: int = Field(ge=0)
    edges: int = Field(ge=0)
    gamma_edges: int = Field(ge=0)
    greedy_size: int = Field(ge=0)
    k: int = Field(ge=0)
    verdict: str
    kernel_edges: int | None = Field(default=None, ge=0)
    kernel_gamma_edges: int | None = Field(default=None, ge=0)
    time_approx: float = Field(ge=0)
    time_kernel: float = Field(ge=0)
    time_total: float = Field(ge=0)
