from pydantic import BaseModel, Field

from linkmatch.schemas.common import MatchingPayload, StreamPayload


class ReductionRequest(BaseModel):
    """A formula as DIMACS text or as signed-literal clauses."""

    dimacs: str | None = None
    variable_count: int | None = Field(default=None, ge=1)
    clauses: list[list[int]] | None = None
    assignment: dict[int, bool] | None = None


class ReductionResponse(BaseModel):
    gamma: int
    target: int
    variables: int
    clauses: int
    satisfiable: bool
    stream: StreamPayload
    matching: MatchingPayload | None = None
