from enum import Enum

from pydantic import BaseModel, computed_field


class ViolationKind(str, Enum):
    EMPTY_INTERVAL = "empty interval"
    TIME_OUT_OF_INTERVAL = "time out of interval"
    SELF_LOOP = "self-loop"
    UNKNOWN_VERTEX = "unknown vertex"
    GAMMA_EDGE_MISSING = "gamma-edge not in stream"
    SHARED_TEMPORAL_VERTEX = "shared temporal vertex"


class Violation(BaseModel):
    kind: ViolationKind
    detail: str


class ValidationReport(BaseModel):
    """Outcome of a validation: ok, or the list of violations found."""

    violations: list[Violation] = []

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}
