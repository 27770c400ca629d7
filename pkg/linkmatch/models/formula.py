from pydantic import Field, model_validator

from linkmatch.models.base import FrozenModel
from linkmatch.models.stream import LinkStream

# Signed literal: +i for x_i, -i for the negation of x_i (DIMACS convention)
Clause = tuple[int, ...]


class CnfFormula(FrozenModel):
    """A CNF formula with clauses of one to three literals over distinct variables."""

    variable_count: int = Field(ge=1)
    clauses: tuple[Clause, ...]

    @model_validator(mode="after")
    def _check_clauses(self) -> "CnfFormula":
        for index, clause in enumerate(self.clauses):
            if not 1 <= len(clause) <= 3:
                raise ValueError(f"clause {index} has {len(clause)} literals")
            variables = [abs(lit) for lit in clause]
            if any(not 1 <= x <= self.variable_count for x in variables):
                raise ValueError(f"clause {index} uses a variable out of range")
            if len(set(variables)) != len(variables):
                raise ValueError(f"clause {index} repeats a variable")
        return self

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(
            any(assignment.get(abs(lit), False) == (lit > 0) for lit in clause)
            for clause in self.clauses
        )


class ReductionInstance(FrozenModel):
    """The link stream built from a formula, with the matching size it must reach."""

    formula: CnfFormula
    stream: LinkStream
    gamma: int
    target: int
