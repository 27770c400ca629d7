import io
from pathlib import Path

from pydantic import ValidationError
from pysat.formula import CNF

from linkmatch.exceptions import CnfParseError
from linkmatch.models.formula import CnfFormula
from linkmatch.repositories.base import BaseFileRepository


class CnfRepository(BaseFileRepository):
    """DIMACS CNF files, parsed and written through python-sat."""

    resource = "CNF file"

    def loads(self, text: str) -> CnfFormula:
        try:
            cnf = CNF(from_string=text)
        except ValueError as exc:
            raise CnfParseError(f"invalid DIMACS: {exc}") from exc
        return self.from_cnf(cnf)

    def from_cnf(self, cnf: CNF) -> CnfFormula:
        variable_count = max(cnf.nv, 1)
        try:
            return CnfFormula(
                variable_count=variable_count,
                clauses=tuple(tuple(clause) for clause in cnf.clauses),
            )
        except ValidationError as exc:
            message = exc.errors()[0]["msg"]
            raise CnfParseError(f"unsupported formula: {message}") from None

    def to_cnf(self, formula: CnfFormula) -> CNF:
        cnf = CNF(from_clauses=[list(c) for c in formula.clauses])
        cnf.nv = max(cnf.nv, formula.variable_count)
        return cnf

    def dumps(self, formula: CnfFormula) -> str:
        buffer = io.StringIO()
        self.to_cnf(formula).to_fp(buffer)
        return buffer.getvalue()

    def load(self, path: str | Path) -> CnfFormula:
        _, text = self.read_text(path)
        return self.loads(text)

    def save(self, formula: CnfFormula, path: str | Path) -> Path:
        return self.write_text(path, self.dumps(formula))
