from fastapi import APIRouter, Query
from fastapi.concurrency import run_in_threadpool
from pydantic import ValidationError

from linkmatch.api.v1.endpoints.reductions.schemas import (
    ReductionRequest,
    ReductionResponse,
)
from linkmatch.exceptions import BadRequestError, CnfParseError
from linkmatch.models.formula import CnfFormula
from linkmatch.repositories import CnfRepository
from linkmatch.schemas.common import ApiResponse, MatchingPayload, StreamPayload
from linkmatch.services.reduction_service import ReductionService

router = APIRouter()


def _formula(request: ReductionRequest) -> CnfFormula:
    if request.dimacs is not None:
        return CnfRepository().loads(request.dimacs)
    if request.clauses is None:
        raise BadRequestError("give either dimacs or clauses")
    variables = {abs(lit) for clause in request.clauses for lit in clause}
    try:
        return CnfFormula(
            variable_count=request.variable_count or max(variables, default=1),
            clauses=tuple(tuple(clause) for clause in request.clauses),
        )
    except ValidationError as exc:
        raise CnfParseError(f"unsupported formula: {exc.errors()[0]['msg']}") from None


@router.post("")
async def reduce_formula(
    request: ReductionRequest,
    gamma: int = Query(..., ge=2),
) -> ApiResponse[ReductionResponse]:
    """Gamma-matching instance whose target size is reachable iff the formula is satisfiable."""
    formula = _formula(request)
    service = ReductionService()
    instance = await run_in_threadpool(service.reduce, formula, gamma)
    satisfiable, found = await run_in_threadpool(service.solve, formula)
    assignment = request.assignment or found
    matching = None
    if assignment is not None:
        matching = MatchingPayload.from_matching(
            service.assignment_to_matching(instance, assignment)
        )
    return ApiResponse(
        data=ReductionResponse(
            gamma=gamma,
            target=instance.target,
            variables=formula.variable_count,
            clauses=formula.clause_count,
            satisfiable=satisfiable,
            stream=StreamPayload.from_stream(instance.stream),
            matching=matching,
        )
    )
