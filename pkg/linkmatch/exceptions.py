from fastapi import HTTPException, status


class AppException(HTTPException):
    """Base exception for application errors."""

    def __init__(
        self,
        status_code: int,
        detail: str,
        headers: dict[str, str] | None = None,
    ):
        super().__init__(status_code=status_code, detail=detail, headers=headers)


class NotFoundError(AppException):
    """Input file or dataset not found."""

    def __init__(self, resource: str, resource_id: str | None = None):
        detail = f"{resource} not found"
        if resource_id:
            detail = f"{resource} '{resource_id}' not found"
        super().__init__(status_code=status.HTTP_404_NOT_FOUND, detail=detail)


class BadRequestError(AppException):
    """Usage error: invalid parameter or input."""

    def __init__(self, detail: str):
        super().__init__(status_code=status.HTTP_400_BAD_REQUEST, detail=detail)


class StreamParseError(BadRequestError):
    """Malformed link-stream file."""

    def __init__(self, detail: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        location = path or "<input>"
        if line is not None:
            location = f"{location}:{line}"
        super().__init__(f"{location}: {detail}")


class CnfParseError(BadRequestError):
    """Malformed or unsupported DIMACS formula."""


class UnsatisfiedAssignmentError(BadRequestError):
    """Assignment given to the reduction does not satisfy the formula."""

    def __init__(self, detail: str = "assignment does not satisfy formula"):
        super().__init__(detail)


class BudgetExceededError(AppException):
    """Exact search ran out of its node budget."""

    def __init__(self, budget: int, explored: int):
        self.budget = budget
        self.explored = explored
        super().__init__(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"node budget {budget} exceeded after {explored} nodes",
        )


class InstanceTooLargeError(AppException):
    """Instance above the exact solver's gamma-edge cap."""

    def __init__(self, gamma_edges: int, cap: int):
        super().__init__(
            status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
            detail=(
                f"instance has {gamma_edges} gamma-edges, above the exact solver cap "
                f"of {cap}; use force to run anyway"
            ),
        )


class PipelineStageError(AppException):
    """A pipeline stage failed."""

    def __init__(self, stage: str, detail: str):
        self.stage = stage
        super().__init__(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"stage '{stage}' failed: {detail}",
        )
