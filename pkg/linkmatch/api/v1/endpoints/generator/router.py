from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from linkmatch.api.v1.endpoints.generator.schemas import (
    GeneratorRequest,
    GeneratorResponse,
)
from linkmatch.dependencies import SettingsDep
from linkmatch.schemas.common import ApiResponse, StreamPayload
from linkmatch.services.generator_service import GeneratorService

router = APIRouter()


@router.post("")
async def generate_stream(
    request: GeneratorRequest,
    settings: SettingsDep,
) -> ApiResponse[GeneratorResponse]:
    """Seeded random link stream from moving particle groups."""
    service = GeneratorService(settings)
    config = service.default_config(**request.model_dump())
    stream = await run_in_threadpool(service.generate, config)
    return ApiResponse(
        data=GeneratorResponse(
            metadata=service.metadata(config),
            stream=StreamPayload.from_stream(stream),
        ),
        message=f"generated {stream.m} timed edges",
    )
