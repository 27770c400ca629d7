from fastapi import APIRouter

from linkmatch.api.v1.endpoints.generator.router import router as generator_router
from linkmatch.api.v1.endpoints.health import router as health_router
from linkmatch.api.v1.endpoints.matchings.router import router as matchings_router
from linkmatch.api.v1.endpoints.reductions.router import router as reductions_router
from linkmatch.api.v1.endpoints.streams.router import router as streams_router

router = APIRouter()

router.include_router(health_router, tags=["health"])
router.include_router(streams_router, prefix="/streams", tags=["streams"])
router.include_router(matchings_router, prefix="/matchings", tags=["matchings"])
router.include_router(reductions_router, prefix="/reductions", tags=["reductions"])
router.include_router(generator_router, prefix="/generator", tags=["generator"])
