from typing import Annotated

from fastapi import Depends

from linkmatch.config import Settings, get_settings
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.exact_service import ExactService
from linkmatch.services.kernel_service import KernelService


def get_approx_service(
    settings: Annotated[Settings, Depends(get_settings)],
) -> ApproxService:
    return ApproxService(settings)


def get_exact_service(
    settings: Annotated[Settings, Depends(get_settings)],
) -> ExactService:
    return ExactService(settings)


def get_kernel_service(
    approx: Annotated[ApproxService, Depends(get_approx_service)],
) -> KernelService:
    return KernelService(approx)


# Type aliases for dependency injection
SettingsDep = Annotated[Settings, Depends(get_settings)]
ApproxServiceDep = Annotated[ApproxService, Depends(get_approx_service)]
ExactServiceDep = Annotated[ExactService, Depends(get_exact_service)]
KernelServiceDep = Annotated[KernelService, Depends(get_kernel_service)]
