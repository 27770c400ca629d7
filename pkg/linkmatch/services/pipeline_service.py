import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from time import perf_counter
from typing import Any, TypeVar

from pydantic import BaseModel

from linkmatch.config import Settings, get_settings
from linkmatch.exceptions import AppException, BadRequestError, PipelineStageError
from linkmatch.models.experiment import ExperimentRecord
from linkmatch.models.gamma import GammaMatching
from linkmatch.models.kernel import KernelOutcome
from linkmatch.models.stream import LinkStream
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.compress_service import CompressService
from linkmatch.services.generator_service import GeneratorService
from linkmatch.services.kernel_service import KernelService
from linkmatch.services.stream_service import StreamService, check_gamma

logger = logging.getLogger(__name__)

T = TypeVar("T")

RECORD_COLUMNS = [
    "dataset",
    "delta",
    "gamma",
    "vertices",
    "instants",
    "edges",
    "gamma_edges",
    "greedy_size",
    "k",
    "verdict",
    "kernel_edges",
    "kernel_gamma_edges",
    "kernel_gamma_edge_ratio",
    "approx_quality_ratio",
    "optimal_certified",
    "time_approx",
    "time_kernel",
    "time_total",
]


class KMode(str, Enum):
    """How k is chosen when not given: the greedy size l, l + 1, or l with unconditional pruning."""

    GREEDY = "greedy"
    GREEDY_PLUS_ONE = "greedy+1"
    PRUNE_ONLY = "prune-only"


class PipelineResult(BaseModel):
    record: ExperimentRecord
    stream: LinkStream
    greedy: GammaMatching
    outcome: KernelOutcome


def approx_quality_ratio(record: ExperimentRecord) -> Fraction | None:
    """Greedy size over the kernel's gamma-edge count; None when undefined.

    A ratio of 1 certifies the greedy matching optimal.
    """
    if not record.kernel_gamma_edges:
        return None
    return Fraction(record.greedy_size, record.kernel_gamma_edges)


def kernel_gamma_edge_ratio(record: ExperimentRecord) -> Fraction | None:
    if record.kernel_gamma_edges is None:
        return None
    if record.gamma_edges == 0:
        return Fraction(1)
    return Fraction(record.kernel_gamma_edges, record.gamma_edges)


def optimal_certified(record: ExperimentRecord) -> bool:
    return approx_quality_ratio(record) == 1


def record_row(record: ExperimentRecord) -> dict[str, object]:
    """CSV row for a record, ratio columns included."""
    row: dict[str, object] = record.model_dump()
    kernel_ratio = kernel_gamma_edge_ratio(record)
    quality = approx_quality_ratio(record)
    row["kernel_gamma_edge_ratio"] = None if kernel_ratio is None else round(float(kernel_ratio), 6)
    row["approx_quality_ratio"] = None if quality is None else round(float(quality), 6)
    row["optimal_certified"] = optimal_certified(record)
    return row


def _run_sweep_cell(args: tuple[LinkStream, str, int | None, int, KMode]) -> ExperimentRecord | None:
    stream, dataset, delta, gamma, k_mode = args
    return PipelineService().run_cell(stream, dataset, delta, gamma, k_mode)


class PipelineService:
    """Compression, gamma-edges, greedy and kernelization chained into experiment records."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()
        self.streams = StreamService()
        self.compress = CompressService()
        self.approx = ApproxService(self.settings, self.streams)
        self.kernel = KernelService(self.approx, self.streams)
        self.generator = GeneratorService(self.settings)

    def _stage(self, stage: str, func: Callable[..., T], *args: Any) -> T:
        try:
            return func(*args)
        except AppException as exc:
            raise PipelineStageError(stage, str(exc.detail)) from exc
        except ValueError as exc:
            raise PipelineStageError(stage, str(exc)) from exc

    def run_pipeline(
        self,
        stream: LinkStream,
        gamma: int,
        delta: int | None = None,
        k: int | None = None,
        k_mode: KMode = KMode.GREEDY,
        dataset: str = "stream",
    ) -> PipelineResult:
        """Optional delta-compression, then gamma-edges, greedy and kernelization."""
        if k is not None and k < 1:
            raise BadRequestError(f"k must be >= 1, got {k}")
        started = perf_counter()
        if delta is not None:
            stream = self._stage("compress", self.compress.delta_compress, stream, delta)
        gamma_edges = self._stage(
            "gamma-edges", self.streams.enumerate_gamma_edges, stream, gamma
        )

        approx_started = perf_counter()
        greedy = self._stage(
            "approx", self.approx.greedy_matching, stream, gamma, gamma_edges
        )
        time_approx = perf_counter() - approx_started

        size = len(greedy)
        if k is None:
            k = max(size + 1 if k_mode is KMode.GREEDY_PLUS_ONE else size, 1)
        kernel_started = perf_counter()
        if k_mode is KMode.PRUNE_ONLY:
            outcome = self._stage(
                "kernelize", self.kernel.prune, stream, gamma, k, greedy, gamma_edges
            )
        else:
            outcome = self._stage(
                "kernelize",
                self.kernel.kernelize,
                stream,
                gamma,
                k,
                gamma_edges,
                greedy,
            )
        time_kernel = perf_counter() - kernel_started
        time_total = perf_counter() - started

        kernel_gamma_edges = None
        if outcome.stream is not None:
            kernel_gamma_edges = len(
                self.streams.enumerate_gamma_edges(outcome.stream, gamma)
            )
        record = ExperimentRecord(
            dataset=dataset,
            delta=delta,
            gamma=gamma,
            vertices=stream.n,
            instants=stream.tau,
            edges=stream.m,
            gamma_edges=len(gamma_edges),
            greedy_size=size,
            k=k,
            verdict=outcome.verdict.value,
            kernel_edges=outcome.stats.kernel_edges,
            kernel_gamma_edges=kernel_gamma_edges,
            time_approx=round(time_approx, 3),
            time_kernel=round(time_kernel, 3),
            time_total=round(time_total, 3),
        )
        logger.info(
            "%s delta=%s gamma=%d: %d edges, %d gamma-edges, greedy %d, %s",
            dataset,
            delta,
            gamma,
            stream.m,
            len(gamma_edges),
            size,
            outcome.verdict.value,
        )
        return PipelineResult(record=record, stream=stream, greedy=greedy, outcome=outcome)

    def run_cell(
        self,
        stream: LinkStream,
        dataset: str,
        delta: int | None,
        gamma: int,
        k_mode: KMode,
    ) -> ExperimentRecord | None:
        """One sweep cell; a failing cell is logged and skipped."""
        try:
            return self.run_pipeline(
                stream, gamma, delta=delta, k_mode=k_mode, dataset=dataset
            ).record
        except PipelineStageError as exc:
            logger.warning("skipping delta=%s gamma=%d: %s", delta, gamma, exc.detail)
            return None

    def sweep(
        self,
        stream: LinkStream,
        deltas: list[int],
        gammas: list[int] | None = None,
        product: int | None = None,
        k_mode: KMode = KMode.PRUNE_ONLY,
        dataset: str = "stream",
        workers: int | None = None,
    ) -> list[ExperimentRecord]:
        """Records for a grid of (delta, gamma) cells, sorted by (delta, gamma).

        With ``product`` each delta is paired with gamma = product // delta.
        A delta of 1 means no compression.
        """
        if product is not None:
            cells = [(d, product // d) for d in deltas if d >= 1 and product // d >= 1]
        else:
            cells = [(d, g) for d in deltas for g in gammas or []]
        jobs = [
            (stream, dataset, None if delta == 1 else delta, gamma, k_mode)
            for delta, gamma in sorted(set(cells))
        ]
        workers = workers or self.settings.sweep_workers
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(_run_sweep_cell, jobs))
        else:
            records = [self.run_cell(*job) for job in jobs]
        found = [r for r in records if r is not None]
        return sorted(found, key=lambda r: (r.delta or 1, r.gamma))

    def truncation_series(
        self,
        stream: LinkStream,
        cutoffs: list[int],
        delta: int | None = 100,
        gamma: int = 2,
        k_mode: KMode = KMode.GREEDY,
        dataset: str = "stream",
    ) -> list[ExperimentRecord]:
        """Runtime against input size: the stream cut at each last instant, then run.

        Each piece keeps the instants from ``t_min`` to the cutoff; cutoffs
        past ``t_max`` are clipped and repeated pieces run once. Pieces whose
        pipeline fails (too short for ``delta``, say) are logged and skipped.
        """
        check_gamma(gamma)
        if delta is not None and delta < 1:
            raise BadRequestError(f"delta must be >= 1, got {delta}")
        if delta == 1:
            delta = None
        ends = sorted({min(c, stream.t_max) for c in cutoffs if c >= stream.t_min})
        if not ends:
            raise BadRequestError(
                f"no cutoff inside [{stream.t_min}, {stream.t_max}]"
            )
        records = []
        for end in ends:
            piece = self.streams.restrict(stream, stream.t_min, end)
            label = f"{dataset}-until-{end}"
            try:
                result = self.run_pipeline(
                    piece, gamma, delta=delta, k_mode=k_mode, dataset=label
                )
            except PipelineStageError as exc:
                logger.warning("skipping cutoff %d: %s", end, exc.detail)
                continue
            records.append(result.record)
        return records

    def stress_grid(
        self,
        group_counts: list[int],
        durations: list[int],
        gamma: int,
        k_mode: KMode = KMode.GREEDY,
        seed: int | None = None,
    ) -> list[ExperimentRecord]:
        """Generated instances for every (groups, duration) pair, run through the pipeline."""
        records = []
        for groups in sorted(set(group_counts)):
            for duration in sorted(set(durations)):
                config = self.generator.default_config(
                    group_count=groups, duration=duration, seed=seed
                )
                stream = self.generator.generate(config)
                records.append(
                    self.run_pipeline(
                        stream,
                        gamma,
                        k_mode=k_mode,
                        dataset=f"generated-{groups}x{duration}",
                    ).record
                )
        return records
