"""Command line for link-stream matching.

Exit codes: 0 ok, 1 negative answer (no solution, invalid input), 2 error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from linkmatch.config import Settings, get_settings
from linkmatch.core.logging import configure_logging
from linkmatch.exceptions import AppException
from linkmatch.models.kernel import KernelVerdict
from linkmatch.repositories import (
    CnfRepository,
    MatchingRepository,
    RecordRepository,
    StreamRepository,
)
from linkmatch.repositories.base import BaseFileRepository
from linkmatch.services.approx_service import ApproxService
from linkmatch.services.compress_service import CompressService
from linkmatch.services.exact_service import ExactService
from linkmatch.services.generator_service import GeneratorService
from linkmatch.services.kernel_service import KernelService
from linkmatch.services.pipeline_service import (
    RECORD_COLUMNS,
    KMode,
    PipelineService,
    record_row,
)
from linkmatch.services.reduction_service import ReductionService
from linkmatch.services.stream_service import StreamService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _emit(text: str, output: str | None, repo: BaseFileRepository) -> None:
    if output:
        repo.write_text(output, text)
    else:
        sys.stdout.write(text)


def _report(data: dict[str, object]) -> None:
    print(json.dumps(data, sort_keys=True, default=str))


def cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    service = GeneratorService(settings)
    config = service.default_config(
        group_count=args.groups,
        particles_per_group=args.particles_per_group,
        radius=args.radius,
        friction=args.friction,
        wind=args.wind,
        max_speed=args.max_speed,
        arena_width=args.width,
        arena_height=args.height,
        duration=args.duration,
        seed=args.seed,
    )
    stream = service.generate(config)
    metadata = service.metadata(config)
    repo = StreamRepository(settings)
    _emit(repo.dumps(stream, {"seed": config.seed, "prng": service.PRNG}), args.output, repo)
    if args.output:
        RecordRepository(settings).save_json(metadata, f"{args.output}.json")
    return EXIT_OK


def cmd_compress(args: argparse.Namespace, settings: Settings) -> int:
    repo = StreamRepository(settings)
    stream = repo.load(args.input)
    compressed = CompressService().delta_compress(stream, args.delta)
    _emit(repo.dumps(compressed, {"delta": args.delta}), args.output, repo)
    return EXIT_OK


def cmd_gamma_edges(args: argparse.Namespace, settings: Settings) -> int:
    repo = StreamRepository(settings)
    stream = repo.load(args.input)
    edges = StreamService().enumerate_gamma_edges(stream, args.gamma)
    if args.count:
        _report({"gamma": args.gamma, "gamma_edges": len(edges)})
    else:
        text = "".join(f"{e.start} {e.u} {e.v}\n" for e in edges)
        _emit(text, args.output, repo)
    return EXIT_OK


def cmd_approx(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    matching = ApproxService(settings).greedy_matching(stream, args.gamma)
    if args.output:
        MatchingRepository(settings).save(matching, args.output)
    _report({"gamma": args.gamma, "greedy_size": len(matching)})
    return EXIT_OK


def cmd_kernelize(args: argparse.Namespace, settings: Settings) -> int:
    repo = StreamRepository(settings)
    stream = repo.load(args.input)
    kernels = KernelService(ApproxService(settings))
    k = args.k
    if k is None:
        k = max(len(kernels.approx.greedy_matching(stream, args.gamma)), 1)
    if args.prune_only:
        outcome = kernels.prune(stream, args.gamma, k)
    else:
        outcome = kernels.kernelize(stream, args.gamma, k)
    stats = {
        "verdict": outcome.verdict.value,
        "gamma": args.gamma,
        **outcome.stats.model_dump(),
        "edge_ratio": outcome.stats.edge_ratio,
    }
    if outcome.stream is not None:
        ratio = kernels.kernel_gamma_edge_ratio(stream, outcome.stream, args.gamma)
        stats["gamma_edge_ratio"] = float(ratio)
        if args.output:
            repo.save(outcome.stream, args.output, {"gamma": args.gamma, "k": outcome.k})
    if args.stats:
        RecordRepository(settings).save_json(stats, args.stats)
    _report(stats)
    return EXIT_NO if outcome.verdict is KernelVerdict.NO_SOLUTION else EXIT_OK


def cmd_exact(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    service = ExactService(settings)
    gamma_edges = service.check_size(stream, args.gamma, force=args.force)
    if args.k is not None:
        found = service.exact_decision(
            stream, args.gamma, args.k, args.budget, gamma_edges
        )
        _report({"gamma": args.gamma, "k": args.k, "exists": found})
        return EXIT_OK if found else EXIT_NO
    result = service.exact_maximum(stream, args.gamma, args.budget, gamma_edges)
    if args.output:
        MatchingRepository(settings).save(result.witness, args.output)
    _report(
        {
            "gamma": args.gamma,
            "optimum": result.optimum,
            "explored_nodes": result.explored_nodes,
        }
    )
    return EXIT_OK


def cmd_reduce_sat(args: argparse.Namespace, settings: Settings) -> int:
    formula = CnfRepository(settings).load(args.cnf)
    service = ReductionService()
    instance = service.reduce(formula, args.gamma)
    repo = StreamRepository(settings)
    metadata = {"gamma": instance.gamma, "target": instance.target}
    _emit(repo.dumps(instance.stream, metadata), args.output, repo)
    if args.output:
        satisfiable, _ = service.solve(formula)
        _report({**metadata, "satisfiable": satisfiable})
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    records = PipelineService(settings).sweep(
        stream,
        args.deltas,
        gammas=args.gammas,
        product=args.product,
        k_mode=KMode(args.k_mode),
        dataset=args.dataset or Path(args.input).stem,
        workers=args.workers,
    )
    repo = RecordRepository(settings)
    text = repo.dumps_csv([record_row(r) for r in records], RECORD_COLUMNS)
    _emit(text, args.output, repo)
    return EXIT_OK


def cmd_stress(args: argparse.Namespace, settings: Settings) -> int:
    records = PipelineService(settings).stress_grid(
        args.groups, args.durations, args.gamma, KMode(args.k_mode), args.seed
    )
    repo = RecordRepository(settings)
    text = repo.dumps_csv([record_row(r) for r in records], RECORD_COLUMNS)
    _emit(text, args.output, repo)
    return EXIT_OK


def cmd_truncate(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    records = PipelineService(settings).truncation_series(
        stream,
        args.cutoffs,
        delta=args.delta,
        gamma=args.gamma,
        k_mode=KMode(args.k_mode),
        dataset=args.dataset or Path(args.input).stem,
    )
    repo = RecordRepository(settings)
    text = repo.dumps_csv([record_row(r) for r in records], RECORD_COLUMNS)
    _emit(text, args.output, repo)
    return EXIT_OK


def cmd_profile(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    points = CompressService().compression_profile(stream, args.deltas)
    repo = RecordRepository(settings)
    text = repo.dumps_csv(
        [p.model_dump() for p in points], ["delta", "instants", "edges"]
    )
    _emit(text, args.output, repo)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, settings: Settings) -> int:
    stream = StreamRepository(settings).load(args.input)
    service = StreamService()
    report = service.validate_stream(stream)
    if args.matching:
        matching = MatchingRepository(settings).load(args.matching)
        report.violations.extend(service.validate_matching(stream, matching).violations)
    _report(
        {
            **service.stream_summary(stream).model_dump(),
            "ok": report.ok,
            "violations": [f"{v.kind.value}: {v.detail}" for v in report.violations],
        }
    )
    return EXIT_OK if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkmatch", description="Temporal matching in link streams"
    )
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a random link stream from moving particles")
    p.add_argument("--groups", type=int)
    p.add_argument("--particles-per-group", type=int)
    p.add_argument("--radius", type=float)
    p.add_argument("--friction", type=float)
    p.add_argument("--wind", type=float)
    p.add_argument("--max-speed", type=float)
    p.add_argument("--width", type=float)
    p.add_argument("--height", type=float)
    p.add_argument("--duration", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compress", help="delta-compress a stream")
    p.add_argument("input")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("gamma-edges", help="list the gamma-edges of a stream")
    p.add_argument("input")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gamma_edges)

    p = sub.add_parser("approx", help="greedy 2-approximate gamma-matching")
    p.add_argument("input")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--output", "-o", help="write the matching here")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("kernelize", help="kernelize for solution size k")
    p.add_argument("input")
    p.add_argument("--gamma", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int)
    group.add_argument("--prune-only", action="store_true")
    p.add_argument("--output", "-o", help="write the kernel stream here")
    p.add_argument("--stats", help="write the stats record as JSON here")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("exact", help="exact maximum gamma-matching or decision for k")
    p.add_argument("input")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--force", action="store_true")
    p.add_argument("--output", "-o", help="write the witness here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("reduce-sat", help="build the gamma-matching instance of a DIMACS formula")
    p.add_argument("cnf")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("sweep", help="experiment records over (delta, gamma) cells")
    p.add_argument("input")
    p.add_argument("--deltas", type=int, nargs="+", required=True)
    schedule = p.add_mutually_exclusive_group(required=True)
    schedule.add_argument("--gammas", type=int, nargs="+")
    schedule.add_argument("--product", type=int, help="pair each delta with product // delta")
    p.add_argument(
        "--k-mode", choices=[m.value for m in KMode], default=KMode.PRUNE_ONLY.value
    )
    p.add_argument("--dataset")
    p.add_argument("--workers", type=int)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("stress", help="run the pipeline on generated instances")
    p.add_argument("--groups", type=int, nargs="+", required=True)
    p.add_argument("--durations", type=int, nargs="+", required=True)
    p.add_argument("--gamma", type=int, default=2)
    p.add_argument(
        "--k-mode", choices=[m.value for m in KMode], default=KMode.GREEDY.value
    )
    p.add_argument("--seed", type=int)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("truncate", help="pipeline runs on the stream cut at growing last instants")
    p.add_argument("input")
    p.add_argument("--cutoffs", type=int, nargs="+", required=True)
    p.add_argument("--delta", type=int, default=100, help="1 disables compression")
    p.add_argument("--gamma", type=int, default=2)
    p.add_argument(
        "--k-mode", choices=[m.value for m in KMode], default=KMode.GREEDY.value
    )
    p.add_argument("--dataset")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("profile", help="timed edges left after each delta-compression")
    p.add_argument("input")
    p.add_argument("--deltas", type=int, nargs="+", required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("validate", help="check a stream and optionally a matching")
    p.add_argument("input")
    p.add_argument("--matching")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        return args.func(args, settings)
    except AppException as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {exc.detail}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
