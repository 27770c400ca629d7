from linkmatch.models.exact import ExactResult
from linkmatch.models.experiment import ExperimentRecord
from linkmatch.models.formula import CnfFormula, ReductionInstance
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.generator import GeneratorConfig, ParticleState
from linkmatch.models.kernel import KernelOutcome, KernelStats, KernelVerdict
from linkmatch.models.report import ValidationReport, Violation, ViolationKind
from linkmatch.models.stream import LinkStream, TemporalVertex, TimedEdge

__all__ = [
    "LinkStream",
    "TemporalVertex",
    "TimedEdge",
    "GammaEdge",
    "GammaMatching",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "KernelOutcome",
    "KernelStats",
    "KernelVerdict",
    "ExactResult",
    "CnfFormula",
    "ReductionInstance",
    "GeneratorConfig",
    "ParticleState",
    "ExperimentRecord",
]
