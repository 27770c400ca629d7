import logging
import random
from itertools import product

from pysat.solvers import Glucose3

from linkmatch.exceptions import BadRequestError, UnsatisfiedAssignmentError
from linkmatch.models.formula import CnfFormula, ReductionInstance
from linkmatch.models.gamma import GammaEdge, GammaMatching
from linkmatch.models.stream import LinkStream, TimedEdge

logger = logging.getLogger(__name__)

CLAUSE_VERTEX = "c"


def spine(x: int) -> str:
    return f"x{x}="


def positive(x: int) -> str:
    return f"x{x}+"


def negative(x: int) -> str:
    return f"x{x}-"


def positive_gadget(x: int, clause: int) -> str:
    return f"x{x}++{clause}"


def negative_gadget(x: int, clause: int) -> str:
    return f"x{x}--{clause}"


def reduction_target(formula: CnfFormula) -> int:
    """(2m+1)n + m for n variables and m clauses."""
    n, m = formula.variable_count, formula.clause_count
    return (2 * m + 1) * n + m


class ReductionService:
    """Builds gamma-matching instances from CNF formulas (NP-hardness for gamma > 1)."""

    def reduce(self, formula: CnfFormula, gamma: int) -> ReductionInstance:
        """The link stream whose gamma-matchings of the target size encode satisfying assignments.

        For each variable x: a spine pair x=/x+ and x=/x- linked over all of
        T = [0, (m+1)gamma - 1], and for each clause i gadget pairs x+/x++i and
        x-/x--i linked on [i*gamma + 1, (i+1)*gamma]. The clause vertex c is
        linked to x++i (resp. x--i) on that window when x appears positively
        (resp. negatively) in clause i.
        """
        if gamma < 2:
            raise BadRequestError(f"the reduction needs gamma >= 2, got {gamma}")
        n, m = formula.variable_count, formula.clause_count
        last = (m + 1) * gamma - 1
        edges: list[TimedEdge] = []
        vertices = {CLAUSE_VERTEX}
        for x in range(1, n + 1):
            vertices.update((spine(x), positive(x), negative(x)))
            for t in range(last + 1):
                edges.append((t, spine(x), positive(x)))
                edges.append((t, spine(x), negative(x)))
            for i in range(m):
                vertices.update((positive_gadget(x, i), negative_gadget(x, i)))
                for t in range(i * gamma + 1, (i + 1) * gamma + 1):
                    edges.append((t, positive(x), positive_gadget(x, i)))
                    edges.append((t, negative(x), negative_gadget(x, i)))
        for i, clause in enumerate(formula.clauses):
            for literal in clause:
                x = abs(literal)
                gadget = positive_gadget(x, i) if literal > 0 else negative_gadget(x, i)
                for t in range(i * gamma + 1, (i + 1) * gamma + 1):
                    edges.append((t, CLAUSE_VERTEX, gadget))
        stream = LinkStream.from_edges(edges, vertices=vertices, t_min=0, t_max=last)
        target = reduction_target(formula)
        logger.info(
            "reduced formula with %d variables, %d clauses: %d vertices, %d timed edges, target %d",
            n,
            m,
            stream.n,
            stream.m,
            target,
        )
        return ReductionInstance(
            formula=formula, stream=stream, gamma=gamma, target=target
        )

    def assignment_to_matching(
        self, instance: ReductionInstance, assignment: dict[int, bool]
    ) -> GammaMatching:
        """The gamma-matching of the target size built from a satisfying assignment.

        A true variable takes every spine block on x+ and every gadget block on
        x-, a false one the opposite; each clause takes the block linking c to
        the gadget of its lowest-index satisfying variable.
        """
        formula, gamma = instance.formula, instance.gamma
        if not formula.satisfied_by(assignment):
            raise UnsatisfiedAssignmentError()
        m = formula.clause_count
        members: list[GammaEdge] = []
        for x in range(1, formula.variable_count + 1):
            value = assignment.get(x, False)
            side = positive(x) if value else negative(x)
            for i in range(m + 1):
                members.append(GammaEdge(start=i * gamma, u=spine(x), v=side, gamma=gamma))
            for i in range(m):
                if value:
                    pair = (negative(x), negative_gadget(x, i))
                else:
                    pair = (positive(x), positive_gadget(x, i))
                members.append(
                    GammaEdge(start=i * gamma + 1, u=pair[0], v=pair[1], gamma=gamma)
                )
        for i, clause in enumerate(formula.clauses):
            witness = min(
                (lit for lit in clause if assignment.get(abs(lit), False) == (lit > 0)),
                key=abs,
            )
            x = abs(witness)
            gadget = positive_gadget(x, i) if witness > 0 else negative_gadget(x, i)
            members.append(
                GammaEdge(start=i * gamma + 1, u=CLAUSE_VERTEX, v=gadget, gamma=gamma)
            )
        return GammaMatching(gamma=gamma, members=frozenset(members))

    def random_formula(
        self,
        variable_count: int,
        clause_count: int,
        rng: random.Random,
        clause_size: int = 3,
    ) -> CnfFormula:
        """Random CNF with clauses over min(clause_size, n) distinct variables."""
        if variable_count < 1 or clause_count < 0 or clause_size < 1:
            raise BadRequestError("random formula needs n >= 1, m >= 0, clause size >= 1")
        width = min(clause_size, variable_count, 3)
        clauses = []
        for _ in range(clause_count):
            variables = sorted(rng.sample(range(1, variable_count + 1), width))
            clauses.append(tuple(x if rng.random() < 0.5 else -x for x in variables))
        return CnfFormula(variable_count=variable_count, clauses=tuple(clauses))

    def is_satisfiable(self, formula: CnfFormula) -> tuple[bool, dict[int, bool] | None]:
        """Truth-table satisfiability, returning the first satisfying assignment found."""
        variables = range(1, formula.variable_count + 1)
        for values in product((False, True), repeat=formula.variable_count):
            assignment = dict(zip(variables, values, strict=True))
            if formula.satisfied_by(assignment):
                return True, assignment
        return False, None

    def solve(self, formula: CnfFormula) -> tuple[bool, dict[int, bool] | None]:
        """Satisfiability through a CDCL solver, for formulas beyond truth tables."""
        with Glucose3(bootstrap_with=[list(c) for c in formula.clauses]) as solver:
            if not solver.solve():
                return False, None
            model = solver.get_model() or []
        assignment = {x: False for x in range(1, formula.variable_count + 1)}
        assignment.update({abs(lit): lit > 0 for lit in model if abs(lit) in assignment})
        return True, assignment
