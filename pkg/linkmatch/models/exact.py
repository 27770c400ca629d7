from pydantic import BaseModel

from linkmatch.models.gamma import GammaMatching


class ExactResult(BaseModel):
    """A provably maximum gamma-matching and the search effort behind it."""

    optimum: int
    witness: GammaMatching
    explored_nodes: int
