"""
Lattice Models
Graded integer lattices inside a canonical monomial basis
"""

from typing import Any
from pydantic import BaseModel, Field


class GradedLattice(BaseModel):
    """
    Z-lattice of polynomials of one degree

    ambient: canonical monomial keys (JSON-ready) giving the coordinates
    rows: HNF generator rows
    """
    degree: int
    ambient: list[Any] = Field(default_factory=list)
    rows: list[list[int]] = Field(default_factory=list)
    elementary_divisors: list[int] = Field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient)

    def is_full(self) -> bool:
        """Rank equals ambient dimension and every divisor is 1"""
        return self.rank == self.ambient_dim and all(d == 1 for d in self.elementary_divisors)
