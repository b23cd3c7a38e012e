"""
Frobenius Algebra Model
Finite even-graded commutative Frobenius algebras given by tables
"""

from fractions import Fraction
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator


class FrobeniusAlgebra(BaseModel):
    """
    Basis labels with degrees, structure constants and a pairing

    mult holds triples (i, j, k, coeff) meaning b_i * b_j contains coeff * b_k;
    pairing[i][j] = sigma(b_i, b_j). Coefficients are decimal or a/b strings.
    """
    model_config = ConfigDict(frozen=True)

    name: str = "F"
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    unit_index: int = 0
    mult: tuple[tuple[int, int, int, str], ...]
    pairing: tuple[tuple[str, ...], ...]
    graded_pairing: bool = True

    @model_validator(mode='after')
    def _shapes(self) -> "FrobeniusAlgebra":
        d = len(self.labels)
        if len(self.degrees) != d:
            raise ValueError("one degree per basis label")
        if any(deg < 0 or deg % 2 for deg in self.degrees):
            raise ValueError("only non-negative even degrees are supported")
        if not 0 <= self.unit_index < d:
            raise ValueError("unit index out of range")
        if len(self.pairing) != d or any(len(row) != d for row in self.pairing):
            raise ValueError("pairing must be a square matrix over the basis")
        for i, j, k, _ in self.mult:
            if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
                raise ValueError(f"structure constant index out of range: {(i, j, k)}")
        return self

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        """b_i * b_j as a map basis index -> coefficient"""
        out: dict[int, Fraction] = {}
        for a, b, k, coeff in self.mult:
            if a == i and b == j:
                out[k] = out.get(k, Fraction(0)) + Fraction(coeff)
        return {k: v for k, v in out.items() if v}

    def sigma(self, i: int, j: int) -> Fraction:
        return Fraction(self.pairing[i][j])

    def top_degree(self) -> int:
        return max(self.degrees)

    def poincare(self) -> dict[int, int]:
        """Graded dimension: degree -> count"""
        out: dict[int, int] = {}
        for deg in self.degrees:
            out[deg] = out.get(deg, 0) + 1
        return out


def trivial_frobenius() -> FrobeniusAlgebra:
    """F = k with sigma(1,1) = 1"""
    return FrobeniusAlgebra(
        name="trivial",
        labels=("1",),
        degrees=(0,),
        mult=((0, 0, 0, "1"),),
        pairing=(("1",),),
    )


def p1_cohomology(deformed: bool = False) -> FrobeniusAlgebra:
    """
    F = k[c]/(c^2) with deg c = 2 and sigma(1,c) = 1

    With deformed=True the counit also takes the value 1 on the unit, giving
    sigma(1,1) = 1; this pairing is invariant but not graded.
    """
    return FrobeniusAlgebra(
        name="p1-deformed" if deformed else "p1",
        labels=("1", "c"),
        degrees=(0, 2),
        mult=((0, 0, 0, "1"), (0, 1, 1, "1"), (1, 0, 1, "1")),
        pairing=(("1" if deformed else "0", "1"), ("1", "0")),
        graded_pairing=not deformed,
    )


class FrobeniusCheck(BaseModel):
    """Identity checked by frobenius validation"""
    name: str
    passed: bool
    witness: list[str] = Field(default_factory=list)


class FrobeniusValidation(BaseModel):
    """Outcome of validating a Frobenius table"""
    algebra: str
    passed: bool
    checks: list[FrobeniusCheck] = Field(default_factory=list)
    first_failure: Optional[str] = None
