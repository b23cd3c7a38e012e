"""
Ring and Composition Models
Typed descriptions of the polynomial rings and slot labels used throughout torskur
"""

from typing import Literal
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


Flavor = Literal['curve', 'quiver', 'plain']


def is_prime(p: int) -> bool:
    """Trial division; primes here are small"""
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class RingSpec(BaseModel):
    """
    A polynomial ring of one of three flavors

    curve  : k[x1..xn, c1..cn]/(ci^2)
    quiver : k[u1..un, v1..vn]
    plain  : k[y1..yn]
    """
    model_config = ConfigDict(frozen=True)

    flavor: Flavor
    n: int = Field(ge=0)
    coeff: str = "Z"

    @field_validator('coeff')
    @classmethod
    def _check_coeff(cls, value: str) -> str:
        if value in ("Z", "Q"):
            return value
        if value.startswith("Fp:"):
            p = value[3:]
            if not p.isdigit() or not is_prime(int(p)):
                raise ValueError(f"coefficient ring {value!r} needs a prime modulus")
            return value
        raise ValueError(f"unknown coefficient ring {value!r}")

    @property
    def prime(self) -> int | None:
        """Characteristic of a prime field, None otherwise"""
        return int(self.coeff[3:]) if self.coeff.startswith("Fp:") else None

    @property
    def families(self) -> tuple[str, ...]:
        """Variable families in generator order"""
        return {
            'curve': ('x', 'c'),
            'quiver': ('u', 'v'),
            'plain': ('y',),
        }[self.flavor]

    @property
    def nvars(self) -> int:
        return self.n * len(self.families)

    def with_coeff(self, coeff: str) -> "RingSpec":
        return RingSpec(flavor=self.flavor, n=self.n, coeff=coeff)


class Composition(BaseModel):
    """Ordered tuple of positive parts; labels idempotents and slots"""
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...]

    @model_validator(mode='after')
    def _positive(self) -> "Composition":
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")
        return self

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(parts=tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """Running totals, starting with 0"""
        sums = [0]
        for p in self.parts:
            sums.append(sums[-1] + p)
        return tuple(sums)

    def blocks(self) -> list[tuple[int, ...]]:
        """1-based index blocks, e.g. (2,1) -> [(1,2),(3,)]"""
        sums = self.partial_sums
        return [tuple(range(sums[k] + 1, sums[k + 1] + 1)) for k in range(len(self.parts))]

    def refines(self, coarser: "Composition") -> bool:
        """True when every block of coarser is a union of consecutive blocks of self"""
        return self.n == coarser.n and set(coarser.partial_sums) <= set(self.partial_sums)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def compositions(n: int) -> list[Composition]:
    """All compositions of n in lexicographic order of parts"""
    if n == 0:
        return [Composition(parts=())]
    out: list[Composition] = []

    def grow(prefix: tuple[int, ...], left: int) -> None:
        if left == 0:
            out.append(Composition(parts=prefix))
            return
        for first in range(1, left + 1):
            grow(prefix + (first,), left - first)

    grow((), n)
    return sorted(out, key=lambda c: c.parts)
