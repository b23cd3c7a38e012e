"""
Operator Word Models
Generators and words of the curve Schur, wreath and KLR algebras
Words are stored in application order: the first generator acts first
"""

from typing import Any, Literal, Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator


class SchurGenerator(BaseModel):
    """
    One generator acting on the slot `lam`

    split : part `pos` of lam splits as (size, lam[pos]-size)
    merge : parts pos, pos+1 of lam merge
    cross : parts pos, pos+1 of lam swap (merge then split)
    poly  : multiplication by `poly` (a Polynomial or its JSON form)
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: Literal['split', 'merge', 'cross', 'poly']
    lam: tuple[int, ...] = Field(alias='lambda')
    pos: int = Field(default=1, ge=1)
    size: int = Field(default=1, ge=1)
    poly: Optional[Any] = None

    @model_validator(mode='after')
    def _check_poly(self) -> "SchurGenerator":
        if self.kind == 'poly' and self.poly is None:
            raise ValueError("poly generator needs a polynomial")
        return self

    def target(self) -> tuple[int, ...]:
        """Slot reached after this generator"""
        lam = list(self.lam)
        k = self.pos - 1
        if self.kind == 'split':
            if not 0 < self.size < lam[k]:
                raise ValueError(f"cannot split part {lam[k]} as {self.size}+{lam[k] - self.size}")
            return tuple(lam[:k] + [self.size, lam[k] - self.size] + lam[k + 1:])
        if self.kind == 'merge':
            return tuple(lam[:k] + [lam[k] + lam[k + 1]] + lam[k + 2:])
        if self.kind == 'cross':
            return tuple(lam[:k] + [lam[k + 1], lam[k]] + lam[k + 2:])
        return tuple(lam)


class SchurWord(BaseModel):
    """Composable chain of Schur generators"""
    n: int = Field(ge=0)
    source: tuple[int, ...]
    generators: list[SchurGenerator] = Field(default_factory=list)

    @property
    def target(self) -> tuple[int, ...]:
        return self.generators[-1].target() if self.generators else self.source


class WreathGenerator(BaseModel):
    """x_i, an F-basis element in slot i, or tau_i"""
    model_config = ConfigDict(frozen=True)

    kind: Literal['x', 'f', 'tau']
    index: int = Field(ge=1)
    label: Optional[str] = None


class WreathWord(BaseModel):
    n: int = Field(ge=1)
    generators: list[WreathGenerator] = Field(default_factory=list)


class KLRGenerator(BaseModel):
    """Idempotent 1_i, dot y_r or crossing psi_r"""
    model_config = ConfigDict(frozen=True)

    kind: Literal['idem', 'dot', 'psi']
    index: int = Field(default=1, ge=1)
    colors: Optional[tuple[int, ...]] = None


class KLRWord(BaseModel):
    m: int = Field(ge=0)
    generators: list[KLRGenerator] = Field(default_factory=list)

    @classmethod
    def of(cls, m: int, spec: str) -> "KLRWord":
        """
        Build from a compact string in application order, e.g. "psi1 y2 psi1"

        Args:
            m: number of strands
            spec: whitespace-separated tokens psi<r> or y<r>
        """
        gens: list[KLRGenerator] = []
        for token in spec.split():
            if token.startswith('psi'):
                gens.append(KLRGenerator(kind='psi', index=int(token[3:])))
            elif token.startswith('y'):
                gens.append(KLRGenerator(kind='dot', index=int(token[1:])))
            else:
                raise ValueError(f"unknown KLR token {token!r}")
        return cls(m=m, generators=gens)

    def then(self, other: "KLRWord") -> "KLRWord":
        """This word followed by other"""
        return KLRWord(m=self.m, generators=self.generators + other.generators)


class DimVector(BaseModel):
    """Dimension vector (n0, n1) of the Kronecker quiver"""
    model_config = ConfigDict(frozen=True)

    n0: int = Field(ge=0)
    n1: int = Field(ge=0)

    @property
    def m(self) -> int:
        return self.n0 + self.n1


class DividedSequence(BaseModel):
    """Sequence of (color, multiplicity) pairs such as 0^(2) 1^(2)"""
    model_config = ConfigDict(frozen=True)

    parts: tuple[tuple[int, int], ...]

    @model_validator(mode='after')
    def _check(self) -> "DividedSequence":
        for color, mult in self.parts:
            if color not in (0, 1) or mult < 1:
                raise ValueError(f"bad divided part {(color, mult)}")
        return self

    @classmethod
    def cuspidal(cls, lam: tuple[int, ...]) -> "DividedSequence":
        """i_lambda = 0^(l1) 1^(l1) 0^(l2) 1^(l2) ..."""
        parts: list[tuple[int, int]] = []
        for p in lam:
            parts.extend([(0, p), (1, p)])
        return cls(parts=tuple(parts))

    def expand(self) -> tuple[int, ...]:
        """Thin color sequence obtained by repeating each color"""
        out: list[int] = []
        for color, mult in self.parts:
            out.extend([color] * mult)
        return tuple(out)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.parts)


class CompiledThick(BaseModel):
    """
    Thin word realising a thick split, merge or crossing between two cuspidal
    divided sequences; the word starts with the source idempotent
    """
    generator: SchurGenerator
    source: DividedSequence
    target: DividedSequence
    word: KLRWord
