"""
Suite Parameters
Validated parameters of one verification suite run
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from models.ring import is_prime
from models.words import DimVector
from runtime.errors import InputError


class SuiteParams(BaseModel):
    """n, alpha, degree bound, prime and window cap of a run"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(default=2, ge=0)
    alpha: Optional[DimVector] = None
    deg: int = Field(default=6, ge=0)
    prime: Optional[int] = None
    window_cap: int = Field(default=12, ge=2)

    @field_validator('prime')
    @classmethod
    def _prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return value

    def dim_vectors(self) -> list[DimVector]:
        """The given alpha, or every alpha with |alpha| <= n"""
        if self.alpha is not None:
            return [self.alpha]
        return [DimVector(n0=a, n1=m - a) for m in range(1, self.n + 1) for a in range(m + 1)]

    def as_report_parameters(self) -> dict[str, Any]:
        out: dict[str, Any] = {'n': self.n, 'deg': self.deg}
        if self.alpha is not None:
            out['alpha'] = [self.alpha.n0, self.alpha.n1]
        if self.prime is not None:
            out['prime'] = self.prime
        return out


def parse_alpha(text: str) -> DimVector:
    """
    "2,2" -> DimVector(2, 2)

    Raises:
        InputError: not two non-negative integers
    """
    try:
        n0, n1 = (int(piece) for piece in text.split(','))
        return DimVector(n0=n0, n1=n1)
    except ValueError as e:
        raise InputError(f"alpha must look like 2,2: {text!r}") from e
