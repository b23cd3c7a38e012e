"""
One-off Computations
Psi-basis ranks and Im phi lattices as JSON
"""

from typing import Any, Optional

from pydantic import BaseModel, Field

from algebra.lattices import divisors_coprime_to, im_phi_lattice, lattice_summary, tautological_lattice
from algebra.schur import psi_basis, windowed_rank
from models.ring import Composition


# ============================================================================
# Request Models
# ============================================================================

class RankRequest(BaseModel):
    """Psi_g^P words of one degree between two slots"""
    mu: tuple[int, ...]
    lam: tuple[int, ...]
    deg: int = Field(ge=0)
    window_cap: int = Field(default=12, ge=0)


class LatticeRequest(BaseModel):
    """Im phi lattices of the symmetric slot of P_n"""
    n: int = Field(ge=1)
    deg: int = Field(ge=0)
    prime: Optional[int] = None


# ============================================================================
# Commands
# ============================================================================

def cmd_rank(request: RankRequest) -> dict[str, Any]:
    """
    Rank over Q of the Psi basis words of one degree on an adaptive window

    Returns:
        word count, rank, final window and whether the rank is full
    """
    mu, lam = Composition(parts=request.mu), Composition(parts=request.lam)
    words = [word for _, _, word in psi_basis(mu, lam, request.deg)]
    rank, window = windowed_rank(words, lam, 0, request.window_cap)
    return {
        'mu': list(mu.parts),
        'lambda': list(lam.parts),
        'deg': request.deg,
        'words': len(words),
        'rank': rank,
        'window': window,
        'full_rank': rank == len(words),
    }


def cmd_lattice(request: LatticeRequest) -> dict[str, Any]:
    """
    Im phi and tautological lattices of every even degree up to deg

    With a prime, each degree also reports how many elementary divisors are prime to p.
    """
    lam = Composition.of(request.n)
    degrees = []
    for d in range(0, request.deg + 1, 2):
        lattice = im_phi_lattice(lam, d)
        entry = {
            'im_phi': lattice_summary(lattice, lam),
            'tautological': lattice_summary(tautological_lattice(request.n, d), lam),
        }
        if request.prime is not None:
            entry['rank_mod_p'] = divisors_coprime_to(lattice, request.prime)
        degrees.append(entry)
    return {'n': request.n, 'degrees': degrees}
