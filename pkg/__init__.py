"""torskur - exact verification toolkit for the curve Schur algebra of P^1 and its KLR counterpart"""

__version__ = "0.1.0"
