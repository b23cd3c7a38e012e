"""
Data Models Package
Pydantic models for rings, operator words, Frobenius algebras, lattices and reports
"""

from .ring import (
    RingSpec,
    Composition,
    compositions,
    is_prime,
)

from .words import (
    SchurGenerator,
    SchurWord,
    WreathGenerator,
    WreathWord,
    KLRGenerator,
    KLRWord,
    DimVector,
    DividedSequence,
    CompiledThick,
)

from .frobenius import (
    FrobeniusAlgebra,
    FrobeniusCheck,
    FrobeniusValidation,
    trivial_frobenius,
    p1_cohomology,
)

from .lattice import GradedLattice

from .report import (
    CheckStatus,
    CheckRecord,
    Report,
    AggregateReport,
    exit_code_for,
)

__all__ = [
    # Rings and slots
    'RingSpec',
    'Composition',
    'compositions',
    'is_prime',

    # Operator words
    'SchurGenerator',
    'SchurWord',
    'WreathGenerator',
    'WreathWord',
    'KLRGenerator',
    'KLRWord',
    'DimVector',
    'DividedSequence',
    'CompiledThick',

    # Frobenius algebras
    'FrobeniusAlgebra',
    'FrobeniusCheck',
    'FrobeniusValidation',
    'trivial_frobenius',
    'p1_cohomology',

    # Lattices and reports
    'GradedLattice',
    'CheckStatus',
    'CheckRecord',
    'Report',
    'AggregateReport',
    'exit_code_for',
]
