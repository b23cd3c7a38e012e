"""
Suite Registry
Named verification suites, each a list of check groups in canonical order
"""

from typing import Callable, Optional

from algebra.demazure import demazure_relation_checks, shuffle_formula_checks
from algebra.frobenius import validate_frobenius
from algebra.klr import color_sequences, divided_relation_checks, klr_relation_checks, thin_basis_rank
from algebra.lattices import (
    GENERATION_DEGREE,
    characteristic_two_checks,
    chern_example_checks,
    conjecture_probe,
    cuspidal_checks,
    lattice_checks,
    odd_prime_generation_checks,
    tilde_schur_checks,
)
from algebra.phi import phi_checks
from algebra.poly import Polynomial, monomials_of_degree
from algebra.schur import associativity_checks, psi_rank_checks, rank_two_checks
from algebra.thick import thick_checks
from algebra.wreath import (
    crossing_identity_checks,
    expected_wreath_dimensions,
    tau_agrees_with_zigzag,
    wreath_graded_dimension,
    wreath_relation_checks,
    zigzag_relation_checks,
)
from models.frobenius import FrobeniusAlgebra, p1_cohomology, trivial_frobenius
from models.report import CheckRecord, CheckStatus
from models.ring import RingSpec
from models.words import DimVector
from runtime.errors import InputError

from .params import SuiteParams


# A check group is a named, independently runnable batch of checks
CheckGroup = tuple[str, Callable[[], list[CheckRecord]]]

PROBE_PRIMES = (2, 3, 5)


# ============================================================================
# Operator identities
# ============================================================================

def demazure_suite(params: SuiteParams) -> list[CheckGroup]:
    n = max(params.n, 2)
    pairs = [(a, b) for a in (1, 2) for b in (1, 2) if a + b <= max(n, 2)]
    return [
        ("relations", lambda: demazure_relation_checks(n, params.deg)),
        ("shuffle_formula", lambda: shuffle_formula_checks(pairs, params.deg)),
    ]


def schur_suite(params: SuiteParams) -> list[CheckGroup]:
    return [
        ("associativity", lambda: associativity_checks(params.n, params.deg)),
        ("rank_two", lambda: rank_two_checks(params.deg)),
        ("psi_rank", lambda: psi_rank_checks(min(params.n, 3), min(params.deg, 6), params.window_cap)),
    ]


def _frobenius_record(F: FrobeniusAlgebra) -> CheckRecord:
    validation = validate_frobenius(F)
    failed = next((c for c in validation.checks if not c.passed), None)
    if failed is None:
        return CheckRecord(id=f"frobenius_axioms[{F.name}]", status=CheckStatus.PASS,
                           data={'checks': [c.name for c in validation.checks]})
    return CheckRecord(id=f"frobenius_axioms[{F.name}]", status=CheckStatus.FAIL,
                       detail=failed.name, witness=failed.witness)


def _dimension_records(F: FrobeniusAlgebra, n: int, max_degree: int, cap: int) -> list[CheckRecord]:
    """Graded ranks of the wreath basis words against n! (P_t(F) / (1 - t^2))^n"""
    expected = expected_wreath_dimensions(F, n, max_degree)
    records = []
    for degree in range(0, max_degree + 1, 2):
        rank, count, window = wreath_graded_dimension(F, n, degree, cap)
        want = expected.get(degree, 0)
        check_id = f"wreath_dimension[{F.name},n={n},d={degree}]"
        data = {'rank': rank, 'words': count, 'expected': want, 'window': window}
        if count != want:
            records.append(CheckRecord(id=check_id, status=CheckStatus.FAIL, detail="word count",
                                       witness=data))
        elif rank == count:
            records.append(CheckRecord(id=check_id, status=CheckStatus.PASS, data=data))
        else:
            records.append(CheckRecord(id=check_id, status=CheckStatus.INCONCLUSIVE,
                                       detail="rank window cap reached", data=data))
    return records


def wreath_suite(params: SuiteParams) -> list[CheckGroup]:
    groups: list[CheckGroup] = []
    for F in (trivial_frobenius(), p1_cohomology()):
        groups.append((f"axioms[{F.name}]", lambda F=F: [_frobenius_record(F)]))
        groups.append((f"relations[{F.name}]", lambda F=F: wreath_relation_checks(F, params.n, params.deg)))
        groups.append((f"dimensions[{F.name}]", lambda F=F: [
            record
            for n in range(1, min(params.n, 2) + 1)
            for record in _dimension_records(F, n, params.deg, params.window_cap)
        ]))
    return groups


def _tau_identification(n: int, max_degree: int) -> list[CheckRecord]:
    F = p1_cohomology()
    spec = RingSpec(flavor='curve', n=n)
    inputs = [Polynomial.from_terms(spec, {m: 1}) for d in range(0, max_degree + 1, 2)
              for m in monomials_of_degree(spec, d)]
    records = []
    for i in range(1, n):
        bad = next((p for p in inputs if not tau_agrees_with_zigzag(F, p, i)), None)
        if bad is None:
            records.append(CheckRecord(id=f"tau_matches_wreath[{i}]", status=CheckStatus.PASS,
                                       data={'inputs': len(inputs)}))
        else:
            records.append(CheckRecord(id=f"tau_matches_wreath[{i}]", status=CheckStatus.FAIL,
                                       witness={'input': bad.to_json()}))
    return records


def zigzag_suite(params: SuiteParams) -> list[CheckGroup]:
    n3 = min(params.n, 3)
    return [
        ("relations", lambda: zigzag_relation_checks(params.n, params.deg)),
        ("crossing", lambda: crossing_identity_checks(n3, params.deg)),
        ("wreath_identification", lambda: _tau_identification(n3, params.deg)),
    ]


def _thin_rank_records(alpha: DimVector, max_degree: int, cap: int) -> list[CheckRecord]:
    records = []
    for source in color_sequences(alpha):
        for degree in range(-2 * alpha.m * alpha.m, max_degree + 1, 2):
            rank, count, window = thin_basis_rank(alpha, source, degree, cap)
            if count == 0:
                continue
            check_id = f"thin_basis_rank[{alpha.n0},{alpha.n1},{''.join(map(str, source))},d={degree}]"
            data = {'rank': rank, 'count': count, 'window': window}
            status = CheckStatus.PASS if rank == count else CheckStatus.INCONCLUSIVE
            records.append(CheckRecord(id=check_id, status=status, data=data,
                                       detail=None if rank == count else "rank window cap reached"))
    return records


def klr_suite(params: SuiteParams) -> list[CheckGroup]:
    groups: list[CheckGroup] = []
    for alpha in params.dim_vectors():
        label = f"{alpha.n0},{alpha.n1}"
        groups.append((f"relations[{label}]", lambda alpha=alpha: klr_relation_checks(alpha, params.deg)))
        if alpha.m <= 3:
            groups.append((f"thin_basis[{label}]",
                           lambda alpha=alpha: _thin_rank_records(alpha, min(params.deg, 6), params.window_cap)))
    return groups


def divided_suite(params: SuiteParams) -> list[CheckGroup]:
    return [("relations", lambda: divided_relation_checks(params.n, params.deg))]


def thick_suite(params: SuiteParams) -> list[CheckGroup]:
    return [("calculus", lambda: thick_checks(params.n, params.deg))]


# ============================================================================
# Comparison maps and lattices
# ============================================================================

def phi_suite(params: SuiteParams) -> list[CheckGroup]:
    return [("shuffle", lambda: phi_checks(params.n, params.deg))]


def lattice_suite(params: SuiteParams) -> list[CheckGroup]:
    groups: list[CheckGroup] = [("chern", chern_example_checks)]
    for n in range(1, min(params.n, 3) + 1):
        groups.append((f"lattices[n={n}]", lambda n=n: lattice_checks(n, params.deg)))
    return groups


def _fp_phenomena(prime: Optional[int], max_degree: int) -> list[CheckRecord]:
    """The characteristic 2 and odd-prime statements the run prime does not already cover"""
    covered = prime == 2 and max_degree >= 4
    records = [] if covered else characteristic_two_checks()
    for p in PROBE_PRIMES:
        if p > 2 and p != prime:
            records.extend(odd_prime_generation_checks(GENERATION_DEGREE, p))
    return records


def cuspidal_suite(params: SuiteParams) -> list[CheckGroup]:
    groups: list[CheckGroup] = []
    for n in range(1, min(params.n, 3) + 1):
        groups.append((f"spanning[n={n}]", lambda n=n: cuspidal_checks(n, params.deg)))
        groups.append((f"tilde_schur[n={n}]", lambda n=n: tilde_schur_checks(n, params.deg, params.prime)))
    if params.n >= 2:
        groups.append(("fp_phenomena", lambda: _fp_phenomena(params.prime, params.deg)))
    return groups


def conjecture_suite(params: SuiteParams) -> list[CheckGroup]:
    primes = (params.prime,) if params.prime is not None else PROBE_PRIMES
    return [(f"probe[p={p}]", lambda p=p: conjecture_probe(params.n, params.deg, p)) for p in primes]


# Canonical suite order; reports always follow it
SUITES: dict[str, Callable[[SuiteParams], list[CheckGroup]]] = {
    'demazure': demazure_suite,
    'schur': schur_suite,
    'wreath': wreath_suite,
    'zigzag': zigzag_suite,
    'klr': klr_suite,
    'divided': divided_suite,
    'thick': thick_suite,
    'phi': phi_suite,
    'lattice': lattice_suite,
    'cuspidal': cuspidal_suite,
    'conjecture': conjecture_suite,
}

SUITE_ORDER: tuple[str, ...] = tuple(SUITES)


# Parameters report-all uses for each suite before clamping to the configured bounds
ACCEPTANCE_PARAMS: dict[str, dict] = {
    'demazure': {'n': 4, 'deg': 6},
    'schur': {'n': 4, 'deg': 6},
    'wreath': {'n': 4, 'deg': 8},
    'zigzag': {'n': 4, 'deg': 8},
    'klr': {'n': 4, 'deg': 6},
    'divided': {'n': 4, 'deg': 6},
    'thick': {'n': 3, 'deg': 6},
    'phi': {'n': 4, 'deg': 6},
    'lattice': {'n': 3, 'deg': 8},
    'cuspidal': {'n': 3, 'deg': 6},
    'conjecture': {'n': 2, 'deg': 6},
}


def suite_groups(name: str, params: SuiteParams) -> list[CheckGroup]:
    """
    Check groups of a suite

    Raises:
        InputError: unknown suite name
    """
    builder = SUITES.get(name)
    if builder is None:
        raise InputError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_ORDER)}")
    return builder(params)


def acceptance_params(name: str, max_n: int, max_deg: int, prime=None, window_cap: int = 12) -> SuiteParams:
    base = ACCEPTANCE_PARAMS[name]
    return SuiteParams(
        n=min(base['n'], max_n),
        deg=min(base['deg'], max_deg),
        prime=prime,
        window_cap=window_cap,
    )
