"""
Integral Lattices
Im phi and tautological lattices in the symmetric slots, their reductions mod p and the
tilde-Schur consistency checks
"""

import logging
from functools import lru_cache
from typing import Optional, Sequence

from models.lattice import GradedLattice
from models.report import CheckRecord, CheckStatus
from models.ring import Composition, compositions
from runtime.errors import InputError

from .chern import chern_label, chern_monomials, kunneth_chern, tautological_generators
from .combinatorics import double_coset_reps
from .linalg import (
    DenseMatrix,
    elementary_divisors,
    hnf_coordinates,
    hnf_rows,
    matrix_from_sparse_rows,
    sparse_rank,
)
from .phi import (
    cuspidal_spanning_set,
    curve_image,
    im_phi_basis,
    im_phi_generators,
    phi_apply,
    phi_hat,
    quiver_slot_basis,
    quiver_spec,
)
from .poly import (
    Monomial,
    Polynomial,
    invariant_basis,
    invariant_coordinates,
    monomial_label,
    monomial_symmetric,
    partitions_of,
)
from .schur import crossing_apply, curve_spec, merge_apply, merged, psi_word, split_apply, split_at, swapped, word_apply
from .thick import noncuspidal_sequences, thick_generator, thick_apply, thick_word_apply


logger = logging.getLogger("torskur.algebra")

EXPERIMENTAL = "experimental evidence only"
# Degree up to which Im phi_2 and c1c2 are shown to fill the symmetric slot for odd p
GENERATION_DEGREE = 8


# ----------------------------------------------------------------------
# lattices


def ambient_keys(lam: Composition, degree: int) -> list[Monomial]:
    """Orbit representatives of the curve S_lam-invariants of one degree, canonical order"""
    return [rep for rep, _ in invariant_basis(curve_spec(lam.n), lam, degree, ('diagonal',))]


def coordinate_vector(p: Polynomial, lam: Composition, keys: Sequence[Monomial]) -> list[int]:
    """Orbit-sum coordinates of an invariant polynomial over the given keys"""
    coords = invariant_coordinates(p, lam, ('diagonal',))
    stray = set(coords) - set(keys)
    if stray:
        raise InputError(f"{p} has orbits outside degree slot: {sorted(stray)}")
    return [int(coords.get(k, 0)) for k in keys]


def lattice_from_polys(polys: Sequence[Polynomial], lam: Composition, degree: int) -> GradedLattice:
    """
    Z-span of invariant polynomials of one degree

    Rows are the HNF of the generator matrix, divisors come from its Smith form.
    """
    keys = ambient_keys(lam, degree)
    vectors = [coordinate_vector(p, lam, keys) for p in polys]
    vectors = [v for v in vectors if any(v)]
    if not vectors or not keys:
        return GradedLattice(degree=degree, ambient=[list(k) for k in keys])
    matrix = DenseMatrix(vectors, "Z", ncols=len(keys))
    lattice = GradedLattice(
        degree=degree,
        ambient=[list(k) for k in keys],
        rows=hnf_rows(matrix),
        elementary_divisors=elementary_divisors(matrix),
    )
    logger.debug(f"Lattice {lam} deg {degree}: {len(vectors)} generators, rank {lattice.rank} of {len(keys)}")
    return lattice


@lru_cache(maxsize=None)
def im_phi_lattice(lam: Composition, degree: int) -> GradedLattice:
    """phi_lam of the (S_lam)^2-invariants of one degree"""
    return lattice_from_polys(im_phi_generators(lam, degree), lam, degree)


def tautological_polys(n: int, degree: int) -> list[Polynomial]:
    """
    Symmetric polynomials in x times monomials in the positive-degree Kunneth-Chern classes
    """
    spec = curve_spec(n)
    gens = tautological_generators(n, degree)
    keys = sorted(gens)
    out = []
    for chern_degree in range(0, degree + 1, 2):
        sym_half = (degree - chern_degree) // 2
        symmetric = [monomial_symmetric(spec, mu, 'x') for mu in partitions_of(sym_half, n)]
        for mono in chern_monomials(keys, chern_degree):
            product = Polynomial.one(spec)
            for key in mono:
                product = product * gens[key]
            if product.is_zero():
                continue
            out.extend(product * s for s in symmetric)
    return out


@lru_cache(maxsize=None)
def tautological_lattice(n: int, degree: int) -> GradedLattice:
    return lattice_from_polys(tautological_polys(n, degree), Composition.of(n), degree)


def lattice_contains(lattice: GradedLattice, p: Polynomial, lam: Composition) -> bool:
    keys = [tuple(k) for k in lattice.ambient]
    target = coordinate_vector(p, lam, keys)
    if not lattice.rows:
        return not any(target)
    return hnf_coordinates(lattice.rows, target) is not None


def lattice_coordinates(lattice: GradedLattice, p: Polynomial, lam: Composition) -> Optional[list[int]]:
    """Coordinates of p in the HNF basis of the lattice, None outside it"""
    keys = [tuple(k) for k in lattice.ambient]
    target = coordinate_vector(p, lam, keys)
    if not lattice.rows:
        return [] if not any(target) else None
    return hnf_coordinates(lattice.rows, target)


def divisors_coprime_to(lattice: GradedLattice, prime: int) -> int:
    return sum(1 for d in lattice.elementary_divisors if d % prime)


def lattice_summary(lattice: GradedLattice, lam: Composition) -> dict:
    spec = curve_spec(lam.n)
    return {
        'degree': lattice.degree,
        'composition': list(lam.parts),
        'ambient': [monomial_label(spec, tuple(k)) for k in lattice.ambient],
        'rows': lattice.rows,
        'elementary_divisors': lattice.elementary_divisors,
        'rank': lattice.rank,
        'full': lattice.is_full(),
    }


# ----------------------------------------------------------------------
# checks


def _record(check_id: str, ok: bool, detail: str = "", witness=None, data: Optional[dict] = None) -> CheckRecord:
    return CheckRecord(
        id=check_id,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        detail=detail or None,
        witness=None if ok else witness,
        data=data or {},
    )


def chern_example_checks() -> list[CheckRecord]:
    """The displayed Kunneth-Chern values and identities for one and two points"""
    records = []
    one = kunneth_chern(1, 4)
    s1 = curve_spec(1)
    x, c = Polynomial.gen(s1, 'x', 1), Polynomial.gen(s1, 'c', 1)
    records.append(_record("chern_n1_c10", one[(1, 0)] == c, witness=str(one[(1, 0)])))
    lhs = one[(1, 0)] * 2 - one[(2, 1)]
    records.append(_record("chern_n1_x", lhs == x, witness=str(lhs)))

    two = kunneth_chern(2, 6)
    s2 = curve_spec(2)
    x1, x2 = Polynomial.gen(s2, 'x', 1), Polynomial.gen(s2, 'x', 2)
    c1, c2 = Polynomial.gen(s2, 'c', 1), Polynomial.gen(s2, 'c', 2)
    expected = {
        (1, 0): c1 + c2,
        (2, 0): c1 * c2 - c1 * x1 - c2 * x2,
        (2, 1): (c1 + c2) * 3 - x1 - x2,
        (3, 1): x1 ** 2 + x2 ** 2 - c1 * x1 * 5 - c2 * x2 * 5 - c1 * x2 - c2 * x1 + c1 * c2 * 4,
    }
    for key, value in expected.items():
        records.append(_record(f"chern_n2_{chern_label(key)}", two[key] == value, witness=str(two[key])))
    c10, c20, c21, c31 = two[(1, 0)], two[(2, 0)], two[(2, 1)], two[(3, 1)]
    square = c10 ** 2
    records.append(_record("chern_n2_2c1c2", square == c1 * c2 * 2, witness=str(square)))
    combo = c10 ** 2 * 6 - c10 * c21 * 5 + c21 ** 2 - c31 + c20 * 4
    records.append(_record("chern_n2_2x1x2", combo == x1 * x2 * 2, witness=str(combo)))
    return records


def lattice_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    Im phi lattices against the Im phi basis and the tautological lattice
    """
    records = []
    lam = Composition.of(n)
    for d in range(0, max_degree + 1, 2):
        lattice = im_phi_lattice(lam, d)
        basis = im_phi_basis(n, d)
        basis_lattice = lattice_from_polys(basis, lam, d)
        independent = basis_lattice.rank == len(basis)
        records.append(_record(
            f"im_phi_basis_independent[n={n},d={d}]", independent,
            witness={'basis_size': len(basis), 'rank': basis_lattice.rank},
        ))
        records.append(_record(
            f"im_phi_basis_spans[n={n},d={d}]", basis_lattice.rows == lattice.rows,
            witness={'basis_rows': basis_lattice.rows, 'lattice_rows': lattice.rows},
            data={'rank': lattice.rank, 'elementary_divisors': lattice.elementary_divisors},
        ))
        if n <= 2:
            taut = tautological_lattice(n, d)
            records.append(_record(
                f"tautological_equals_im_phi[n={n},d={d}]", taut.rows == lattice.rows,
                witness={'tautological_rows': taut.rows, 'im_phi_rows': lattice.rows},
            ))
        thin = im_phi_lattice(Composition(parts=(1,) * n), d)
        records.append(_record(f"thin_lattice_full[n={n},d={d}]", thin.is_full(), witness=thin.elementary_divisors))
    if n == 2 and max_degree >= 4:
        lattice = im_phi_lattice(lam, 4)
        spec = curve_spec(2)
        c1c2 = Polynomial.gen(spec, 'c', 1) * Polynomial.gen(spec, 'c', 2)
        x1x2 = Polynomial.gen(spec, 'x', 1) * Polynomial.gen(spec, 'x', 2)
        records.append(_record("im_phi_excludes_c1c2", not lattice_contains(lattice, c1c2, lam)))
        records.append(_record("im_phi_contains_2c1c2", lattice_contains(lattice, c1c2 * 2, lam)))
        records.append(_record("im_phi_contains_2x1x2", lattice_contains(lattice, x1x2 * 2, lam)))
    return records


def intertwining_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    phi_hat(D q) == Phi(D) phi_hat(q) for every elementary thick diagram D on n points
    and every slot basis element q of degree <= max_degree
    """
    records = []
    for lam in compositions(n):
        for pos in range(1, len(lam.parts)):
            cases = [('merge', merged(lam, pos), 1), ('cross', swapped(lam, pos), 1)]
            for kind, target, size in cases:
                records.append(_intertwine(kind, lam, target, pos, size, max_degree))
        for pos, part in enumerate(lam.parts, start=1):
            for size in range(1, part):
                records.append(_intertwine('split', lam, split_at(lam, pos, size), pos, size, max_degree))
    return records


def _curve_generator(kind: str, p: Polynomial, lam: Composition, target: Composition, pos: int) -> Polynomial:
    if kind == 'merge':
        return merge_apply(p, lam, target)
    if kind == 'split':
        return split_apply(p, lam, target)
    return crossing_apply(p, lam, target, pos)


def _intertwine(kind: str, lam: Composition, target: Composition, pos: int, size: int, max_degree: int) -> CheckRecord:
    compiled = thick_generator(kind, lam.parts, pos, size)
    check_id = f"phi_intertwines_{kind}[{lam}->{target},pos={pos}]"
    trace: list = []
    for d in range(0, max_degree + 1, 2):
        for q in quiver_slot_basis(lam, d):
            thick = phi_hat(thick_apply(compiled, q, trace))
            curve = _curve_generator(kind, phi_hat(q), lam, target, pos)
            if thick != curve:
                return _record(check_id, False, witness={'input': q.to_json(), 'thick': str(thick), 'curve': str(curve)})
    bad = noncuspidal_sequences(trace)
    if bad:
        return _record(check_id, False, detail="non-cuspidal idempotent traversed", witness=[list(c) for c in bad])
    return _record(check_id, True)


def reduction_checks(n: int, max_degree: int, prime: int) -> list[CheckRecord]:
    """F_p rank of the Im phi basis equals the number of divisors prime to p"""
    records = []
    lam = Composition.of(n)
    for d in range(0, max_degree + 1, 2):
        lattice = im_phi_lattice(lam, d)
        keys = ambient_keys(lam, d)
        rows = [dict(zip(keys, coordinate_vector(p, lam, keys))) for p in im_phi_basis(n, d)]
        r = sparse_rank(rows, f"Fp:{prime}")
        expected = divisors_coprime_to(lattice, prime)
        records.append(_record(
            f"reduced_rank[n={n},d={d},p={prime}]", r == expected,
            witness={'fp_rank': r, 'expected': expected},
            data={'fp_rank': r, 'q_rank': lattice.rank},
        ))
    return records


def characteristic_two_checks() -> list[CheckRecord]:
    """
    (v1+v2-u1-u2)^2 maps to 2c1c2: zero over F_2, nonzero over Z, and S(2c1c2)
    vanishes in the reduced thin lattice but not in the reduced thick one
    """
    records = []
    spec = quiver_spec(2)
    u1, u2 = Polynomial.gen(spec, 'u', 1), Polynomial.gen(spec, 'u', 2)
    v1, v2 = Polynomial.gen(spec, 'v', 1), Polynomial.gen(spec, 'v', 2)
    q = (v1 + v2 - u1 - u2) ** 2
    image = phi_apply(q, Composition.of(2))
    cspec = curve_spec(2)
    two_c1c2 = Polynomial.gen(cspec, 'c', 1) * Polynomial.gen(cspec, 'c', 2) * 2
    records.append(_record("square_maps_to_2c1c2", image == two_c1c2, witness=str(image)))
    records.append(_record("square_nonzero_over_Z", not image.is_zero()))
    reduced = phi_apply(q.with_coeff("Fp:2"))
    records.append(_record("square_in_kernel_over_F2", reduced.is_zero(), witness=str(reduced)))

    thick = im_phi_lattice(Composition.of(2), 4)
    thin = im_phi_lattice(Composition.of(1, 1), 4)
    thick_coords = lattice_coordinates(thick, two_c1c2, Composition.of(2))
    split = split_apply(two_c1c2, Composition.of(2), Composition.of(1, 1))
    thin_coords = lattice_coordinates(thin, split, Composition.of(1, 1))
    thick_nonzero = thick_coords is not None and any(v % 2 for v in thick_coords)
    thin_zero = thin_coords is not None and not any(v % 2 for v in thin_coords)
    records.append(_record(
        "split_of_2c1c2_vanishes_mod_2", thin_zero and thick_nonzero,
        witness={'thick_coordinates': thick_coords, 'thin_coordinates': thin_coords},
    ))
    return records


def odd_prime_generation_checks(max_degree: int, prime: int) -> list[CheckRecord]:
    """Im phi_2 together with c1c2 times lower symmetric elements fills P_2^{S_2} over F_p"""
    records = []
    lam = Composition.of(2)
    spec = curve_spec(2)
    c1c2 = Polynomial.gen(spec, 'c', 1) * Polynomial.gen(spec, 'c', 2)
    for d in range(0, max_degree + 1, 2):
        keys = ambient_keys(lam, d)
        polys = list(im_phi_basis(2, d)) + [c1c2 * p for p in im_phi_basis(2, d - 4)]
        rows = [dict(zip(keys, coordinate_vector(p, lam, keys))) for p in polys]
        r = sparse_rank(rows, f"Fp:{prime}")
        records.append(_record(
            f"c1c2_generates[d={d},p={prime}]", r == len(keys),
            witness={'fp_rank': r, 'ambient_dim': len(keys)},
        ))
    return records


def tilde_schur_checks(n: int, max_degree: int, prime: Optional[int] = None) -> list[CheckRecord]:
    """
    Intertwining, reduced ranks and the characteristic-specific phenomena
    """
    records = intertwining_checks(n, max_degree)
    if prime is None:
        return records
    records.extend(reduction_checks(n, max_degree, prime))
    if n == 2 and prime == 2 and max_degree >= 4:
        records.extend(characteristic_two_checks())
    if n == 2 and prime > 2:
        records.extend(odd_prime_generation_checks(max(max_degree, GENERATION_DEGREE), prime))
    return records


# ----------------------------------------------------------------------
# cuspidal spanning set and faithfulness probe


def _first_mismatch(word, lam: Composition, max_degree: int, trace: list) -> Optional[dict]:
    image = curve_image(word)
    for e in range(0, max_degree + 1, 2):
        for inp in quiver_slot_basis(lam, e):
            thick = phi_hat(thick_word_apply(word, inp, trace))
            curve = word_apply(image, phi_hat(inp))
            if thick != curve:
                return {'word': [g.kind for g in word.generators], 'input': inp.to_json()}
    return None


def cuspidal_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    Thick spanning words avoid non-cuspidal idempotents and agree with their curve images
    """
    records = []
    for mu in compositions(n):
        for lam in compositions(n):
            trace: list = []
            mismatch = None
            count = 0
            for d in range(0, max_degree + 1, 2):
                for word, _ in cuspidal_spanning_set(mu, lam, d):
                    count += 1
                    mismatch = mismatch or _first_mismatch(word, lam, max_degree - d, trace)
            bad = noncuspidal_sequences(trace)
            ok = mismatch is None and not bad
            detail = None
            if mismatch:
                detail = "curve image mismatch"
            elif bad:
                detail = "non-cuspidal idempotent traversed"
            records.append(_record(
                f"cuspidal_span[{mu}<-{lam}]", ok, detail=detail or "",
                witness=mismatch or [list(c) for c in bad],
                data={'words': count},
            ))
    return records


def _lattice_inputs(lam: Composition, lattice: GradedLattice) -> list[Polynomial]:
    """The HNF basis of a lattice as polynomials"""
    orbit_sums = dict(invariant_basis(curve_spec(lam.n), lam, lattice.degree, ('diagonal',)))
    out = []
    for row in lattice.rows:
        p = Polynomial.zero(curve_spec(lam.n))
        for key, coeff in zip(lattice.ambient, row):
            if coeff:
                p = p + orbit_sums[tuple(key)] * coeff
        out.append(p)
    return out


def _operator_rows(mu: Composition, lam: Composition, max_degree: int) -> list[tuple[int, dict]]:
    """
    The decorated spanning words as integer matrices between Im phi lattices

    Inputs are the HNF basis of Im phi_lam per degree, outputs are read in the HNF basis of
    Im phi_mu of the output degree; one (word degree, sparse row) pair per word.
    """
    rows = []
    for coset in double_coset_reps(mu, lam):
        lam_prime = Composition(parts=coset.lam_prime)
        for e in range(0, max_degree + 1, 2):
            for dec in im_phi_generators(lam_prime, e):
                word = psi_word(mu, lam, coset, dec)
                row: dict = {}
                for d in range(0, max_degree - e + 1, 2):
                    target = im_phi_lattice(mu, d + e)
                    for i, inp in enumerate(_lattice_inputs(lam, im_phi_lattice(lam, d))):
                        out = word_apply(word, inp)
                        coords = lattice_coordinates(target, out, mu)
                        if coords is None:
                            raise InputError(f"{out} left the Im phi lattice of {mu}")
                        for j, v in enumerate(coords):
                            if v:
                                row[(e, d, i, j)] = v
                rows.append((e, row))
    return rows


def _ranks(rows: list[dict], prime: int) -> tuple[int, int]:
    """Rank over Q and over F_p of integer rows, read off the Smith divisors"""
    if not rows:
        return 0, 0
    divisors = elementary_divisors(matrix_from_sparse_rows(rows, "Z")[0])
    return len(divisors), sum(1 for d in divisors if d % prime)


def conjecture_probe(n: int, max_degree: int, prime: int) -> list[CheckRecord]:
    """
    Rank over Q against rank over F_p of the spanning operators on the Im phi lattices

    Ranks are given for all words together and per decoration degree. A drop marks
    a candidate against faithfulness; every record is evidence, not a verdict.
    """
    records = []
    for mu in compositions(n):
        for lam in compositions(n):
            check_id = f"probe[{mu}<-{lam},p={prime}]"
            try:
                rows = _operator_rows(mu, lam, max_degree)
            except InputError as e:
                records.append(CheckRecord(
                    id=check_id, status=CheckStatus.INCONCLUSIVE, detail=f"{EXPERIMENTAL}: {e}",
                ))
                continue
            rows = [(e, r) for e, r in rows if r]
            q_rank, fp_rank = _ranks([r for _, r in rows], prime)
            by_degree = []
            for e in sorted({e for e, _ in rows}):
                q_e, fp_e = _ranks([r for d, r in rows if d == e], prime)
                by_degree.append({'decoration_degree': e, 'q_rank': q_e, 'fp_rank': fp_e})
            records.append(CheckRecord(
                id=check_id,
                status=CheckStatus.PASS,
                detail=EXPERIMENTAL,
                data={
                    'q_rank': q_rank,
                    'fp_rank': fp_rank,
                    'rank_drop': q_rank - fp_rank,
                    'candidate': q_rank != fp_rank,
                    'by_degree': by_degree,
                },
            ))
    return records
