"""
Comparison Maps
phi: u -> x, v -> x + c and its sign-normalised form, the two shuffle products,
the elements f_k, t_{n,k} and the Im phi bases
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Iterable, Optional

from models.report import CheckRecord, CheckStatus
from models.ring import Composition, RingSpec, compositions
from models.words import SchurWord
from runtime.errors import ExactnessError, InputError, InvarianceError, RingMismatchError

from .demazure import demazure_w0ab
from .combinatorics import double_coset_reps
from .linalg import left_kernel, matrix_from_sparse_rows, sparse_rank
from .poly import (
    Polynomial,
    elementary_symmetric,
    invariant_basis,
    invariant_coordinates,
    is_invariant,
    monomial_symmetric,
    partitions_of,
)
from .schur import curve_spec, psi_word, shuffle_curve, shuffle_curve_many


QUIVER_MODES = ('first', 'second')


def quiver_spec(n: int, coeff: str = "Z") -> RingSpec:
    return RingSpec(flavor='quiver', n=n, coeff=coeff)


def _require_quiver(q: Polynomial) -> None:
    if q.spec.flavor != 'quiver':
        raise RingMismatchError(f"expected an element of Poll_n, got the {q.spec.flavor} flavor")


def _check_slot(q: Polynomial, lam: Optional[Composition]) -> None:
    if lam is not None and not is_invariant(q, lam, QUIVER_MODES):
        raise InvarianceError(f"{q} is not (S_{lam})^2-invariant")


def phi_apply(q: Polynomial, lam: Optional[Composition] = None) -> Polynomial:
    """
    u_i -> x_i, v_i -> x_i + c_i

    Args:
        q: element of Poll_n
        lam: when given, q must be invariant under S_lam on u and v separately
    """
    _require_quiver(q)
    _check_slot(q, lam)
    target = curve_spec(q.n, q.spec.coeff)
    x = [Polynomial.gen(target, 'x', i) for i in range(1, q.n + 1)]
    c = [Polynomial.gen(target, 'c', i) for i in range(1, q.n + 1)]
    return q.substitute(target, x + [xi + ci for xi, ci in zip(x, c)])


def phi_hat(q: Polynomial, lam: Optional[Composition] = None) -> Polynomial:
    """
    u_i -> -x_i, v_i -> -x_i + c_i

    phi followed by x -> -x; the form that intertwines thick diagrams with curve diagrams.
    """
    _require_quiver(q)
    _check_slot(q, lam)
    target = curve_spec(q.n, q.spec.coeff)
    x = [-Polynomial.gen(target, 'x', i) for i in range(1, q.n + 1)]
    c = [Polynomial.gen(target, 'c', i) for i in range(1, q.n + 1)]
    return q.substitute(target, x + [xi + ci for xi, ci in zip(x, c)])


def ev(q: Polynomial) -> Polynomial:
    """Set every u_i to 0; the result is read in k[y_1..y_n] with y_i = v_i"""
    _require_quiver(q)
    target = RingSpec(flavor='plain', n=q.n, coeff=q.spec.coeff)
    zero = [Polynomial.zero(target)] * q.n
    return q.substitute(target, zero + [Polynomial.gen(target, 'y', i) for i in range(1, q.n + 1)])


# ----------------------------------------------------------------------
# quiver shuffle


def quiver_merge(q: Polynomial, lam: Composition, pos: int) -> Polynomial:
    """
    Merge of blocks pos, pos+1 of lam on Poll_n:
    d^u_{w0,a,b} d^v_{w0,a,b}(q * prod (v_i - u_j)^2), i in block pos, j in block pos+1
    """
    _require_quiver(q)
    _check_slot(q, lam)
    a, b = lam.parts[pos - 1], lam.parts[pos]
    offset = lam.partial_sums[pos - 1]
    spec = q.spec
    factor = Polynomial.one(spec)
    for i in range(offset + 1, offset + a + 1):
        for j in range(offset + a + 1, offset + a + b + 1):
            factor = factor * (Polynomial.gen(spec, 'v', i) - Polynomial.gen(spec, 'u', j)) ** 2
    out = demazure_w0ab(q * factor, a, b, 'v', offset)
    out = demazure_w0ab(out, a, b, 'u', offset)
    parts = list(lam.parts)
    parts[pos - 1:pos + 1] = [a + b]
    if not is_invariant(out, Composition(parts=tuple(parts)), QUIVER_MODES):
        raise ExactnessError(f"quiver merge of {q} is not invariant")
    return out


def shuffle_klr(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    P * Q = d^u_{w0,a,b} d^v_{w0,a,b}((P (x) Q) prod_{i<=a<j} (v_i - u_j)^2)

    Zero-variable factors act as scalars. Associative, not commutative.
    """
    _require_quiver(p)
    _require_quiver(q)
    a, b = p.n, q.n
    if a == 0:
        return q * p.coefficient(())
    if b == 0:
        return p * q.coefficient(())
    _check_slot(p, Composition.of(a))
    _check_slot(q, Composition.of(b))
    spec = quiver_spec(a + b, p.spec.coeff)
    placed = p.embed(spec, 0) * q.embed(spec, a)
    return quiver_merge(placed, Composition.of(a, b), 1)


# ----------------------------------------------------------------------
# f_k, t_{n,k}


def f_curve(k: int, coeff: str = "Z") -> Polynomial:
    """f_k = c x^{k-1} in one variable"""
    if k < 1:
        raise InputError(f"f_k needs k >= 1, got {k}")
    spec = curve_spec(1, coeff)
    return Polynomial.gen(spec, 'c', 1) * Polynomial.gen(spec, 'x', 1) ** (k - 1)


def f_tilde(k: int, coeff: str = "Z") -> Polynomial:
    """(v - u) u^{k-1} in Poll_1"""
    if k < 1:
        raise InputError(f"f~_k needs k >= 1, got {k}")
    spec = quiver_spec(1, coeff)
    u, v = Polynomial.gen(spec, 'u', 1), Polynomial.gen(spec, 'v', 1)
    return (v - u) * u ** (k - 1)


def t_curve(n: int, k: int, coeff: str = "Z") -> Polynomial:
    """t_{n,k} = 1_{n-1} * f_k"""
    return shuffle_curve(Polynomial.one(curve_spec(n - 1, coeff)), f_curve(k, coeff))


def t_tilde(n: int, k: int, coeff: str = "Z") -> Polynomial:
    return shuffle_klr(Polynomial.one(quiver_spec(n - 1, coeff)), f_tilde(k, coeff))


def one_star_f_sides(n: int, k: int) -> tuple[Polynomial, Polynomial]:
    """ev(1_{n-1} * f~_k) and (-1)^{k-1} sigma_k in n variables"""
    lhs = ev(t_tilde(n, k))
    sigma = elementary_symmetric(lhs.spec, k, 'y')
    return lhs, sigma if k % 2 else -sigma


# ----------------------------------------------------------------------
# Im phi


def _k_tuples(r: int, total: int) -> list[tuple[int, ...]]:
    """Nondecreasing tuples (k_1..k_r), k_i >= 1, summing to total"""
    return [ks for ks in combinations_with_replacement(range(1, total + 1), r) if sum(ks) == total]


@lru_cache(maxsize=None)
def im_phi_basis(n: int, degree: int, coeff: str = "Z") -> tuple[Polynomial, ...]:
    """
    P * f_{k1} * ... * f_{kr} of one degree

    P runs over the monomial orbit sums m_lambda in n - r variables, k over nondecreasing
    tuples; ordered by r, then the k-tuple, then lambda in decreasing order.
    """
    if degree < 0 or degree % 2:
        return ()
    half = degree // 2
    out = []
    for r in range(0, n + 1):
        rest = n - r
        for ks in ([()] if r == 0 else [kt for t in range(r, half + 1) for kt in _k_tuples(r, t)]):
            p_half = half - sum(ks)
            if p_half < 0:
                continue
            spec = curve_spec(rest, coeff)
            if rest == 0:
                symmetric = [Polynomial.one(spec)] if p_half == 0 else []
            else:
                symmetric = [monomial_symmetric(spec, lam, 'x') for lam in partitions_of(p_half, rest)]
            for sym in symmetric:
                out.append(shuffle_curve_many([sym] + [f_curve(k, coeff) for k in ks]))
    return tuple(out)


def quiver_slot_basis(lam: Composition, degree: int, coeff: str = "Z") -> list[Polynomial]:
    """Products of u- and v-orbit sums per block: a Z-basis of (S_lam)^2-invariants"""
    return [poly for _, poly in invariant_basis(quiver_spec(lam.n, coeff), lam, degree, QUIVER_MODES)]


def im_phi_generators(lam: Composition, degree: int, coeff: str = "Z") -> list[Polynomial]:
    """phi of the slot basis; these generate Im phi_lam over Z"""
    return [phi_apply(q) for q in quiver_slot_basis(lam, degree, coeff)]


def decoration_basis(lam: Composition, degree: int) -> list[Polynomial]:
    """
    Slot basis elements whose phi-hat images are linearly independent over Q

    Chosen greedily in canonical order; their images span Im phi_lam (x) Q.
    """
    chosen: list[Polynomial] = []
    rows: list[dict] = []
    rank = 0
    for q in quiver_slot_basis(lam, degree):
        image = phi_hat(q)
        candidate = rows + [dict(invariant_coordinates(image, lam))]
        r = sparse_rank(candidate, "Q")
        if r > rank:
            chosen.append(q)
            rows, rank = candidate, r
    return chosen


def phi_kernel(lam: Composition, degree: int) -> list[Polynomial]:
    """
    Z-basis of Ker phi_lam on one degree of the (S_lam)^2-invariants

    Integer left kernel of the substitution matrix, read back as polynomials.
    """
    slot = quiver_slot_basis(lam, degree)
    if not slot:
        return []
    rows = [dict(invariant_coordinates(phi_apply(q), lam)) for q in slot]
    matrix, _ = matrix_from_sparse_rows(rows, "Z")
    out = []
    for vec in left_kernel(matrix):
        q = Polynomial.zero(slot[0].spec)
        for coeff, basis_elt in zip(vec, slot):
            if coeff:
                q = q + basis_elt * coeff
        out.append(q)
    return out


# ----------------------------------------------------------------------
# cuspidal spanning set


def cuspidal_spanning_set(mu: Composition, lam: Composition, degree: int) -> list[tuple[SchurWord, Polynomial]]:
    """
    Thick words Psi_g^q with quiver decorations q, one family per double coset

    The decorations are the greedy phi-hat basis of the lambda'-slot; each word's curve
    image under Phi is the curve word decorated by phi_hat(q).
    """
    out = []
    for coset in double_coset_reps(mu, lam):
        lam_prime = Composition(parts=coset.lam_prime)
        for q in decoration_basis(lam_prime, degree):
            out.append((psi_word(mu, lam, coset, q), q))
    return out


def curve_image(word: SchurWord) -> SchurWord:
    """Phi of a thick word: decorations pass through phi_hat, diagrams are kept"""
    gens = []
    for gen in word.generators:
        if gen.kind == 'poly':
            gens.append(gen.model_copy(update={'poly': phi_hat(gen.poly)}))
        else:
            gens.append(gen)
    return SchurWord(n=word.n, source=word.source, generators=gens)


# ----------------------------------------------------------------------
# checks


def _record(check_id: str, pairs: Iterable[tuple[Any, Any, Any]]) -> CheckRecord:
    count = 0
    for inp, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            return CheckRecord(
                id=check_id,
                status=CheckStatus.FAIL,
                witness={'input': str(inp), 'lhs': str(lhs), 'rhs': str(rhs)},
            )
    return CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': count})


def _symmetric_quiver(a: int, max_degree: int) -> list[Polynomial]:
    return [q for d in range(0, max_degree + 1, 2) for q in quiver_slot_basis(Composition.of(a), d)]


def example_checks() -> list[CheckRecord]:
    q1, c1spec = quiver_spec(1), curve_spec(1)
    u, v = Polynomial.gen(q1, 'u', 1), Polynomial.gen(q1, 'v', 1)
    x, c = Polynomial.gen(c1spec, 'x', 1), Polynomial.gen(c1spec, 'c', 1)
    q2, c2spec = quiver_spec(2), curve_spec(2)
    diff = Polynomial.gen(q2, 'v', 1) + Polynomial.gen(q2, 'v', 2) - Polynomial.gen(q2, 'u', 1) - Polynomial.gen(q2, 'u', 2)
    c1, c2 = Polynomial.gen(c2spec, 'c', 1), Polynomial.gen(c2spec, 'c', 2)
    return [
        _record("phi_u", [(u, phi_apply(u), x)]),
        _record("phi_v", [(v, phi_apply(v), x + c)]),
        _record("phi_linear_difference", [(diff, phi_apply(diff), c1 + c2)]),
        _record("phi_difference_square", [(diff ** 2, phi_apply(diff ** 2), c1 * c2 * 2)]),
        _record("quiver_one_star_one", [(1, shuffle_klr(Polynomial.one(q1), Polynomial.one(q1)), Polynomial.constant(q2, 2))]),
        _record("curve_one_star_one", [(1, shuffle_curve(Polynomial.one(c1spec), Polynomial.one(c1spec)),
                                        Polynomial.constant(c2spec, 2))]),
        _record("curve_shuffle_not_commutative", [(x, shuffle_curve(Polynomial.one(c1spec), x) != shuffle_curve(x, Polynomial.one(c1spec)), True)]),
    ]


def one_star_f_checks(max_n: int) -> list[CheckRecord]:
    """ev(1_{n-1} * f~_k) = (-1)^{k-1} sigma_k for n <= max_n, 1 <= k <= n"""
    return [
        _record(f"one_star_f[n={n},k={k}]", [((n, k), *one_star_f_sides(n, k))])
        for n in range(1, max_n + 1)
        for k in range(1, n + 1)
    ]


def homomorphism_checks(max_n: int, max_degree: int) -> list[CheckRecord]:
    """phi_hat(P * Q) = phi_hat(P) * phi_hat(Q) for a + b <= max_n"""
    records = []
    for total in range(2, max_n + 1):
        for a in range(1, total):
            b = total - a
            pairs = (
                (f"{p} | {q}", phi_hat(shuffle_klr(p, q)), shuffle_curve(phi_hat(p), phi_hat(q)))
                for p in _symmetric_quiver(a, max_degree)
                for q in _symmetric_quiver(b, max_degree - max(p.degree, 0))
            )
            records.append(_record(f"phi_hat_shuffle_homomorphism[{a},{b}]", pairs))
    return records


def associativity_checks(max_degree: int) -> list[CheckRecord]:
    """(P * Q) * R = P * (Q * R) on one strand each, both sides of phi"""
    quiver = _symmetric_quiver(1, max_degree)
    curve = [p for d in range(0, max_degree + 1, 2) for _, p in invariant_basis(curve_spec(1), Composition.of(1), d)]
    return [
        _record("quiver_shuffle_associative", (
            (f"{p} | {q} | {r}", shuffle_klr(shuffle_klr(p, q), r), shuffle_klr(p, shuffle_klr(q, r)))
            for p in quiver for q in quiver for r in quiver
            if max(p.degree, 0) + max(q.degree, 0) + max(r.degree, 0) <= max_degree
        )),
        _record("curve_shuffle_associative", (
            (f"{p} | {q} | {r}", shuffle_curve(shuffle_curve(p, q), r), shuffle_curve(p, shuffle_curve(q, r)))
            for p in curve for q in curve for r in curve
            if max(p.degree, 0) + max(q.degree, 0) + max(r.degree, 0) <= max_degree
        )),
    ]


def t_product_checks(max_n: int, max_k: int = 2) -> list[CheckRecord]:
    """
    t_{n,k1} ... t_{n,kr} = 1_{n-r} * f_{k1} * ... * f_{kr} for r <= n, and 0 for r > n
    """
    records = []
    for n in range(1, max_n + 1):
        for r in range(1, n + 2):
            for ks in combinations_with_replacement(range(1, max_k + 1), r):
                product = Polynomial.one(curve_spec(n))
                for k in ks:
                    product = product * t_curve(n, k)
                if r <= n:
                    expected = shuffle_curve_many([Polynomial.one(curve_spec(n - r))] + [f_curve(k) for k in ks])
                else:
                    expected = Polynomial.zero(curve_spec(n))
                records.append(_record(f"t_product[n={n},k={','.join(map(str, ks))}]", [(ks, product, expected)]))
    return records


def f_commutativity_checks(max_k: int = 3) -> list[CheckRecord]:
    """f~_{k1} * f~_{k2} and f~_{k2} * f~_{k1} agree after phi_hat"""
    return [
        _record(f"f_tilde_commute[{k1},{k2}]", [(
            (k1, k2),
            phi_hat(shuffle_klr(f_tilde(k1), f_tilde(k2))),
            phi_hat(shuffle_klr(f_tilde(k2), f_tilde(k1))),
        )])
        for k1 in range(1, max_k + 1)
        for k2 in range(k1 + 1, max_k + 1)
    ]


def power_sum_difference(n: int) -> Polynomial:
    """(v_1 + ... + v_n - u_1 - ... - u_n)^{n+1}, in Ker phi_lam for every lam since (sum c_i)^{n+1} = 0"""
    spec = quiver_spec(n)
    diff = Polynomial.zero(spec)
    for i in range(1, n + 1):
        diff = diff + Polynomial.gen(spec, 'v', i) - Polynomial.gen(spec, 'u', i)
    return diff ** (n + 1)


def kernel_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    Every integer kernel vector of phi_lam maps to zero, and the kernel computed from the
    substitution matrix contains the power-sum difference in its degree
    """
    records = []
    known = power_sum_difference(n)
    for lam in compositions(n):
        for d in range(0, max_degree + 1, 2):
            kernel = phi_kernel(lam, d)
            records.append(_record(
                f"phi_kernel[{lam},d={d}]",
                ((q, phi_apply(q).is_zero(), True) for q in kernel),
            ))
            if d == known.degree:
                rows = [dict(invariant_coordinates(q, lam)) for q in kernel]
                spanned = sparse_rank(rows + [dict(invariant_coordinates(known, lam))], "Q") == len(kernel)
                records.append(_record(f"power_sum_difference_in_kernel[{lam}]", [(known, spanned, True)]))
    return records


def phi_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """Shuffle, homomorphism, f_k and t_{n,k} identities up to n points"""
    records = example_checks()
    records.extend(one_star_f_checks(min(n, 4)))
    records.extend(homomorphism_checks(min(n, 4), max_degree))
    records.extend(associativity_checks(min(max_degree, 4)))
    records.extend(t_product_checks(min(n, 3)))
    records.extend(f_commutativity_checks())
    records.extend(kernel_checks(min(n, 3), max_degree))
    return records
