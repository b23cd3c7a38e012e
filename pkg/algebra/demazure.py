"""
Demazure Operators
Divided differences on one variable family, the (c_r + c_{r+1}) twisted version, and
an independent fraction-field evaluation of block-shuffle sums
"""

from typing import Sequence

from sympy.polys.fields import FracField

from models.report import CheckRecord, CheckStatus
from models.ring import Composition, RingSpec
from runtime.errors import ExactnessError, InputError, RingMismatchError

from .combinatorics import coset_reps, w0, w0ab, reduced_word, shift_word
from .poly import Polynomial, from_scalar, invariant_basis, is_invariant, monomials_of_degree, poly_ring


_FAMILY_MODE = {'x': 'first', 'u': 'first', 'v': 'second', 'y': 'diagonal'}


def _family_index(spec: RingSpec, family: str, r: int) -> tuple[int, int]:
    """0-based generator indices of family_r and family_{r+1}"""
    if family not in spec.families:
        raise RingMismatchError(f"family {family!r} not in {spec.flavor} ring")
    if family == 'c':
        raise RingMismatchError("c-variables square to zero; use delta_demazure")
    if not 1 <= r < spec.n:
        raise InputError(f"index {r} out of range for n={spec.n}")
    base = spec.families.index(family) * spec.n
    return base + r - 1, base + r


def demazure(p: Polynomial, r: int, family: str = 'y') -> Polynomial:
    """
    (p - s_r p) / (g_r - g_{r+1}) with s_r swapping only the named family

    On the curve flavor the x-only swap is allowed (it leaves c untouched);
    the c family is rejected.

    Raises:
        RingMismatchError: family not available
        ExactnessError: numerator not divisible (a bug)
    """
    i, j = _family_index(p.spec, family, r)
    mode = _FAMILY_MODE[family] if p.spec.flavor != 'plain' else 'diagonal'
    numerator = p - p.swap(r, mode)
    if numerator.is_zero():
        return numerator
    return numerator.exquo_linear(i, j)


def delta_demazure(p: Polynomial, r: int) -> Polynomial:
    """
    (c_r + c_{r+1}) (p - s_r p) / (x_r - x_{r+1}) with the diagonal swap

    The product is taken in P_n before dividing, so the result is defined over any
    coefficient ring.
    """
    spec = p.spec
    if spec.flavor != 'curve':
        raise RingMismatchError("delta_demazure needs the curve flavor")
    if not 1 <= r < spec.n:
        raise InputError(f"index {r} out of range for n={spec.n}")
    delta = Polynomial.gen(spec, 'c', r) + Polynomial.gen(spec, 'c', r + 1)
    numerator = delta * (p - p.swap(r, 'diagonal'))
    if numerator.is_zero():
        return numerator
    return numerator.exquo_linear(r - 1, r)


def demazure_word(p: Polynomial, word: Sequence[int], family: str = 'y') -> Polynomial:
    """
    d_{k1} d_{k2} ... d_{kr} applied to p; the rightmost operator acts first
    """
    out = p
    for k in reversed(list(word)):
        if out.is_zero():
            return out
        out = demazure(out, k, family)
    return out


def demazure_w0(p: Polynomial, family: str = 'y', offset: int = 0, size: int | None = None) -> Polynomial:
    """d_{w0} on the variables offset+1 .. offset+size"""
    size = p.n - offset if size is None else size
    return demazure_word(p, shift_word(reduced_word(w0(size)), offset), family)


def demazure_w0ab(p: Polynomial, a: int, b: int, family: str = 'y', offset: int = 0) -> Polynomial:
    """d_{w_{0,a,b}} on the variables offset+1 .. offset+a+b"""
    _, word = w0ab(a, b)
    return demazure_word(p, shift_word(word, offset), family)


# ----------------------------------------------------------------------
# fraction-field oracle


def shuffle_sum_oracle(p: Polynomial, a: int, b: int) -> Polynomial:
    """
    Sum over w in S_{a+b}/(S_a x S_b) of w(p / prod_{i<=a<j} (y_i - y_j))

    Evaluated in sympy's rational function field with explicit denominators; the
    result must be a polynomial.

    Args:
        p: plain polynomial in a+b variables, S_a x S_b invariant

    Returns:
        The sum as a polynomial over Q
    """
    spec = p.spec
    if spec.flavor != 'plain' or spec.n != a + b:
        raise RingMismatchError(f"oracle expects a plain ring in {a + b} variables")
    ring = poly_ring(spec.with_coeff("Q"))
    field = FracField(ring.symbols, ring.domain, ring.order)
    gens = ring.gens
    denominator = ring.one
    for i in range(a):
        for j in range(a, a + b):
            denominator *= gens[i] - gens[j]
    numerator = p.with_coeff("Q").element
    total = field.zero
    for w in coset_reps(Composition.of(a + b), Composition.of(a, b)):
        images = [gens[w[k] - 1] for k in range(a + b)]
        total += field(numerator.compose(list(zip(gens, images)))) / field(
            denominator.compose(list(zip(gens, images))))
    if not total.denom.is_ground:
        raise ExactnessError(f"shuffle sum is not a polynomial: {total}")
    quotient = total.numer.quo_ground(total.denom.LC)
    terms = {m: from_scalar(c, "Q") for m, c in quotient.items()}
    return Polynomial.from_terms(spec.with_coeff("Q"), terms)


# ----------------------------------------------------------------------
# relation checks


def _monomial_inputs(spec: RingSpec, max_degree: int) -> list[Polynomial]:
    return [
        Polynomial.from_terms(spec, {m: 1})
        for d in range(0, max_degree + 1, 2)
        for m in monomials_of_degree(spec, d)
    ]


def _operator_record(check_id: str, pairs) -> CheckRecord:
    count = 0
    for inp, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            return CheckRecord(
                id=check_id,
                status=CheckStatus.FAIL,
                witness={'input': inp.to_json(), 'lhs': str(lhs), 'rhs': str(rhs)},
            )
    return CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': count})


def demazure_relation_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    d_r^2 = 0, far commutation, braid relations, symmetry of d_{w0} and the kernel
    criterion, on all monomials in y_1..y_n of degree <= max_degree
    """
    spec = RingSpec(flavor='plain', n=n)
    inputs = _monomial_inputs(spec, max_degree)
    records = []
    for r in range(1, n):
        records.append(_operator_record(
            f"demazure_square[{r}]",
            ((p, demazure(demazure(p, r), r), Polynomial.zero(spec)) for p in inputs),
        ))
        records.append(_operator_record(
            f"demazure_kernel[{r}]",
            ((p, demazure(p, r).is_zero(), p.swap(r) == p) for p in inputs),
        ))
        for t in range(r + 2, n):
            records.append(_operator_record(
                f"demazure_far[{r},{t}]",
                ((p, demazure_word(p, [r, t]), demazure_word(p, [t, r])) for p in inputs),
            ))
        if r + 1 < n:
            records.append(_operator_record(
                f"demazure_braid[{r}]",
                ((p, demazure_word(p, [r, r + 1, r]), demazure_word(p, [r + 1, r, r + 1])) for p in inputs),
            ))
    full = Composition.of(n) if n else None
    if full is not None:
        records.append(_operator_record(
            "demazure_w0_symmetric",
            ((p, is_invariant(demazure_w0(p), full), True) for p in inputs),
        ))
    return records


def shuffle_formula_checks(pairs: Sequence[tuple[int, int]], max_degree: int) -> list[CheckRecord]:
    """d_{w_{0,a,b}} against the fraction-field shuffle sum on S_a x S_b invariants"""
    records = []
    for a, b in pairs:
        spec = RingSpec(flavor='plain', n=a + b)
        block = Composition.of(a, b)
        inputs = [
            poly
            for d in range(0, max_degree + 1, 2)
            for _, poly in invariant_basis(spec, block, d, ('diagonal',))
        ]
        records.append(_operator_record(
            f"demazure_shuffle_formula[{a},{b}]",
            ((p, demazure_w0ab(p, a, b).with_coeff("Q"), shuffle_sum_oracle(p, a, b)) for p in inputs),
        ))
        records.append(_operator_record(
            f"demazure_w0ab_symmetric[{a},{b}]",
            ((p, is_invariant(demazure_w0ab(p, a, b), Composition.of(a + b)), True) for p in inputs),
        ))
    return records
