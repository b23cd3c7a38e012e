"""
Affinized Symmetric Algebra
tau_i = s_i - Delta_{i,i+1} d^X_i on P_n(F), the zigzag specialization on the curve ring,
word evaluation, relation identities and graded-dimension rank checks
"""

from itertools import permutations
from typing import Callable, Sequence

from models.frobenius import FrobeniusAlgebra
from models.report import CheckRecord, CheckStatus
from models.ring import Composition, RingSpec
from models.words import WreathWord
from runtime.errors import InputError, RingMismatchError
from runtime.observability import get_observability

from .combinatorics import reduced_word
from .demazure import delta_demazure
from .frobenius import PnFElement, delta_ij, pnf_basis, pnf_from_curve, pnf_poincare_coefficients
from .linalg import sparse_rank
from .poly import Polynomial, monomials_of_degree
from .schur import crossing_apply


Operator = Callable[[PnFElement], PnFElement]


def plain_spec(n: int, coeff: str = "Z") -> RingSpec:
    return RingSpec(flavor='plain', n=n, coeff=coeff)


def tau_apply(element: PnFElement, i: int) -> PnFElement:
    """s_i with the F-slots swapped, minus Delta_{i,i+1} times the x-only divided difference"""
    if not 1 <= i < element.n:
        raise InputError(f"tau_{i} out of range for n={element.n}")
    return element.swap(i) - delta_ij(element.F, element.spec, i, i + 1) * element.demazure_x(i)


def tau_curve(p: Polynomial, i: int) -> Polynomial:
    """
    Zigzag tau_i on the curve ring

    (c_i + c_{i+1}) annihilates c_i - c_{i+1}, so the x-only and diagonal divided
    differences agree after multiplying by Delta.
    """
    if p.spec.flavor != 'curve':
        raise RingMismatchError("zigzag operators act on the curve flavor")
    return p.swap(i) - delta_demazure(p, i)


def wreath_word_apply(word: WreathWord, element: PnFElement) -> PnFElement:
    """Apply x_i, slot elements of F and tau_i in application order"""
    if word.n != element.n:
        raise RingMismatchError(f"word on n={word.n} applied to P_{element.n}(F)")
    F, spec = element.F, element.spec
    for gen in word.generators:
        if gen.index > word.n or (gen.kind == 'tau' and gen.index >= word.n):
            raise InputError(f"{gen.kind}{gen.index} out of range for n={word.n}")
        if gen.kind == 'x':
            element = PnFElement.x(F, spec, gen.index) * element
        elif gen.kind == 'f':
            if gen.label not in F.labels:
                raise InputError(f"{gen.label!r} is not a basis label of {F.name}")
            element = PnFElement.slot(F, spec, gen.index, gen.label) * element
        else:
            element = tau_apply(element, gen.index)
    return element


def zigzag_word_apply(word: WreathWord, p: Polynomial) -> Polynomial:
    """The same words on the curve ring; f-generators take the labels '1' and 'c'"""
    if word.n != p.n:
        raise RingMismatchError(f"word on n={word.n} applied to {p.n} variables")
    for gen in word.generators:
        if gen.index > word.n or (gen.kind == 'tau' and gen.index >= word.n):
            raise InputError(f"{gen.kind}{gen.index} out of range for n={word.n}")
        if gen.kind == 'x':
            p = Polynomial.gen(p.spec, 'x', gen.index) * p
        elif gen.kind == 'f':
            if gen.label == 'c':
                p = Polynomial.gen(p.spec, 'c', gen.index) * p
            elif gen.label != '1':
                raise InputError(f"zigzag slot labels are '1' and 'c', got {gen.label!r}")
        else:
            p = tau_curve(p, gen.index)
    return p


# ----------------------------------------------------------------------
# relation identities


def _compare(
    check_id: str,
    lhs: Operator,
    rhs: Operator,
    inputs: Sequence[PnFElement],
) -> CheckRecord:
    for element in inputs:
        a, b = lhs(element), rhs(element)
        if a != b:
            return CheckRecord(
                id=check_id,
                status=CheckStatus.FAIL,
                detail="operators differ",
                witness={'input': element.to_json(), 'lhs': a.to_json(), 'rhs': b.to_json()},
            )
    return CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': len(inputs)})


def pnf_inputs(F: FrobeniusAlgebra, n: int, max_degree: int, coeff: str = "Z") -> list[PnFElement]:
    spec = plain_spec(n, coeff)
    out = []
    for d in range(0, max_degree + 1, 2):
        out.extend(pnf_basis(F, spec, d))
    return out


def wreath_relation_checks(F: FrobeniusAlgebra, n: int, max_degree: int) -> list[CheckRecord]:
    """
    Every defining relation as an operator identity on all basis elements of degree <= max_degree

    Operators compose right to left: (a b)(p) = a(b(p)).
    """
    spec = plain_spec(n)
    inputs = pnf_inputs(F, n, max_degree)
    records: list[CheckRecord] = []

    def tau(i: int) -> Operator:
        return lambda e: tau_apply(e, i)

    def x(j: int) -> Operator:
        return lambda e: PnFElement.x(F, spec, j) * e

    def compose(*ops: Operator) -> Operator:
        def run(e: PnFElement) -> PnFElement:
            for op in reversed(ops):
                e = op(e)
            return e
        return run

    for i in range(1, n):
        records.append(_compare(f"tau_square[{i}]", compose(tau(i), tau(i)), lambda e: e, inputs))
        delta = delta_ij(F, spec, i, i + 1)
        for j in range(1, n + 1):
            image = i + 1 if j == i else i if j == i + 1 else j
            shift = 1 if j == i else -1 if j == i + 1 else 0

            def rhs(e: PnFElement, i=i, image=image, shift=shift, delta=delta) -> PnFElement:
                out = x(image)(tau(i)(e))
                return out - delta * e * shift if shift else out

            records.append(_compare(f"tau_x[{i},{j}]", compose(tau(i), x(j)), rhs, inputs))
        for k in range(1, n + 1):
            target = i + 1 if k == i else i if k == i + 1 else k
            for label in F.labels:
                f = PnFElement.slot(F, spec, k, label)
                sf = PnFElement.slot(F, spec, target, label)
                records.append(_compare(
                    f"tau_f[{i},{k},{label}]",
                    lambda e, i=i, f=f: tau_apply(f * e, i),
                    lambda e, i=i, sf=sf: sf * tau_apply(e, i),
                    inputs,
                ))
        for j in range(i + 2, n):
            records.append(_compare(f"tau_far[{i},{j}]", compose(tau(i), tau(j)), compose(tau(j), tau(i)), inputs))
    for i in range(1, n - 1):
        records.append(_compare(
            f"tau_braid[{i}]",
            compose(tau(i), tau(i + 1), tau(i)),
            compose(tau(i + 1), tau(i), tau(i + 1)),
            inputs,
        ))
    return records


def zigzag_relation_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """Zigzag relations on the curve ring, including tau_k^2 = 1 and the braid relation"""
    spec = RingSpec(flavor='curve', n=n)
    inputs = [Polynomial.from_terms(spec, {m: 1}) for d in range(0, max_degree + 1, 2)
              for m in monomials_of_degree(spec, d)]
    records = []

    def check(check_id: str, lhs: Callable, rhs: Callable) -> None:
        for p in inputs:
            a, b = lhs(p), rhs(p)
            if a != b:
                records.append(CheckRecord(
                    id=check_id, status=CheckStatus.FAIL, detail="operators differ",
                    witness={'input': p.to_json(), 'lhs': a.to_json(), 'rhs': b.to_json()},
                ))
                return
        records.append(CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': len(inputs)}))

    for k in range(1, n):
        check(f"zigzag_square[{k}]", lambda p, k=k: tau_curve(tau_curve(p, k), k), lambda p: p)
        delta = Polynomial.gen(spec, 'c', k) + Polynomial.gen(spec, 'c', k + 1)
        xk, xk1 = Polynomial.gen(spec, 'x', k), Polynomial.gen(spec, 'x', k + 1)
        check(f"zigzag_x[{k}]", lambda p, k=k, xk=xk: tau_curve(xk * p, k),
              lambda p, k=k, xk1=xk1, delta=delta: xk1 * tau_curve(p, k) - delta * p)
        ck, ck1 = Polynomial.gen(spec, 'c', k), Polynomial.gen(spec, 'c', k + 1)
        check(f"zigzag_c[{k}]", lambda p, k=k, ck=ck: tau_curve(ck * p, k),
              lambda p, k=k, ck1=ck1: ck1 * tau_curve(p, k))
    for k in range(1, n - 1):
        check(f"zigzag_braid[{k}]",
              lambda p, k=k: tau_curve(tau_curve(tau_curve(p, k), k + 1), k),
              lambda p, k=k: tau_curve(tau_curve(tau_curve(p, k + 1), k), k + 1))
    return records


def crossing_identity_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """tau_i = R(s_i) - 1 on the thin slot of the curve ring"""
    spec = RingSpec(flavor='curve', n=n)
    thin = Composition(parts=(1,) * n)
    inputs = [Polynomial.from_terms(spec, {m: 1}) for d in range(0, max_degree + 1, 2)
              for m in monomials_of_degree(spec, d)]
    records = []
    for i in range(1, n):
        record = CheckRecord(id=f"tau_is_crossing_minus_one[{i}]", status=CheckStatus.PASS,
                             data={'inputs': len(inputs)})
        for p in inputs:
            lhs = tau_curve(p, i)
            rhs = crossing_apply(p, thin, thin, i) - p
            if lhs != rhs:
                record = CheckRecord(
                    id=record.id, status=CheckStatus.FAIL, detail="operators differ",
                    witness={'input': p.to_json(), 'tau': lhs.to_json(), 'crossing_minus_one': rhs.to_json()},
                )
                break
        records.append(record)
    return records


# ----------------------------------------------------------------------
# graded dimension


def wreath_basis_word(F: FrobeniusAlgebra, n: int, w: tuple[int, ...], xexp: tuple[int, ...],
                      labels: tuple[int, ...]) -> Operator:
    """tau_w x^a f: multiply by f and x^a, then apply tau_w (rightmost letter first)"""
    spec = plain_spec(n)
    factor = PnFElement.monomial(F, spec, xexp, labels)
    word = reduced_word(w)

    def run(e: PnFElement) -> PnFElement:
        e = factor * e
        for k in reversed(word):
            e = tau_apply(e, k)
        return e
    return run


def wreath_basis(F: FrobeniusAlgebra, n: int, degree: int) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """(w, x-exponents, slot labels) of the basis words of one degree"""
    spec = plain_spec(n)
    out = []
    for w in sorted(permutations(range(1, n + 1))):
        for element in pnf_basis(F, spec, degree):
            (labels, poly), = element.terms.items()
            (xexp, _), = poly.terms()
            out.append((tuple(w), xexp, labels))
    return out


def wreath_graded_dimension(F: FrobeniusAlgebra, n: int, degree: int, cap: int) -> tuple[int, int, int]:
    """
    Rank over Q of the basis words of one degree on an adaptive window

    Returns:
        (rank, word count, final window)
    """
    words = wreath_basis(F, n, degree)
    ops = [wreath_basis_word(F, n, *w) for w in words]
    window = 0
    while True:
        inputs = pnf_inputs(F, n, window)
        rows = []
        for op in ops:
            row = {}
            for k, e in enumerate(inputs):
                for key, c in op(e).coordinates().items():
                    row[(k, key)] = c
            rows.append(row)
        r = sparse_rank(rows, "Q")
        if r == len(ops) or window + 2 > cap:
            return r, len(ops), window
        get_observability().log_window_enlarged("wreath", window, window + 2)
        window += 2


def expected_wreath_dimensions(F: FrobeniusAlgebra, n: int, max_degree: int) -> dict[int, int]:
    """Coefficients of n! (P_t(F) / (1 - t^2))^n in even degrees"""
    return pnf_poincare_coefficients(F, n, max_degree)


def tau_agrees_with_zigzag(F: FrobeniusAlgebra, p: Polynomial, i: int) -> bool:
    """tau_i on P_n(k[c]/c^2) matches the zigzag operator under the curve identification"""
    return tau_apply(pnf_from_curve(F, p), i) == pnf_from_curve(F, tau_curve(p, i))
