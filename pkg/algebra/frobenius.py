"""
Frobenius Algebras and P_n(F)
Validation of Frobenius tables, the coproduct of the unit, and the tensor rings
k[x_1..x_n] (x) F^(x)n acted on by the affinized symmetric algebra
"""

from fractions import Fraction
from itertools import product
from typing import Any, Optional

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from models.frobenius import FrobeniusAlgebra, FrobeniusCheck, FrobeniusValidation
from models.ring import RingSpec
from runtime.errors import InputError, RingMismatchError

from .poly import Polynomial, monomials_of_degree
from .demazure import demazure


Tensor = dict[tuple[int, ...], Fraction]


def _mul_vectors(F: FrobeniusAlgebra, left: dict[int, Fraction], right: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in left.items():
        for j, b in right.items():
            for k, c in F.product(i, j).items():
                out[k] = out.get(k, Fraction(0)) + a * b * c
    return {k: v for k, v in out.items() if v}


def _sigma_vectors(F: FrobeniusAlgebra, left: dict[int, Fraction], right: dict[int, Fraction]) -> Fraction:
    return sum((a * b * F.sigma(i, j) for i, a in left.items() for j, b in right.items()), Fraction(0))


def _basis(F: FrobeniusAlgebra, i: int) -> dict[int, Fraction]:
    return {i: Fraction(1)}


def validate_frobenius(F: FrobeniusAlgebra) -> FrobeniusValidation:
    """
    Check unit, associativity, commutativity, grading and the pairing on all basis triples

    Args:
        F: table to check

    Returns:
        Validation with one record per identity and the first failure, if any
    """
    d = F.dim
    idx = range(d)
    checks: list[FrobeniusCheck] = []

    def record(name: str, witnesses: list[str]) -> None:
        checks.append(FrobeniusCheck(name=name, passed=not witnesses, witness=witnesses[:3]))

    u = F.unit_index
    record("unit", [
        F.labels[i] for i in idx
        if F.product(u, i) != _basis(F, i) or F.product(i, u) != _basis(F, i)
    ])
    record("associativity", [
        f"({F.labels[i]},{F.labels[j]},{F.labels[k]})"
        for i in idx for j in idx for k in idx
        if _mul_vectors(F, F.product(i, j), _basis(F, k)) != _mul_vectors(F, _basis(F, i), F.product(j, k))
    ])
    record("commutativity", [
        f"({F.labels[i]},{F.labels[j]})" for i in idx for j in idx if F.product(i, j) != F.product(j, i)
    ])
    record("multiplication_graded", [
        f"{F.labels[i]}*{F.labels[j]}->{F.labels[k]}"
        for i in idx for j in idx for k in F.product(i, j)
        if F.degrees[k] != F.degrees[i] + F.degrees[j]
    ])
    record("pairing_symmetric", [
        f"({F.labels[i]},{F.labels[j]})" for i in idx for j in idx if F.sigma(i, j) != F.sigma(j, i)
    ])
    record("pairing_nondegenerate", [] if _pairing_inverse(F) is not None else ["det = 0"])
    record("pairing_invariant", [
        f"({F.labels[i]},{F.labels[j]},{F.labels[k]})"
        for i in idx for j in idx for k in idx
        if _sigma_vectors(F, F.product(i, j), _basis(F, k)) != _sigma_vectors(F, _basis(F, i), F.product(j, k))
    ])
    if F.graded_pairing:
        top = F.top_degree()
        record("pairing_graded", [
            f"({F.labels[i]},{F.labels[j]})"
            for i in idx for j in idx
            if F.sigma(i, j) and F.degrees[i] + F.degrees[j] != top
        ])
    else:
        checks.append(FrobeniusCheck(name="pairing_graded", passed=True, witness=["ungraded pairing by declaration"]))

    failed = next((c.name for c in checks if not c.passed), None)
    return FrobeniusValidation(algebra=F.name, passed=failed is None, checks=checks, first_failure=failed)


def _pairing_inverse(F: FrobeniusAlgebra) -> Optional[list[list[Fraction]]]:
    rows = [[QQ(F.sigma(i, j).numerator, F.sigma(i, j).denominator) for j in range(F.dim)] for i in range(F.dim)]
    try:
        inv = DomainMatrix(rows, (F.dim, F.dim), QQ).inv()
    except DMNonInvertibleMatrixError:
        return None
    return [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in inv.to_list()]


def coproduct_unit(F: FrobeniusAlgebra) -> Tensor:
    """
    Delta(1) = sum_i b_i (x) b_i^* with the sigma-dual basis

    Returns:
        Map (i, k) -> coefficient of b_i (x) b_k

    Raises:
        InputError: singular pairing
    """
    inv = _pairing_inverse(F)
    if inv is None:
        raise InputError(f"pairing of {F.name} is singular")
    return {(i, k): inv[k][i] for i in range(F.dim) for k in range(F.dim) if inv[k][i]}


# ----------------------------------------------------------------------
# P_n(F)


class PnFElement:
    """
    Element of k[x_1..x_n] (x) F^(x)n

    terms maps a per-slot basis index vector to its x-polynomial (a plain ring whose
    variable y_i stands for x_i).
    """

    __slots__ = ('F', 'spec', 'terms')

    def __init__(self, F: FrobeniusAlgebra, spec: RingSpec, terms: Optional[dict[tuple[int, ...], Polynomial]] = None):
        if spec.flavor != 'plain':
            raise RingMismatchError("the x-part of P_n(F) is a plain ring")
        self.F = F
        self.spec = spec
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @property
    def n(self) -> int:
        return self.spec.n

    # construction

    @classmethod
    def zero(cls, F: FrobeniusAlgebra, spec: RingSpec) -> "PnFElement":
        return cls(F, spec)

    @classmethod
    def one(cls, F: FrobeniusAlgebra, spec: RingSpec) -> "PnFElement":
        return cls(F, spec, {(F.unit_index,) * spec.n: Polynomial.one(spec)})

    @classmethod
    def x(cls, F: FrobeniusAlgebra, spec: RingSpec, i: int) -> "PnFElement":
        return cls(F, spec, {(F.unit_index,) * spec.n: Polynomial.gen(spec, 'y', i)})

    @classmethod
    def slot(cls, F: FrobeniusAlgebra, spec: RingSpec, i: int, label: str | int) -> "PnFElement":
        """The basis element `label` of F placed in slot i, unit elsewhere"""
        k = F.index(label) if isinstance(label, str) else label
        key = [F.unit_index] * spec.n
        key[i - 1] = k
        return cls(F, spec, {tuple(key): Polynomial.one(spec)})

    @classmethod
    def monomial(cls, F: FrobeniusAlgebra, spec: RingSpec, xexp: tuple[int, ...], labels: tuple[int, ...]) -> "PnFElement":
        return cls(F, spec, {tuple(labels): Polynomial.from_terms(spec, {tuple(xexp): 1})})

    # arithmetic

    def _check(self, other: "PnFElement") -> None:
        if other.F != self.F or other.spec != self.spec:
            raise RingMismatchError("P_n(F) elements over different data")

    def __add__(self, other: "PnFElement") -> "PnFElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return PnFElement(self.F, self.spec, out)

    def __neg__(self) -> "PnFElement":
        return PnFElement(self.F, self.spec, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "PnFElement") -> "PnFElement":
        return self + (-other)

    def __mul__(self, other: Any) -> "PnFElement":
        if isinstance(other, (int, Fraction)):
            return PnFElement(self.F, self.spec, {k: v * other for k, v in self.terms.items()})
        if isinstance(other, Polynomial):
            return PnFElement(self.F, self.spec, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Polynomial] = {}
        for k1, p1 in self.terms.items():
            for k2, p2 in other.terms.items():
                prod_poly = p1 * p2
                for key, coeff in self._slot_product(k1, k2).items():
                    term = prod_poly * coeff
                    out[key] = out[key] + term if key in out else term
        return PnFElement(self.F, self.spec, out)

    __rmul__ = __mul__

    def _slot_product(self, k1: tuple[int, ...], k2: tuple[int, ...]) -> Tensor:
        factors = [self.F.product(a, b) for a, b in zip(k1, k2)]
        out: Tensor = {}
        for choice in product(*[list(f.items()) for f in factors]):
            key = tuple(k for k, _ in choice)
            coeff = Fraction(1)
            for _, c in choice:
                coeff *= c
            out[key] = out.get(key, Fraction(0)) + coeff
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PnFElement):
            return NotImplemented
        return self.F == other.F and self.spec == other.spec and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    # symmetric group

    def swap(self, r: int) -> "PnFElement":
        """Diagonal s_r: swaps x_r, x_{r+1} and the F-slots r, r+1"""
        out: dict[tuple[int, ...], Polynomial] = {}
        for k, v in self.terms.items():
            key = list(k)
            key[r - 1], key[r] = key[r], key[r - 1]
            out[tuple(key)] = v.swap(r)
        return PnFElement(self.F, self.spec, out)

    def demazure_x(self, r: int) -> "PnFElement":
        """Divided difference in the x-variables only; F-slots untouched"""
        return PnFElement(self.F, self.spec, {k: demazure(v, r, 'y') for k, v in self.terms.items()})

    # grading and coordinates

    def coordinates(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Any]:
        """(x-exponents, slot labels) -> coefficient"""
        out = {}
        for k, v in self.terms.items():
            for monom, c in v.terms():
                out[(monom, k)] = c
        return out

    def to_json(self) -> dict[str, Any]:
        terms = []
        for (monom, key), c in sorted(self.coordinates().items(), key=lambda t: (t[0][1], t[0][0])):
            terms.append({'x': list(monom), 'f': [self.F.labels[k] for k in key], 'coeff': str(c)})
        return {'frobenius': self.F.name, 'n': self.n, 'terms': terms}

    def __repr__(self) -> str:
        return f"PnFElement({self.to_json()['terms']})"


def delta_ij(F: FrobeniusAlgebra, spec: RingSpec, i: int, j: int) -> PnFElement:
    """
    Delta(1) placed into slots i and j, unit elsewhere

    Raises:
        InputError: i == j or out of range
    """
    n = spec.n
    if i == j:
        raise InputError("delta_ij needs two different slots")
    if not (1 <= i <= n and 1 <= j <= n):
        raise InputError(f"slots ({i}, {j}) out of range for n={n}")
    terms: dict[tuple[int, ...], Polynomial] = {}
    for (a, b), coeff in coproduct_unit(F).items():
        key = [F.unit_index] * n
        key[i - 1], key[j - 1] = a, b
        terms[tuple(key)] = Polynomial.one(spec) * coeff
    return PnFElement(F, spec, terms)


def pnf_basis(F: FrobeniusAlgebra, spec: RingSpec, degree: int) -> list[PnFElement]:
    """Monomials x^a (x) b_{k_1} (x) ... (x) b_{k_n} of one degree, canonical order"""
    out = []
    for key in product(range(F.dim), repeat=spec.n):
        fdeg = sum(F.degrees[k] for k in key)
        for monom in monomials_of_degree(spec, degree - fdeg):
            out.append(PnFElement.monomial(F, spec, monom, key))
    return out


def pnf_poincare_coefficients(F: FrobeniusAlgebra, n: int, max_degree: int) -> dict[int, int]:
    """
    Coefficients of n! (P_t(F) / (1 - t^2))^n up to t^max_degree (t counts degree)
    """
    series = {0: 1}
    one_point = {}
    for deg, count in F.poincare().items():
        for shift in range(0, max_degree + 1, 2):
            if deg + shift <= max_degree:
                one_point[deg + shift] = one_point.get(deg + shift, 0) + count
    for _ in range(n):
        grown: dict[int, int] = {}
        for a, ca in series.items():
            for b, cb in one_point.items():
                if a + b <= max_degree:
                    grown[a + b] = grown.get(a + b, 0) + ca * cb
        series = grown
    factorial = 1
    for k in range(2, n + 1):
        factorial *= k
    return {d: factorial * series.get(d, 0) for d in range(0, max_degree + 1, 2)}


def pnf_from_curve(F: FrobeniusAlgebra, p: Polynomial) -> PnFElement:
    """Identify P_n(k[c]/c^2) with the curve flavor: c_i is c in slot i"""
    if F.dim != 2 or F.degrees != (0, 2) or p.spec.flavor != 'curve':
        raise RingMismatchError("curve bridge needs a two-dimensional F with a degree-2 class")
    n = p.n
    spec = RingSpec(flavor='plain', n=n, coeff=p.spec.coeff)
    c_index = 1 - F.unit_index
    terms: dict[tuple[int, ...], dict] = {}
    for monom, coeff in p.terms():
        key = tuple(c_index if monom[n + i] else F.unit_index for i in range(n))
        terms.setdefault(key, {})[monom[:n]] = coeff
    return PnFElement(F, spec, {k: Polynomial.from_terms(spec, v) for k, v in terms.items()})


def pnf_to_curve(element: PnFElement) -> Polynomial:
    F, n = element.F, element.n
    spec = RingSpec(flavor='curve', n=n, coeff=element.spec.coeff)
    c_index = 1 - F.unit_index
    out: dict[tuple[int, ...], Any] = {}
    for key, v in element.terms.items():
        cmask = tuple(1 if k == c_index else 0 for k in key)
        for monom, coeff in v.terms():
            out[monom + cmask] = coeff
    return Polynomial.from_terms(spec, out)
