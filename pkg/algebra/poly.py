"""
Polynomial Rings
Exact polynomials of the curve, quiver and plain flavors over Z, Q or F_p
"""

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Literal, Optional, Sequence

from sympy.polys.domains import ZZ, QQ, GF
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing, PolyElement

from models.ring import Composition, RingSpec
from runtime.errors import ExactnessError, InputError, RingMismatchError


Monomial = tuple[int, ...]
Mode = Literal['diagonal', 'first', 'second']
Permutation = tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(spec: RingSpec) -> PolyRing:
    """sympy ring for a spec; generators are family-major (x1..xn, c1..cn)"""
    names = [f"{fam}{i}" for fam in spec.families for i in range(1, spec.n + 1)]
    return PolyRing(names, coeff_domain(spec.coeff), grlex)


@lru_cache(maxsize=None)
def coeff_domain(coeff: str):
    if coeff == "Z":
        return ZZ
    if coeff == "Q":
        return QQ
    return GF(int(coeff[3:]), symmetric=False)


def to_scalar(value: Any, coeff: str):
    """Convert int, Fraction or a decimal/"a/b" string into the coefficient domain"""
    if isinstance(value, str):
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad coefficient {value!r}") from e
    value = Fraction(value)
    dom = coeff_domain(coeff)
    if coeff == "Z":
        if value.denominator != 1:
            raise RingMismatchError(f"coefficient {value} is not an integer")
        return dom(value.numerator)
    if coeff == "Q":
        return dom(value.numerator, value.denominator)
    p = int(coeff[3:])
    if value.denominator % p == 0:
        raise RingMismatchError(f"coefficient {value} has a denominator divisible by {p}")
    return dom(value.numerator * pow(value.denominator, -1, p) % p)


def from_scalar(c: Any, coeff: str) -> int | Fraction:
    """Domain element back to a Python int (Z, F_p residue) or Fraction (Q)"""
    if coeff == "Z":
        return int(c)
    if coeff == "Q":
        return Fraction(int(c.numerator), int(c.denominator))
    dom = coeff_domain(coeff)
    return int(dom.to_int(c)) % int(coeff[3:])


def scalar_str(value: int | Fraction) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _grlex_key(monom: Monomial) -> tuple:
    return (sum(monom), monom)


class Polynomial:
    """
    Element of P_n (curve), Poll_n (quiver) or Pol_n (plain)

    Curve elements never store a monomial with c_i^2; every product is truncated.
    Each variable has degree 2, so `degree` is twice the total exponent.
    """

    __slots__ = ('spec', 'element')

    def __init__(self, spec: RingSpec, element: PolyElement):
        self.spec = spec
        self.element = element

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def zero(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, poly_ring(spec).zero)

    @classmethod
    def one(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, poly_ring(spec).one)

    @classmethod
    def constant(cls, spec: RingSpec, value: Any) -> "Polynomial":
        return cls(spec, poly_ring(spec).ground_new(to_scalar(value, spec.coeff)))

    @classmethod
    def gen(cls, spec: RingSpec, family: str, i: int) -> "Polynomial":
        """The variable family_i, 1-based"""
        if family not in spec.families:
            raise RingMismatchError(f"family {family!r} not in {spec.flavor} ring")
        if not 1 <= i <= spec.n:
            raise InputError(f"variable {family}{i} out of range for n={spec.n}")
        k = spec.families.index(family) * spec.n + (i - 1)
        return cls(spec, poly_ring(spec).gens[k])

    @classmethod
    def from_terms(cls, spec: RingSpec, terms: dict[Monomial, Any]) -> "Polynomial":
        ring = poly_ring(spec)
        el = ring.zero
        for monom, value in terms.items():
            if len(monom) != ring.ngens:
                raise InputError(f"monomial {monom} has wrong length for {spec}")
            c = to_scalar(value, spec.coeff)
            if c:
                el[tuple(monom)] = el.get(tuple(monom), ring.domain.zero) + c
                if not el[tuple(monom)]:
                    del el[tuple(monom)]
        return cls(spec, _truncate(spec, el))

    @classmethod
    def _wrap(cls, spec: RingSpec, element: PolyElement) -> "Polynomial":
        return cls(spec, _truncate(spec, element))

    # ------------------------------------------------------------------
    # inspection

    @property
    def n(self) -> int:
        return self.spec.n

    def is_zero(self) -> bool:
        return not self.element

    def __bool__(self) -> bool:
        return bool(self.element)

    def terms(self) -> list[tuple[Monomial, int | Fraction]]:
        """(monomial, coefficient) pairs in canonical graded-lex order, largest first"""
        items = sorted(self.element.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        return [(m, from_scalar(c, self.spec.coeff)) for m, c in items]

    def coefficient(self, monom: Monomial) -> int | Fraction:
        c = self.element.get(tuple(monom))
        return from_scalar(c, self.spec.coeff) if c is not None else 0

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    @property
    def degree(self) -> int:
        """Graded degree of the top component; -1 for zero"""
        return max((2 * sum(m) for m in self.element), default=-1)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise RingMismatchError(f"ring mismatch: {self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.spec, other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.spec, self.element + other.element)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.spec, self.element - other.element)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.spec, -self.element)

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.spec, self.element.mul_ground(to_scalar(other, self.spec.coeff)))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.spec, self.element * other.element)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InputError("negative powers are not polynomials")
        out = Polynomial.one(self.spec)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.spec, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and self.element == other.element

    def __hash__(self) -> int:
        return hash((self.spec, tuple(sorted(self.element.items()))))

    def exquo_linear(self, i: int, j: int) -> "Polynomial":
        """
        Exact quotient by (g_i - g_j) for 0-based generator indices

        Raises:
            ExactnessError: the division leaves a remainder
        """
        ring = poly_ring(self.spec)
        try:
            q = self.element.exquo(ring.gens[i] - ring.gens[j])
        except ExactQuotientFailed as e:
            raise ExactnessError(
                f"{ring.symbols[i]} - {ring.symbols[j]} does not divide {self.element}"
            ) from e
        return Polynomial(self.spec, q)

    # ------------------------------------------------------------------
    # group actions and ring maps

    def act(self, w: Permutation, mode: Mode = 'diagonal') -> "Polynomial":
        """w . x_i = x_{w(i)} on the families selected by mode"""
        return act_permutation(self, w, mode)

    def swap(self, r: int, mode: Mode = 'diagonal') -> "Polynomial":
        """The simple reflection s_r"""
        return self.act(transposition(self.spec.n, r), mode)

    def substitute(self, target: RingSpec, images: Sequence["Polynomial"]) -> "Polynomial":
        """
        Ring homomorphism sending the k-th generator to images[k]

        Args:
            target: ring of the images
            images: one image per generator, family-major

        Returns:
            Image of self in the target ring
        """
        ring = poly_ring(self.spec)
        if len(images) != ring.ngens:
            raise InputError(f"expected {ring.ngens} images, got {len(images)}")
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(k: int, e: int) -> Polynomial:
            if (k, e) not in powers:
                powers[(k, e)] = images[k] ** e
            return powers[(k, e)]

        result = Polynomial.zero(target)
        for monom, c in self.element.items():
            term = Polynomial.constant(target, from_scalar(c, self.spec.coeff))
            for k, e in enumerate(monom):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def embed(self, target: RingSpec, offset: int = 0) -> "Polynomial":
        """Same flavor, more variables: family_i goes to family_{i+offset}"""
        if target.flavor != self.spec.flavor or target.coeff != self.spec.coeff:
            raise RingMismatchError(f"cannot embed {self.spec} into {target}")
        if offset < 0 or offset + self.n > target.n:
            raise InputError(f"offset {offset} does not fit {self.n} variables into {target.n}")
        ring = poly_ring(target)
        out = {}
        nf = len(self.spec.families)
        for monom, c in self.element.items():
            new = [0] * (nf * target.n)
            for f in range(nf):
                for i in range(self.n):
                    new[f * target.n + offset + i] = monom[f * self.n + i]
            out[tuple(new)] = c
        return Polynomial(target, ring.from_dict(out))

    def with_coeff(self, coeff: str) -> "Polynomial":
        """Reduce Z data mod p, or extend Z to Q"""
        target = self.spec.with_coeff(coeff)
        return Polynomial.from_terms(target, dict(self.terms()))

    # ------------------------------------------------------------------
    # serialization

    def to_json(self) -> dict[str, Any]:
        """Canonical JSON with terms in graded-lex order"""
        terms = []
        n = self.n
        for monom, c in self.terms():
            entry: dict[str, Any] = {}
            for f, fam in enumerate(self.spec.families):
                entry[fam] = list(monom[f * n:(f + 1) * n])
            entry['coeff'] = scalar_str(c)
            terms.append(entry)
        return {'ring': self.spec.model_dump(), 'terms': terms}

    @classmethod
    def from_json(cls, data: dict[str, Any], spec: Optional[RingSpec] = None) -> "Polynomial":
        try:
            spec = spec or RingSpec(**data['ring'])
            raw_terms = data.get('terms', [])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed polynomial JSON: {e}") from e
        out: dict[Monomial, Any] = {}
        for entry in raw_terms:
            monom: list[int] = []
            for fam in spec.families:
                exps = entry.get(fam, [0] * spec.n)
                if len(exps) != spec.n or any((not isinstance(e, int)) or e < 0 for e in exps):
                    raise InputError(f"bad exponents for {fam}: {exps}")
                if spec.flavor == 'curve' and fam == 'c' and any(e > 1 for e in exps):
                    raise InputError("c exponents must be 0 or 1")
                monom.extend(exps)
            if 'coeff' not in entry:
                raise InputError("term without coeff")
            key = tuple(monom)
            out[key] = Fraction(out.get(key, 0)) + Fraction(str(entry['coeff']))
        return cls.from_terms(spec, out)

    def __str__(self) -> str:
        if not self.element:
            return "0"
        return str(self.element.as_expr()) if self.spec.coeff == "Q" else str(self.element)

    def __repr__(self) -> str:
        return f"Polynomial({self}, {self.spec.flavor}, n={self.n}, {self.spec.coeff})"


def _truncate(spec: RingSpec, element: PolyElement) -> PolyElement:
    """Drop monomials with c_i^2 in the curve flavor"""
    if spec.flavor != 'curve' or not element:
        return element
    n = spec.n
    if all(max(m[n:], default=0) < 2 for m in element):
        return element
    ring = poly_ring(spec)
    return ring.from_dict({m: c for m, c in element.items() if max(m[n:], default=0) < 2})


# ----------------------------------------------------------------------
# permutations acting on exponent vectors


def transposition(n: int, r: int) -> Permutation:
    """s_r in one-line notation"""
    if not 1 <= r < n:
        raise InputError(f"s_{r} out of range for n={n}")
    w = list(range(1, n + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def _mode_families(spec: RingSpec, mode: Mode) -> tuple[int, ...]:
    nf = len(spec.families)
    if mode == 'diagonal':
        return tuple(range(nf))
    if nf < 2:
        raise RingMismatchError(f"mode {mode!r} needs two variable families, {spec.flavor} has one")
    return (0,) if mode == 'first' else (1,)


def permute_monomial(monom: Monomial, w: Permutation, n: int, families: Iterable[int]) -> Monomial:
    out = list(monom)
    for f in families:
        base = f * n
        for i in range(n):
            out[base + w[i] - 1] = monom[base + i]
    return tuple(out)


def act_permutation(p: Polynomial, w: Permutation, mode: Mode = 'diagonal') -> Polynomial:
    """
    Ring automorphism w . x_i = x_{w(i)}

    Args:
        p: polynomial
        w: permutation of 1..n in one-line notation
        mode: 'diagonal' moves every family, 'first'/'second' only one of two

    Returns:
        The permuted polynomial
    """
    n = p.n
    if sorted(w) != list(range(1, n + 1)):
        raise InputError(f"{w} is not a permutation of 1..{n}")
    fams = _mode_families(p.spec, mode)
    ring = poly_ring(p.spec)
    return Polynomial(p.spec, ring.from_dict({permute_monomial(m, w, n, fams): c for m, c in p.element.items()}))


# ----------------------------------------------------------------------
# invariants


def _block_swaps(lam: Composition) -> list[int]:
    """Simple reflections s_r generating S_lambda"""
    swaps = []
    for block in lam.blocks():
        swaps.extend(block[:-1])
    return swaps


def is_invariant(p: Polynomial, lam: Composition, modes: Sequence[Mode] = ('diagonal',)) -> bool:
    """Invariance under S_lambda acting in each of the given modes"""
    for mode in modes:
        for r in _block_swaps(lam):
            if p.swap(r, mode) != p:
                return False
    return True


def quiver_modes(spec: RingSpec) -> tuple[Mode, ...]:
    """(S_lambda)^2 for the quiver flavor, diagonal S_lambda otherwise"""
    return ('first', 'second') if spec.flavor == 'quiver' else ('diagonal',)


def orbit(monom: Monomial, spec: RingSpec, lam: Composition, modes: Sequence[Mode]) -> list[Monomial]:
    """S_lambda-orbit of a monomial, sorted"""
    n = spec.n
    gens = [(transposition(n, r), _mode_families(spec, mode)) for mode in modes for r in _block_swaps(lam)]
    seen = {monom}
    queue = deque([monom])
    while queue:
        m = queue.popleft()
        for w, fams in gens:
            image = permute_monomial(m, w, n, fams)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=_grlex_key, reverse=True)


def orbit_representative(monom: Monomial, spec: RingSpec, lam: Composition, modes: Sequence[Mode]) -> Monomial:
    """Largest orbit element in graded-lex order"""
    return orbit(monom, spec, lam, modes)[0]


@lru_cache(maxsize=None)
def monomials_of_degree(spec: RingSpec, degree: int) -> tuple[Monomial, ...]:
    """Every monomial of graded degree `degree`, largest first"""
    if degree < 0 or degree % 2:
        return ()
    total = degree // 2
    nv = spec.nvars
    caps = [1 if spec.flavor == 'curve' and k >= spec.n else total for k in range(nv)]
    out: list[Monomial] = []

    def grow(prefix: list[int], left: int) -> None:
        k = len(prefix)
        if k == nv:
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(min(left, caps[k]), -1, -1):
            prefix.append(e)
            grow(prefix, left - e)
            prefix.pop()

    grow([], total)
    return tuple(sorted(out, key=_grlex_key, reverse=True))


@lru_cache(maxsize=None)
def _orbit_reps(spec: RingSpec, lam: Composition, modes: tuple[Mode, ...], degree: int) -> tuple[Monomial, ...]:
    reps = {orbit_representative(m, spec, lam, modes) for m in monomials_of_degree(spec, degree)}
    return tuple(sorted(reps, key=_grlex_key, reverse=True))


def invariant_basis(
    spec: RingSpec,
    lam: Composition,
    degree: int,
    modes: Optional[Sequence[Mode]] = None,
) -> list[tuple[Monomial, Polynomial]]:
    """
    Orbit-sum Z-basis of the S_lambda-invariants in one degree

    Returns:
        (representative monomial, orbit sum) pairs in canonical order
    """
    modes = tuple(modes or quiver_modes(spec))
    out = []
    for rep in _orbit_reps(spec, lam, modes, degree):
        out.append((rep, Polynomial.from_terms(spec, {m: 1 for m in orbit(rep, spec, lam, modes)})))
    return out


def invariant_coordinates(
    p: Polynomial,
    lam: Composition,
    modes: Optional[Sequence[Mode]] = None,
) -> dict[Monomial, int | Fraction]:
    """
    Coordinates of an invariant polynomial in the orbit-sum basis

    The coordinate of an orbit is the coefficient of its representative.
    """
    modes = tuple(modes or quiver_modes(p.spec))
    coords = {}
    for monom, c in p.terms():
        if orbit_representative(monom, p.spec, lam, modes) == monom:
            coords[monom] = c
    return coords


# ----------------------------------------------------------------------
# symmetric functions


def elementary_symmetric(spec: RingSpec, k: int, family: str, nvars: Optional[int] = None) -> Polynomial:
    """
    sigma_k in family_1..family_nvars

    Raises:
        InputError: k outside 0..nvars
    """
    nvars = spec.n if nvars is None else nvars
    if not 0 <= k <= nvars:
        raise InputError(f"sigma_{k} needs 0 <= k <= {nvars}")
    gens = [Polynomial.gen(spec, family, i) for i in range(1, nvars + 1)]
    out = Polynomial.zero(spec)
    for subset in combinations(gens, k):
        term = Polynomial.one(spec)
        for g in subset:
            term = term * g
        out = out + term
    return out


def monomial_symmetric(spec: RingSpec, exponents: Sequence[int], family: str, nvars: Optional[int] = None) -> Polynomial:
    """Orbit sum of family^exponents over S_nvars (each distinct monomial once)"""
    nvars = spec.n if nvars is None else nvars
    if len(exponents) != nvars:
        raise InputError(f"need {nvars} exponents, got {len(exponents)}")
    fam = spec.families.index(family)
    seen = set()
    for perm in _distinct_permutations(tuple(sorted(exponents, reverse=True))):
        monom = [0] * spec.nvars
        for i, e in enumerate(perm):
            monom[fam * spec.n + i] = e
        seen.add(tuple(monom))
    return Polynomial.from_terms(spec, {m: 1 for m in seen})


def _distinct_permutations(values: tuple[int, ...]) -> list[tuple[int, ...]]:
    if not values:
        return [()]
    out = []
    for v in sorted(set(values), reverse=True):
        rest = list(values)
        rest.remove(v)
        out.extend((v,) + tail for tail in _distinct_permutations(tuple(rest)))
    return out


def partitions_of(total: int, parts: int) -> list[tuple[int, ...]]:
    """Non-increasing tuples of `parts` non-negative integers summing to total"""
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], left: int, cap: int) -> None:
        if len(prefix) == parts:
            if left == 0:
                out.append(prefix)
            return
        for e in range(min(left, cap), -1, -1):
            grow(prefix + (e,), left - e, e)

    grow((), total, total)
    return out


def monomial_label(spec: RingSpec, monom: Monomial) -> str:
    """Readable monomial such as x1^2*c2, or 1"""
    pieces = []
    for f, fam in enumerate(spec.families):
        for i in range(spec.n):
            e = monom[f * spec.n + i]
            if e == 1:
                pieces.append(f"{fam}{i + 1}")
            elif e > 1:
                pieces.append(f"{fam}{i + 1}^{e}")
    return "*".join(pieces) or "1"
