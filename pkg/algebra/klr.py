"""
Kronecker KLR Algebra
The faithful representation on coloured polynomial spaces: idempotents, dots, crossings,
word evaluation with traversal recording, divided idempotents and the u/v view
"""

from itertools import permutations
from typing import Any, Iterable, Optional, Sequence

from models.report import CheckRecord, CheckStatus
from models.ring import RingSpec
from models.words import DimVector, KLRGenerator, KLRWord
from runtime.errors import InputError, RingMismatchError, SlotMismatchError
from runtime.observability import get_observability

from .combinatorics import length, reduced_word, shift_word, w0
from .demazure import demazure, demazure_word
from .linalg import sparse_rank
from .poly import Polynomial, monomials_of_degree


Colors = tuple[int, ...]

# arrow multiplicities: psi on 1_{..1,0..} multiplies by (y_r - y_{r+1})^2
ARROWS: dict[tuple[int, int], int] = {(1, 0): 2, (0, 1): 0}


def plain_spec(m: int, coeff: str = "Z") -> RingSpec:
    return RingSpec(flavor='plain', n=m, coeff=coeff)


def color_sequences(alpha: DimVector) -> list[Colors]:
    """All sequences with n0 zeros and n1 ones, lexicographic"""
    return sorted(set(permutations([0] * alpha.n0 + [1] * alpha.n1)))


def noncuspidal(colors: Sequence[int]) -> bool:
    """Some prefix has strictly more ones than zeros"""
    balance = 0
    for c in colors:
        balance += 1 if c == 1 else -1
        if balance > 0:
            return True
    return False


class PolAlphaElement:
    """
    Finitely supported map colour sequence -> polynomial in y_1..y_m
    """

    __slots__ = ('spec', 'components')

    def __init__(self, spec: RingSpec, components: Optional[dict[Colors, Polynomial]] = None):
        if spec.flavor != 'plain':
            raise RingMismatchError("coloured polynomials live in the plain flavor")
        self.spec = spec
        self.components = {tuple(k): v for k, v in (components or {}).items() if not v.is_zero()}

    @classmethod
    def single(cls, colors: Sequence[int], p: Polynomial) -> "PolAlphaElement":
        if len(colors) != p.n:
            raise SlotMismatchError(f"{len(colors)} colours for {p.n} strands")
        return cls(p.spec, {tuple(colors): p})

    @property
    def m(self) -> int:
        return self.spec.n

    def component(self, colors: Sequence[int]) -> Polynomial:
        return self.components.get(tuple(colors), Polynomial.zero(self.spec))

    def __add__(self, other: "PolAlphaElement") -> "PolAlphaElement":
        out = dict(self.components)
        for k, v in other.components.items():
            out[k] = out[k] + v if k in out else v
        return PolAlphaElement(self.spec, out)

    def __neg__(self) -> "PolAlphaElement":
        return PolAlphaElement(self.spec, {k: -v for k, v in self.components.items()})

    def __sub__(self, other: "PolAlphaElement") -> "PolAlphaElement":
        return self + (-other)

    def scale(self, p: Polynomial) -> "PolAlphaElement":
        return PolAlphaElement(self.spec, {k: v * p for k, v in self.components.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolAlphaElement):
            return NotImplemented
        return self.spec == other.spec and self.components == other.components

    def is_zero(self) -> bool:
        return not self.components

    def coordinates(self) -> dict[tuple[Colors, tuple[int, ...]], Any]:
        return {(k, m): c for k, v in self.components.items() for m, c in v.terms()}

    def to_json(self) -> dict[str, Any]:
        return {
            'm': self.m,
            'components': [
                {'colors': list(k), 'poly': v.to_json()}
                for k, v in sorted(self.components.items())
            ],
        }

    def __repr__(self) -> str:
        return f"PolAlphaElement({ {k: str(v) for k, v in sorted(self.components.items())} })"


# ----------------------------------------------------------------------
# generators


def idem_apply(element: PolAlphaElement, colors: Sequence[int]) -> PolAlphaElement:
    return PolAlphaElement(element.spec, {tuple(colors): element.component(colors)})


def dot_apply(element: PolAlphaElement, r: int) -> PolAlphaElement:
    return element.scale(Polynomial.gen(element.spec, 'y', r))


def crossing_factor(spec: RingSpec, left: int, right: int, r: int) -> Polynomial:
    y = Polynomial.gen(spec, 'y', r) - Polynomial.gen(spec, 'y', r + 1)
    return y ** ARROWS[(left, right)]


def psi_apply(element: PolAlphaElement, r: int) -> PolAlphaElement:
    """
    Same colours: -d_r. Different colours: (y_r - y_{r+1})^h s_r(f) moved to the swapped sequence
    """
    if not 1 <= r < element.m:
        raise InputError(f"psi_{r} out of range for m={element.m}")
    out: dict[Colors, Polynomial] = {}
    for colors, f in element.components.items():
        left, right = colors[r - 1], colors[r]
        if left == right:
            image, target = -demazure(f, r, 'y'), colors
        else:
            target = colors[:r - 1] + (right, left) + colors[r + 1:]
            image = crossing_factor(element.spec, left, right, r) * f.swap(r)
        out[target] = out[target] + image if target in out else image
    return PolAlphaElement(element.spec, out)


def generator_apply(gen: KLRGenerator, element: PolAlphaElement) -> PolAlphaElement:
    if gen.kind == 'idem':
        if gen.colors is None or len(gen.colors) != element.m:
            raise SlotMismatchError("idempotent needs one colour per strand")
        return idem_apply(element, gen.colors)
    if not 1 <= gen.index <= element.m:
        raise InputError(f"{gen.kind}{gen.index} out of range for m={element.m}")
    if gen.kind == 'dot':
        return dot_apply(element, gen.index)
    return psi_apply(element, gen.index)


def klr_word_apply(word: KLRWord, element: PolAlphaElement, trace: Optional[list[Colors]] = None) -> PolAlphaElement:
    """
    Apply a word in application order; trace collects every colour sequence met
    """
    if word.m != element.m:
        raise SlotMismatchError(f"word on {word.m} strands applied to {element.m}")
    if trace is not None:
        trace.extend(sorted(element.components))
    for gen in word.generators:
        element = generator_apply(gen, element)
        if trace is not None:
            trace.extend(c for c in sorted(element.components) if c not in trace)
    return element


def psi_word_apply(element: PolAlphaElement, word: Sequence[int]) -> PolAlphaElement:
    """psi_{k1} ... psi_{kr}: the rightmost crossing acts first"""
    for k in reversed(list(word)):
        element = psi_apply(element, k)
    return element


# ----------------------------------------------------------------------
# divided idempotents


def y_zero(spec: RingSpec, size: int, offset: int = 0) -> Polynomial:
    """y_{offset+size}^{size-1} ... y_{offset+2}"""
    out = Polynomial.one(spec)
    for k in range(2, size + 1):
        out = out * Polynomial.gen(spec, 'y', offset + k) ** (k - 1)
    return out


def divided_idempotent_apply(p: Polynomial, size: Optional[int] = None, offset: int = 0) -> Polynomial:
    """
    psi_{w0} y_0 on one same-colour block: (-1)^l(w0) d_{w0}(y_0 P)

    Projects onto polynomials symmetric in the block and fixes them.
    """
    if p.spec.flavor != 'plain':
        raise RingMismatchError("divided idempotents act on the plain flavor")
    size = p.n - offset if size is None else size
    if size <= 1:
        return p
    word = shift_word(reduced_word(w0(size)), offset)
    out = demazure_word(y_zero(p.spec, size, offset) * p, word, 'y')
    return -out if length(w0(size)) % 2 else out


def divided_idempotent_word(size: int, offset: int, m: int) -> KLRWord:
    """Thin word of the divided idempotent of one block: dots first, then psi_{w0}"""
    gens = []
    for k in range(2, size + 1):
        gens.extend([KLRGenerator(kind='dot', index=offset + k)] * (k - 1))
    for k in reversed(shift_word(reduced_word(w0(size)), offset)):
        gens.append(KLRGenerator(kind='psi', index=k))
    return KLRWord(m=m, generators=gens)


# ----------------------------------------------------------------------
# u/v view


def uv_positions(colors: Sequence[int]) -> tuple[list[int], list[int]]:
    """1-based strand positions of the k-th zero (u_k) and the k-th one (v_k)"""
    zeros = [r for r, c in enumerate(colors, start=1) if c == 0]
    ones = [r for r, c in enumerate(colors, start=1) if c == 1]
    return zeros, ones


def to_quiver(p: Polynomial, colors: Sequence[int]) -> Polynomial:
    """Read a plain polynomial on a balanced colour sequence as an element of Poll_n"""
    zeros, ones = uv_positions(colors)
    if len(zeros) != len(ones) or len(colors) != p.n:
        raise SlotMismatchError(f"colour sequence {tuple(colors)} is not balanced for {p.n} strands")
    target = RingSpec(flavor='quiver', n=len(zeros), coeff=p.spec.coeff)
    images: list[Polynomial] = [Polynomial.zero(target)] * p.n
    for k, r in enumerate(zeros, start=1):
        images[r - 1] = Polynomial.gen(target, 'u', k)
    for k, r in enumerate(ones, start=1):
        images[r - 1] = Polynomial.gen(target, 'v', k)
    return p.substitute(target, images)


def from_quiver(q: Polynomial, colors: Sequence[int]) -> Polynomial:
    zeros, ones = uv_positions(colors)
    if q.spec.flavor != 'quiver' or len(zeros) != q.n or len(ones) != q.n:
        raise SlotMismatchError(f"colour sequence {tuple(colors)} does not match Poll_{q.n}")
    target = plain_spec(len(colors), q.spec.coeff)
    images = [Polynomial.gen(target, 'y', r) for r in zeros] + [Polynomial.gen(target, 'y', r) for r in ones]
    return q.substitute(target, images)


# ----------------------------------------------------------------------
# relation identities


def _inputs(alpha: DimVector, max_degree: int) -> list[PolAlphaElement]:
    spec = plain_spec(alpha.m)
    out = []
    for colors in color_sequences(alpha):
        for d in range(0, max_degree + 1, 2):
            for monom in monomials_of_degree(spec, d):
                out.append(PolAlphaElement(spec, {colors: Polynomial.from_terms(spec, {monom: 1})}))
    return out


def _record(check_id: str, pairs: Iterable[tuple[PolAlphaElement, PolAlphaElement, PolAlphaElement]]) -> CheckRecord:
    count = 0
    for element, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            return CheckRecord(
                id=check_id, status=CheckStatus.FAIL, detail="operators differ",
                witness={'input': element.to_json(), 'lhs': lhs.to_json(), 'rhs': rhs.to_json()},
            )
    return CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': count})


def klr_relation_checks(alpha: DimVector, max_degree: int) -> list[CheckRecord]:
    """
    The five relation families as operator identities on every colour component

    Compositions are written as operators: (a b)(f) = a(b(f)).
    """
    m = alpha.m
    spec = plain_spec(m)
    inputs = _inputs(alpha, max_degree)
    records: list[CheckRecord] = []

    def y(r: int) -> Polynomial:
        return Polynomial.gen(spec, 'y', r)

    def psi(e: PolAlphaElement, *word: int) -> PolAlphaElement:
        return psi_word_apply(e, word)

    def same(e: PolAlphaElement, r: int) -> bool:
        (colors,) = e.components
        return colors[r - 1] == colors[r]

    for r in range(1, m):
        # dot slides
        records.append(_record(f"klr1_dot_slide_left[{r}]", (
            (e, psi(e, r).scale(y(r)), psi(e.scale(y(r + 1)), r) - (e if same(e, r) else PolAlphaElement(spec)))
            for e in inputs
        )))
        records.append(_record(f"klr1_dot_slide_right[{r}]", (
            (e, psi(e.scale(y(r)), r), psi(e, r).scale(y(r + 1)) - (e if same(e, r) else PolAlphaElement(spec)))
            for e in inputs
        )))
        for k in range(1, m + 1):
            if k not in (r, r + 1):
                records.append(_record(f"klr2_far_dot[{r},{k}]", (
                    (e, psi(e.scale(y(k)), r), psi(e, r).scale(y(k))) for e in inputs
                )))
        # quadratic
        records.append(_record(f"klr3_quadratic[{r}]", (
            (e, psi(e, r, r), PolAlphaElement(spec) if same(e, r) else e.scale((y(r) - y(r + 1)) ** 2))
            for e in inputs
        )))
        for t in range(r + 2, m):
            records.append(_record(f"klr4_far_psi[{r},{t}]", (
                (e, psi(e, r, t), psi(e, t, r)) for e in inputs
            )))
    for r in range(1, m - 1):
        def cubic_rhs(e: PolAlphaElement, r: int = r) -> PolAlphaElement:
            (colors,) = e.components
            out = psi(e, r + 1, r, r + 1)
            if colors[r - 1] == colors[r + 1] != colors[r]:
                out = out - e.scale(y(r) - 2 * y(r + 1) + y(r + 2))
            return out

        records.append(_record(f"klr5_braid[{r}]", (
            (e, psi(e, r, r + 1, r), cubic_rhs(e)) for e in inputs
        )))
    return records


def divided_relation_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """
    Idempotency and projector property of the divided idempotent, and
    psi_r Q = -d_r(Q) on a same-colour block
    """
    spec = plain_spec(n)
    inputs = [Polynomial.from_terms(spec, {m: 1}) for d in range(0, max_degree + 1, 2)
              for m in monomials_of_degree(spec, d)]
    records = []
    witness = next((p for p in inputs
                    if divided_idempotent_apply(divided_idempotent_apply(p)) != divided_idempotent_apply(p)), None)
    records.append(_plain_record("divided_idempotent_idempotent", witness, len(inputs)))
    swaps = list(range(1, n))
    witness = next((p for p in inputs
                    if any(divided_idempotent_apply(p).swap(r) != divided_idempotent_apply(p) for r in swaps)), None)
    records.append(_plain_record("divided_image_symmetric", witness, len(inputs)))
    symmetric = [p for p in _symmetrized(inputs)]
    witness = next((p for p in symmetric if divided_idempotent_apply(p) != p), None)
    records.append(_plain_record("divided_fixes_invariants", witness, len(symmetric)))
    colors = (0,) * n
    for r in swaps:
        witness = next((p for p in inputs
                        if psi_apply(PolAlphaElement.single(colors, p), r).component(colors) != -demazure(p, r)), None)
        records.append(_plain_record(f"psi_is_minus_demazure[{r}]", witness, len(inputs)))
    return records


def _symmetrized(inputs: Sequence[Polynomial]) -> list[Polynomial]:
    out = []
    seen = set()
    for p in inputs:
        n = p.n
        total = Polynomial.zero(p.spec)
        for w in set(permutations(range(1, n + 1))):
            total = total + p.act(tuple(w))
        key = tuple(total.terms())
        if key not in seen:
            seen.add(key)
            out.append(total)
    return out


def _plain_record(check_id: str, witness: Optional[Polynomial], count: int) -> CheckRecord:
    if witness is None:
        return CheckRecord(id=check_id, status=CheckStatus.PASS, data={'inputs': count})
    return CheckRecord(id=check_id, status=CheckStatus.FAIL, detail="identity fails", witness=witness.to_json())


# ----------------------------------------------------------------------
# thin basis


def thin_basis(alpha: DimVector, source: Colors, degree: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(w, dot exponents) for y^a psi_w 1_i of one degree, every target sequence included"""
    spec = plain_spec(alpha.m)
    out = []
    for w in sorted(permutations(range(1, alpha.m + 1))):
        word = reduced_word(tuple(w))
        shift = _psi_degree(source, word)
        for monom in monomials_of_degree(spec, degree - shift):
            out.append((tuple(w), monom))
    return out


def _psi_degree(colors: Colors, word: Sequence[int]) -> int:
    """Degree of psi_w 1_i: -2 per same-colour crossing, +2 per crossing of different colours"""
    current = list(colors)
    total = 0
    for k in reversed(list(word)):
        left, right = current[k - 1], current[k]
        total += -2 if left == right else 2
        current[k - 1], current[k] = right, left
    return total


def thin_basis_rank(alpha: DimVector, source: Colors, degree: int, cap: int) -> tuple[int, int, int]:
    """
    Rank over Q of the operators y^a psi_w 1_source of one degree on an adaptive window

    Returns:
        (rank, count, window)
    """
    spec = plain_spec(alpha.m)
    basis = thin_basis(alpha, source, degree)
    window = 0
    while True:
        inputs = [Polynomial.from_terms(spec, {mono: 1}) for d in range(0, window + 1, 2)
                  for mono in monomials_of_degree(spec, d)]
        rows = []
        for w, monom in basis:
            word = reduced_word(w)
            dots = Polynomial.from_terms(spec, {monom: 1})
            row = {}
            for k, p in enumerate(inputs):
                image = psi_word_apply(PolAlphaElement.single(source, p), word).scale(dots)
                for key, c in image.coordinates().items():
                    row[(k, key)] = c
            rows.append(row)
        r = sparse_rank(rows, "Q")
        if r == len(basis) or window + 2 > cap:
            return r, len(basis), window
        get_observability().log_window_enlarged("klr", window, window + 2)
        window += 2
