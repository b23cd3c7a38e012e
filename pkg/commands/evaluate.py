"""
Evaluate Command
Apply one operator word to one polynomial given as JSON
"""

import json
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from algebra.frobenius import PnFElement
from algebra.klr import PolAlphaElement, klr_word_apply
from algebra.poly import Polynomial
from algebra.schur import word_apply
from algebra.thick import thick_word_apply
from algebra.wreath import wreath_word_apply, zigzag_word_apply
from models.frobenius import FrobeniusAlgebra, p1_cohomology, trivial_frobenius
from models.ring import RingSpec
from models.words import KLRGenerator, KLRWord, SchurGenerator, SchurWord, WreathGenerator, WreathWord
from runtime.errors import InputError, RingMismatchError


FROBENIUS_PRESETS = {
    'trivial': trivial_frobenius,
    'p1': p1_cohomology,
    'p1-deformed': lambda: p1_cohomology(deformed=True),
}


# ============================================================================
# Request Models
# ============================================================================

class EvalRequest(BaseModel):
    """
    One evaluation: a word in application order and the polynomial it acts on
    """
    kind: Literal['schur', 'zigzag', 'wreath', 'klr', 'thick']
    word: list[dict[str, Any]] = Field(default_factory=list, description="Generators, first acting first")
    poly: Optional[dict[str, Any]] = Field(None, description="Polynomial JSON")
    source: Optional[list[int]] = Field(None, description="Source slot of an empty schur/thick word")
    colors: Optional[list[int]] = Field(None, description="Colour sequence of a klr input")
    frobenius: Any = Field("p1", description="Preset name or FrobeniusAlgebra JSON for wreath words")
    element: Optional[dict[str, Any]] = Field(None, description="P_n(F) element JSON for wreath words")


def parse_request(payload: str | dict[str, Any]) -> EvalRequest:
    """
    Raises:
        InputError: not JSON, or not an evaluation request
    """
    try:
        data = json.loads(payload) if isinstance(payload, str) else payload
        return EvalRequest.model_validate(data)
    except json.JSONDecodeError as e:
        raise InputError(f"input is not JSON: {e}") from e
    except ValidationError as e:
        raise InputError(f"bad evaluation request: {e.errors()[0]['msg']}") from e


def _models(cls, items: list[dict[str, Any]]) -> list:
    try:
        return [cls.model_validate(item) for item in items]
    except ValidationError as e:
        raise InputError(f"bad {cls.__name__}: {e.errors()[0]['msg']}") from e


def _polynomial(request: EvalRequest) -> Polynomial:
    if request.poly is None:
        raise InputError(f"{request.kind} evaluation needs a 'poly'")
    return Polynomial.from_json(request.poly)


# ============================================================================
# Evaluators
# ============================================================================

def _eval_slotted(request: EvalRequest, thick: bool) -> dict[str, Any]:
    p = _polynomial(request)
    gens = _models(SchurGenerator, request.word)
    source = tuple(gens[0].lam) if gens else tuple(request.source or (1,) * p.n)
    word = SchurWord(n=p.n, source=source, generators=gens)
    if thick:
        if p.spec.flavor != 'quiver':
            raise RingMismatchError("thick words act on the quiver flavor")
        return thick_word_apply(word, p).to_json()
    if p.spec.flavor != 'curve':
        raise RingMismatchError("schur words act on the curve flavor")
    return word_apply(word, p).to_json()


def _eval_zigzag(request: EvalRequest) -> dict[str, Any]:
    p = _polynomial(request)
    if p.spec.flavor != 'curve':
        raise RingMismatchError("zigzag words act on the curve flavor")
    word = WreathWord(n=p.n, generators=_models(WreathGenerator, request.word))
    return zigzag_word_apply(word, p).to_json()


def frobenius_from_request(value: Any) -> FrobeniusAlgebra:
    if isinstance(value, str):
        if value not in FROBENIUS_PRESETS:
            raise InputError(f"unknown Frobenius preset {value!r}; expected one of {', '.join(FROBENIUS_PRESETS)}")
        return FROBENIUS_PRESETS[value]()
    try:
        return FrobeniusAlgebra.model_validate(value)
    except ValidationError as e:
        raise InputError(f"bad Frobenius table: {e.errors()[0]['msg']}") from e


def _pnf_element(F: FrobeniusAlgebra, data: dict[str, Any]) -> PnFElement:
    """{"n": 2, "terms": [{"x": [1, 0], "f": ["c", "1"], "coeff": "1"}]}"""
    try:
        n = int(data['n'])
        spec = RingSpec(flavor='plain', n=n)
        element = PnFElement.zero(F, spec)
        for term in data.get('terms', []):
            labels = tuple(F.labels.index(label) for label in term['f'])
            xexp = tuple(term['x'])
            if len(labels) != n or len(xexp) != n:
                raise InputError(f"term {term} does not have {n} slots")
            element = element + PnFElement.monomial(F, spec, xexp, labels) * Polynomial.constant(spec, term['coeff'])
        return element
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad P_n(F) element: {e}") from e


def _eval_wreath(request: EvalRequest) -> dict[str, Any]:
    F = frobenius_from_request(request.frobenius)
    if request.element is None:
        raise InputError("wreath evaluation needs an 'element'")
    element = _pnf_element(F, request.element)
    word = WreathWord(n=element.n, generators=_models(WreathGenerator, request.word))
    return wreath_word_apply(word, element).to_json()


def _eval_klr(request: EvalRequest) -> dict[str, Any]:
    p = _polynomial(request)
    if request.colors is None:
        raise InputError("klr evaluation needs 'colors'")
    element = PolAlphaElement.single(request.colors, p)
    word = KLRWord(m=p.n, generators=_models(KLRGenerator, request.word))
    return klr_word_apply(word, element).to_json()


def cmd_eval(payload: str | dict[str, Any]) -> dict[str, Any]:
    """
    Evaluate a word on a polynomial

    Args:
        payload: request JSON text or the decoded object

    Returns:
        Canonical JSON of the result

    Raises:
        InputError: malformed request (exit 2)
        RingMismatchError, SlotMismatchError, InvarianceError: operands that do not fit (exit 3)
    """
    request = parse_request(payload)
    if request.kind in ('schur', 'thick'):
        return _eval_slotted(request, thick=request.kind == 'thick')
    if request.kind == 'zigzag':
        return _eval_zigzag(request)
    if request.kind == 'wreath':
        return _eval_wreath(request)
    return _eval_klr(request)
