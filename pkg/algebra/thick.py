"""
Thick Calculus
Thick splits, merges and crossings between cuspidal divided sequences, compiled into thin
KLR words and evaluated through the coloured polynomial representation
"""

import logging
from typing import Any, Iterable, Optional, Sequence

from models.report import CheckRecord, CheckStatus
from models.ring import Composition, compositions
from models.words import CompiledThick, DividedSequence, KLRGenerator, KLRWord, SchurGenerator, SchurWord
from runtime.errors import ExactnessError, InputError, InvarianceError, SlotMismatchError

from .combinatorics import shift_word, w0ab
from .klr import (
    Colors,
    PolAlphaElement,
    divided_idempotent_word,
    from_quiver,
    klr_word_apply,
    noncuspidal,
    to_quiver,
)
from .poly import Polynomial, is_invariant
from .phi import quiver_merge, quiver_slot_basis
from .schur import merged, split_at


logger = logging.getLogger("torskur.algebra")


def _sandwich(seq: DividedSequence, m: int) -> list[KLRGenerator]:
    """Idempotent of the thin sequence followed by the divided idempotent of every block"""
    gens = [KLRGenerator(kind='idem', colors=seq.expand())]
    offset = 0
    for _, size in seq.parts:
        gens.extend(divided_idempotent_word(size, offset, m).generators)
        offset += size
    return gens


def _psi(k: int) -> KLRGenerator:
    return KLRGenerator(kind='psi', index=k)


def _block_offset(lam: Sequence[int], pos: int) -> int:
    """Strand offset of the pos-th block pair 0^(l) 1^(l)"""
    return 2 * sum(lam[:pos - 1])


def compile_merge(lam: Sequence[int], pos: int) -> CompiledThick:
    """
    (a, b) -> (a+b) at block pair pos

    The second block's zero strands cross the first block's one strands, each crossing
    contributing (v_i - u_j)^2; then psi_{w0,a,b} on the zero strands and on the one strands.
    """
    lam = tuple(lam)
    if not 1 <= pos < len(lam):
        raise InputError(f"no blocks {pos}, {pos + 1} in {lam}")
    a, b = lam[pos - 1], lam[pos]
    m = 2 * sum(lam)
    o = _block_offset(lam, pos)
    source = DividedSequence.cuspidal(lam)
    target_lam = merged(Composition(parts=lam), pos).parts
    target = DividedSequence.cuspidal(target_lam)
    gens = _sandwich(source, m)
    for t in range(1, b + 1):
        for r in range(o + 2 * a + t - 1, o + a + t - 1, -1):
            gens.append(_psi(r))
    _, word = w0ab(a, b)
    for k in reversed(shift_word(word, o)):
        gens.append(_psi(k))
    for k in reversed(shift_word(word, o + a + b)):
        gens.append(_psi(k))
    gens.extend(_sandwich(target, m))
    logger.debug(f"Compiled merge {lam} at {pos} into {len(gens)} KLR generators")
    return CompiledThick(
        generator=SchurGenerator(kind='merge', lam=lam, pos=pos),
        source=source, target=target, word=KLRWord(m=m, generators=gens),
    )


def compile_split(lam: Sequence[int], pos: int, size: int) -> CompiledThick:
    """
    (a+b) -> (a, b) at block pair pos, a = size

    The last b zero strands cross the first a one strands to the right; these crossings
    carry no factor, so the action is the inclusion of invariants.
    """
    lam = tuple(lam)
    target_lam = split_at(Composition(parts=lam), pos, size).parts
    a, b = size, lam[pos - 1] - size
    m = 2 * sum(lam)
    o = _block_offset(lam, pos)
    source = DividedSequence.cuspidal(lam)
    target = DividedSequence.cuspidal(target_lam)
    gens = _sandwich(source, m)
    for t in range(b, 0, -1):
        start = o + a + t
        for r in range(start, start + a):
            gens.append(_psi(r))
    gens.extend(_sandwich(target, m))
    return CompiledThick(
        generator=SchurGenerator(kind='split', lam=lam, pos=pos, size=size),
        source=source, target=target, word=KLRWord(m=m, generators=gens),
    )


def compile_crossing(lam: Sequence[int], pos: int) -> CompiledThick:
    """Merge of blocks pos, pos+1 followed by the split into the swapped sizes"""
    lam = tuple(lam)
    merge = compile_merge(lam, pos)
    split = compile_split(merged(Composition(parts=lam), pos).parts, pos, lam[pos])
    return CompiledThick(
        generator=SchurGenerator(kind='cross', lam=lam, pos=pos),
        source=merge.source, target=split.target,
        word=merge.word.then(split.word),
    )


def thick_generator(kind: str, lam: Sequence[int], pos: int, size: int = 1) -> CompiledThick:
    """Compile a thick split, merge or crossing to its thin word"""
    if kind == 'merge':
        return compile_merge(lam, pos)
    if kind == 'split':
        return compile_split(lam, pos, size)
    if kind == 'cross':
        return compile_crossing(lam, pos)
    raise InputError(f"unknown thick generator {kind!r}")


# ----------------------------------------------------------------------
# evaluation


def divided_invariant(p: Polynomial, seq: DividedSequence) -> bool:
    """Symmetric in the strands of every block"""
    return is_invariant(p, Composition(parts=seq.block_sizes()))


def divided_apply(
    word: KLRWord,
    source: DividedSequence,
    target: DividedSequence,
    p: Polynomial,
    trace: Optional[list[Colors]] = None,
) -> Polynomial:
    """
    Thin word between divided slots

    Raises:
        InvarianceError: p not symmetric on the source blocks
        ExactnessError: output not symmetric on the target blocks
    """
    if p.n != word.m:
        raise SlotMismatchError(f"{p.n} strands for a word on {word.m}")
    if not divided_invariant(p, source):
        raise InvarianceError(f"{p} is not symmetric on the blocks of {source.block_sizes()}")
    image = klr_word_apply(word, PolAlphaElement.single(source.expand(), p), trace)
    stray = [c for c in image.components if c != target.expand()]
    if stray:
        raise ExactnessError(f"thin word leaves components {stray} outside the target sequence")
    out = image.component(target.expand())
    if not divided_invariant(out, target):
        raise ExactnessError(f"output {out} is not symmetric on the blocks of {target.block_sizes()}")
    return out


def thick_apply(compiled: CompiledThick, q: Polynomial, trace: Optional[list[Colors]] = None) -> Polynomial:
    """Act on an element of Poll_n through the u/v view of the cuspidal sequences"""
    plain = from_quiver(q, compiled.source.expand())
    out = divided_apply(compiled.word, compiled.source, compiled.target, plain, trace)
    return to_quiver(out, compiled.target.expand())


def thick_word_apply(word: SchurWord, q: Polynomial, trace: Optional[list[Colors]] = None) -> Polynomial:
    """
    A word of thick generators and Poll_n decorations, first generator first
    """
    current = word.source
    for gen in word.generators:
        if gen.lam != current:
            raise SlotMismatchError(f"generator {gen.kind} expects slot {gen.lam}, running slot is {current}")
        if gen.kind == 'poly':
            decoration = gen.poly if isinstance(gen.poly, Polynomial) else Polynomial.from_json(gen.poly, q.spec)
            if not is_invariant(decoration, Composition(parts=current), ('first', 'second')):
                raise InvarianceError(f"decoration {decoration} is not (S_{current})^2-invariant")
            q = q * decoration
        else:
            q = thick_apply(thick_generator(gen.kind, gen.lam, gen.pos, gen.size), q, trace)
        current = gen.target()
    return q


def noncuspidal_sequences(trace: Sequence[Colors]) -> list[Colors]:
    return sorted({c for c in trace if noncuspidal(c)})


# ----------------------------------------------------------------------
# checks


def _record(check_id: str, pairs: Iterable[tuple[Any, Polynomial, Polynomial]]) -> CheckRecord:
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


def _slot_inputs(lam: Composition, max_degree: int) -> list[Polynomial]:
    return [q for d in range(0, max_degree + 1, 2) for q in quiver_slot_basis(lam, d)]


def thick_formula_checks(max_block: int, max_degree: int) -> list[CheckRecord]:
    """
    Compiled merges against d^u d^v(P prod (v_i - u_j)^2), compiled splits against inclusion,
    for two blocks with a + b <= max_block

    The closed formula is usually quoted for the split (a+b) -> (a, b). It only type-checks
    as a map from (a, b)-invariants to (a+b)-invariants, so it is tested on the merge, and
    the split is the inclusion; intertwining_checks confirms the pairing against the
    curve merge and split.
    """
    records = []
    for total in range(2, max_block + 1):
        for a in range(1, total):
            lam = Composition.of(a, total - a)
            merge = thick_generator('merge', lam.parts, 1)
            records.append(_record(f"thick_merge_formula[{lam}]", (
                (q, thick_apply(merge, q), quiver_merge(q, lam, 1)) for q in _slot_inputs(lam, max_degree)
            )))
            split = thick_generator('split', (total,), 1, a)
            records.append(_record(f"thick_split_inclusion[{lam}]", (
                (q, thick_apply(split, q), q) for q in _slot_inputs(Composition.of(total), max_degree)
            )))
    return records


def thick_associativity_checks(n: int, max_degree: int) -> list[CheckRecord]:
    """Both orders of merging (or splitting) three adjacent blocks agree"""
    records = []
    for lam in compositions(n):
        for pos in range(1, len(lam.parts) - 1):
            a, b = lam.parts[pos - 1:pos + 1]
            left_first = [('merge', lam.parts, pos), ('merge', merged(lam, pos).parts, pos)]
            right_first = [('merge', lam.parts, pos + 1), ('merge', merged(lam, pos + 1).parts, pos)]
            records.append(_record(f"thick_merge_associative[{lam},pos={pos}]", (
                (q, _chain(left_first, q), _chain(right_first, q)) for q in _slot_inputs(lam, max_degree)
            )))
            whole = merged(merged(lam, pos), pos)
            split_left = [('split', whole.parts, pos, a + b), ('split', split_at(whole, pos, a + b).parts, pos, a)]
            split_right = [('split', whole.parts, pos, a), ('split', split_at(whole, pos, a).parts, pos + 1, b)]
            records.append(_record(f"thick_split_associative[{whole}->{lam}]", (
                (q, _chain(split_left, q), _chain(split_right, q)) for q in _slot_inputs(whole, max_degree)
            )))
    return records


def _chain(steps: Sequence[tuple], q: Polynomial) -> Polynomial:
    for kind, lam, pos, *size in steps:
        q = thick_apply(thick_generator(kind, lam, pos, *size), q)
    return q


def thick_checks(n: int, max_degree: int) -> list[CheckRecord]:
    return thick_formula_checks(min(n, 3), max_degree) + thick_associativity_checks(min(n, 3), max_degree)
