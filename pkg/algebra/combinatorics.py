"""
Symmetric Group Combinatorics
Permutations, canonical reduced words, block permutations and (double) coset representatives
"""

from itertools import combinations
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from models.ring import Composition
from runtime.errors import InputError


Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(w: Permutation, v: Permutation) -> Permutation:
    """(w v)(i) = w(v(i))"""
    return tuple(w[v[i] - 1] for i in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def length(w: Permutation) -> int:
    """Number of inversions"""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sign(w: Permutation) -> int:
    return -1 if length(w) % 2 else 1


def from_word(n: int, word: Sequence[int]) -> Permutation:
    """s_{k1} s_{k2} ... s_{kr} as a permutation"""
    w = list(range(1, n + 1))
    # right multiplication by s_k swaps positions k, k+1 of the one-line notation
    for k in word:
        if not 1 <= k < n:
            raise InputError(f"s_{k} out of range for n={n}")
        w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def reduced_word(w: Permutation) -> list[int]:
    """
    Lexicographically smallest reduced word of w

    Greedy on left descents: k is a left descent when w^-1(k) > w^-1(k+1).
    """
    word: list[int] = []
    current = list(w)
    n = len(w)
    while True:
        inv = inverse(tuple(current))
        k = next((k for k in range(1, n) if inv[k - 1] > inv[k]), None)
        if k is None:
            return word
        word.append(k)
        # s_k w: swap the values k and k+1
        current = [k + 1 if v == k else k if v == k + 1 else v for v in current]


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(from_word(n, word)) == len(word)


def w0(n: int) -> Permutation:
    """Longest element"""
    return tuple(range(n, 0, -1))


def w0ab(a: int, b: int) -> tuple[Permutation, list[int]]:
    """
    Block swap w(i) = i+b for i <= a, i-a otherwise, with its canonical reduced word

    Returns:
        (permutation, lexicographically smallest reduced word of length a*b)
    """
    if a < 1 or b < 1:
        raise InputError(f"w0ab needs a, b >= 1, got ({a}, {b})")
    w = tuple(i + b if i <= a else i - a for i in range(1, a + b + 1))
    return w, reduced_word(w)


def shift_word(word: Sequence[int], offset: int) -> list[int]:
    return [k + offset for k in word]


def coset_reps(lam: Composition, mu: Composition) -> list[Permutation]:
    """
    Minimal length representatives of S_lambda / S_mu

    Args:
        lam: coarser composition
        mu: refinement of lam

    Returns:
        Permutations increasing on every mu-block, sorted by one-line notation
    """
    if not mu.refines(lam):
        raise InputError(f"{mu} does not refine {lam}")
    n = lam.n
    per_block: list[list[dict[int, int]]] = []
    mu_blocks = mu.blocks()
    cursor = 0
    for block in lam.blocks():
        subs = []
        while cursor < len(mu_blocks) and mu_blocks[cursor][0] <= block[-1]:
            subs.append(mu_blocks[cursor])
            cursor += 1
        per_block.append(_shuffles(list(block), subs))
    reps: list[Permutation] = [identity(n)]
    for choices in per_block:
        grown = []
        for w in reps:
            for assignment in choices:
                new = list(w)
                for pos, val in assignment.items():
                    new[pos - 1] = val
                grown.append(tuple(new))
        reps = grown
    return sorted(reps)


def _shuffles(values: list[int], subs: list[tuple[int, ...]]) -> list[dict[int, int]]:
    """Ways to hand the sorted values out to consecutive position blocks, increasing in each"""
    if not subs:
        return [{}]
    first, rest = subs[0], subs[1:]
    out = []
    for chosen in combinations(values, len(first)):
        remaining = [v for v in values if v not in chosen]
        for tail in _shuffles(remaining, rest):
            assignment = dict(zip(first, chosen))
            assignment.update(tail)
            out.append(assignment)
    return out


class DoubleCoset(BaseModel):
    """
    Minimal double coset representative g of S_mu \\ S_n / S_lambda with its induced data

    matrix[i][j] counts elements of lambda-block j sent into mu-block i.
    block_perm sends the lambda' component (j, i) to the mu' component (i, j).
    """
    model_config = ConfigDict(frozen=True)

    g: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    lam_prime: tuple[int, ...]
    mu_prime: tuple[int, ...]
    block_perm: tuple[int, ...]
    word: tuple[int, ...]


def contingency_matrices(rows: Sequence[int], cols: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Non-negative integer matrices with the given row and column sums"""
    out: list[tuple[tuple[int, ...], ...]] = []

    def fill(i: int, col_left: list[int], acc: list[tuple[int, ...]]) -> None:
        if i == len(rows):
            if not any(col_left):
                out.append(tuple(acc))
            return
        for row in _row_choices(rows[i], col_left):
            fill(i + 1, [c - r for c, r in zip(col_left, row)], acc + [row])

    fill(0, list(cols), [])
    return out


def _row_choices(total: int, caps: list[int]) -> list[tuple[int, ...]]:
    if not caps:
        return [()] if total == 0 else []
    out = []
    for first in range(min(total, caps[0]), -1, -1):
        for tail in _row_choices(total - first, caps[1:]):
            out.append((first,) + tail)
    return out


def double_coset_reps(mu: Composition, lam: Composition) -> list[DoubleCoset]:
    """
    Minimal representatives of S_mu \\ S_n / S_lambda with refinements and block permutation

    Args:
        mu: target composition
        lam: source composition of the same size

    Returns:
        One record per contingency matrix, ordered by length of g then one-line notation
    """
    if mu.n != lam.n:
        raise InputError(f"sizes differ: {mu} vs {lam}")
    out = []
    mu_blocks, lam_blocks = mu.blocks(), lam.blocks()
    for a in contingency_matrices(mu.parts, lam.parts):
        rows, cols = len(mu.parts), len(lam.parts)
        # positions of mu-block i handed to lambda-block j, in order of j
        slots: dict[tuple[int, int], list[int]] = {}
        for i in range(rows):
            cursor = 0
            for j in range(cols):
                slots[(i, j)] = list(mu_blocks[i][cursor:cursor + a[i][j]])
                cursor += a[i][j]
        g = [0] * mu.n
        for j in range(cols):
            cursor = 0
            for i in range(rows):
                for k, pos in enumerate(slots[(i, j)]):
                    g[lam_blocks[j][cursor + k] - 1] = pos
                cursor += a[i][j]
        lam_components = [(j, i) for j in range(cols) for i in range(rows) if a[i][j]]
        mu_components = [(i, j) for i in range(rows) for j in range(cols) if a[i][j]]
        position = {c: k for k, c in enumerate(mu_components)}
        block_perm = tuple(position[(i, j)] + 1 for (j, i) in lam_components)
        out.append(DoubleCoset(
            g=tuple(g),
            matrix=a,
            lam_prime=tuple(a[i][j] for (j, i) in lam_components),
            mu_prime=tuple(a[i][j] for (i, j) in mu_components),
            block_perm=block_perm,
            word=tuple(reduced_word(block_perm)),
        ))
    return sorted(out, key=lambda d: (length(d.g), d.g))
