"""
Kunneth-Chern Classes
Chern classes of the universal torsion sheaf split along H*(P^1) = Z[p]/(p^2)
"""

from typing import Iterator

from runtime.errors import InputError

from .poly import Polynomial
from .schur import curve_spec


# A class in P_n[p]/(p^2) is stored as its two Kunneth components (a_0, a_1): a_0 + a_1 p
Pair = tuple[Polynomial, Polynomial]


def _pair_mul(a: Pair, b: Pair) -> Pair:
    return a[0] * b[0], a[0] * b[1] + a[1] * b[0]


def _pair_add(a: Pair, b: Pair) -> Pair:
    return a[0] + b[0], a[1] + b[1]


def one_point_series(n: int, j: int, length: int, coeff: str = "Z") -> list[Pair]:
    """
    Total Chern class of the j-th point, components c_0 .. c_{length-1}

    c_0 = 1, c_1 = c + p and for i >= 2
    c_i = c (-x)^{i-1} + ((-x)^{i-1} + 2(i-1) c (-x)^{i-2}) p
    """
    spec = curve_spec(n, coeff)
    x, c = Polynomial.gen(spec, 'x', j), Polynomial.gen(spec, 'c', j)
    one, zero = Polynomial.one(spec), Polynomial.zero(spec)
    series: list[Pair] = [(one, zero), (c, one)]
    for i in range(2, length):
        series.append((c * (-x) ** (i - 1), (-x) ** (i - 1) + c * (-x) ** (i - 2) * (2 * (i - 1))))
    return series[:length]


def _series_mul(a: list[Pair], b: list[Pair]) -> list[Pair]:
    spec = a[0][0].spec
    zero = (Polynomial.zero(spec), Polynomial.zero(spec))
    out = [zero] * len(a)
    for i, ai in enumerate(a):
        for k, bk in enumerate(b[:len(a) - i]):
            out[i + k] = _pair_add(out[i + k], _pair_mul(ai, bk))
    return out


def kunneth_chern(n: int, max_degree: int, coeff: str = "Z") -> dict[tuple[int, int], Polynomial]:
    """
    c_{i,j} of the product of the n one-point series

    c_{i,0} has degree 2i and c_{i,1} degree 2i - 2; every class of degree <= max_degree
    is returned, including the constants c_{0,0} = 1 and c_{1,1} = n.

    Raises:
        InputError: n < 1 or a negative degree bound
    """
    if n < 1 or max_degree < 0:
        raise InputError(f"Chern classes need n >= 1 and max_degree >= 0, got {n}, {max_degree}")
    length = max_degree // 2 + 2
    total = one_point_series(n, 1, length, coeff)
    for j in range(2, n + 1):
        total = _series_mul(total, one_point_series(n, j, length, coeff))
    out: dict[tuple[int, int], Polynomial] = {}
    for i, (a0, a1) in enumerate(total):
        if 2 * i <= max_degree:
            out[(i, 0)] = a0
        if i >= 1 and 2 * i - 2 <= max_degree:
            out[(i, 1)] = a1
    return out


def chern_degree(key: tuple[int, int]) -> int:
    i, j = key
    return 2 * i - 2 * j


def tautological_generators(n: int, max_degree: int, coeff: str = "Z") -> dict[tuple[int, int], Polynomial]:
    """Kunneth-Chern classes of positive degree"""
    return {k: v for k, v in kunneth_chern(n, max_degree, coeff).items() if chern_degree(k) > 0}


def chern_monomials(keys: list[tuple[int, int]], degree: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Multisets of generator keys (in the given order) whose degrees sum to degree"""
    if degree == 0:
        yield ()
        return
    for k, key in enumerate(keys):
        d = chern_degree(key)
        if d <= degree:
            for rest in chern_monomials(keys[k:], degree - d):
                yield (key,) + rest


def chern_label(key: tuple[int, int]) -> str:
    return f"c_{key[0]},{key[1]}"
