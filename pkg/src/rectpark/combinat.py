"""Integer partitions, compositions, and symmetric group characters.

Partitions and compositions are plain tuples of positive integers: weakly
decreasing for partitions, arbitrary order for compositions. The empty tuple
is the unique partition (and composition) of 0. All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a partition tuple (weakly decreasing, parts >= 1)."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def check_composition(parts: Iterable[int]) -> Composition:
    """Validate and return a composition tuple (parts >= 1, any order)."""
    c = tuple(int(x) for x in parts)
    if any(x < 1 for x in c):
        raise ValueError(f"composition parts must be positive: {c}")
    return c


def sort_to_partition(parts: Iterable[int]) -> Partition:
    """Sort parts into the partition with the same multiset of parts."""
    return tuple(sorted((int(x) for x in parts), reverse=True))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def multiplicities(p: Iterable[int]) -> dict[int, int]:
    """Map part size i to the number of parts of that size."""
    d: dict[int, int] = {}
    for x in p:
        d[x] = d.get(x, 0) + 1
    return d


def multiplicity_partition(p: Partition) -> Partition:
    """The partition of len(p) listing multiplicities of the distinct parts."""
    return sort_to_partition(multiplicities(p).values())


def z_of(p: Partition) -> int:
    """Centralizer order of a permutation of cycle type p: prod i^d_i * d_i!."""
    return prod(i**d * factorial(d) for i, d in multiplicities(p).items())


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / prod(parts!); the parts must sum to n."""
    c = tuple(parts)
    if sum(c) != n:
        raise ValueError(f"multinomial parts {c} do not sum to {n}")
    out = factorial(n)
    for x in c:
        out //= factorial(x)
    return out


def falling_factorial(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1), with the empty product equal to 1."""
    return prod(x - t for t in range(k))


def partitions_of(n: int, length: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order.

    With ``length`` given, only partitions with exactly that many parts
    (same relative order).
    """
    if n < 0:
        return
    if length is None:
        yield from _partitions(n, n)
    else:
        yield from _partitions_len(n, n, length)


def _partitions(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first, *rest)


def _partitions_len(n: int, maxpart: int, length: int) -> Iterator[Partition]:
    if length == 0:
        if n == 0:
            yield ()
        return
    if n < length:
        return
    lo = -(-n // length)  # smallest admissible first part
    for first in range(min(n - length + 1, maxpart), lo - 1, -1):
        for rest in _partitions_len(n - first, first, length - 1):
            yield (first, *rest)


def compositions_of(n: int, length: int | None = None) -> Iterator[Composition]:
    """All compositions of n, in lexicographic order; optionally fixed length."""
    if n < 0:
        return
    if n == 0:
        if length in (None, 0):
            yield ()
        return
    if length == 0:
        return
    for first in range(1, n + 1):
        rest_length = None if length is None else length - 1
        for rest in compositions_of(n - first, rest_length):
            yield (first, *rest)


@cache
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric group character value chi^lam at cycle type mu.

    Computed by the Murnaghan-Nakayama border-strip recursion on the beta
    numbers of lam; memoized on (lam, mu). Concurrent use is safe in the
    usual CPython sense (a cache miss may be computed more than once).
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"character requires |lam| == |mu|, got {lam} and {mu}")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        newbeta = sorted((c if x == b else x for x in beta), reverse=True)
        newlam = tuple(x - ell + 1 + i for i, x in enumerate(newbeta))
        newlam = tuple(x for x in newlam if x > 0)
        total += (-1) ** height * character(newlam, rest)
    return total


def schur_principal_eval(lam: Partition, m: int) -> Fraction:
    """Value of the Schur function indexed by lam at m variables equal to 1.

    Hook content formula: product over cells (i, j), 1-based (row, column),
    of (m + j - i) / hook(i, j). Vanishes when lam has more than m rows.
    """
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            num *= m + j - i
            den *= (row - j) + (conj[j - 1] - i) + 1
    return Fraction(num, den)
