"""Parking functions on rectangular Dyck paths, and brute force Frobenius oracles.

An (m, n)-parking function is a word b_1 ... b_n of nonnegative integers whose
decreasing sort is an (m, n)-Dyck path sequence. The words of a fixed shape
form one orbit of the place-permutation action of the symmetric group, so the
orbit Frobenius characteristic is the h basis element indexed by the riser
partition of the shape. Everything here is enumeration driven: these are the
oracles against which the closed formulas are tested.
"""

from __future__ import annotations

from typing import Iterator

from .combinat import multinomial, sort_to_partition
from .paths import DyckPath, enumerate_dyck, slope_params, staircase
from .symfunc import BiSymFunc, SymFunc

PathFilter = str | tuple[int, ...]


def normalize_filter(m: int, n: int, pathfilter: PathFilter) -> PathFilter:
    """Validate a path filter: "all", "primitive", or a composition of gcd(m, n)."""
    if pathfilter in ("all", "primitive"):
        return pathfilter
    d, _, _ = slope_params(m, n)
    gamma = tuple(int(x) for x in pathfilter)
    if not gamma or any(c < 1 for c in gamma) or sum(gamma) != d:
        raise ValueError(
            f"returns filter {gamma} is not a composition of d = {d}"
        )
    return gamma


def shapes(m: int, n: int, pathfilter: PathFilter = "all") -> Iterator[DyckPath]:
    """Dyck paths passing the filter, in sequence-lexicographic order."""
    pathfilter = normalize_filter(m, n, pathfilter)
    for path in enumerate_dyck(m, n):
        if pathfilter == "all":
            yield path
        elif pathfilter == "primitive":
            if path.is_primitive():
                yield path
        elif path.returns_composition() == pathfilter:
            yield path


def is_parking(word, m: int, n: int) -> bool:
    """Does the decreasing sort of the word lie under the (m, n) staircase?"""
    w = tuple(int(x) for x in word)
    if len(w) != n:
        raise ValueError(f"word {w} must have length n = {n}")
    if any(x < 0 for x in w):
        return False
    srt = sorted(w, reverse=True)
    return all(x <= bound for x, bound in zip(srt, staircase(m, n)))


class ParkingFunction:
    """A parking word together with its rectangle."""

    __slots__ = ("m", "n", "word")

    def __init__(self, m: int, n: int, word):
        word = tuple(int(x) for x in word)
        if not is_parking(word, m, n):
            raise ValueError(f"{word} is not an ({m}, {n})-parking function")
        self.m = m
        self.n = n
        self.word = word

    def __eq__(self, other):
        if not isinstance(other, ParkingFunction):
            return NotImplemented
        return (self.m, self.n, self.word) == (other.m, other.n, other.word)

    def __hash__(self):
        return hash((self.m, self.n, self.word))

    def __repr__(self):
        return f"ParkingFunction({self.m}, {self.n}, {self.word})"

    def shape(self) -> DyckPath:
        return DyckPath(self.m, self.n, sorted(self.word, reverse=True))

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "word": list(self.word)}


def _multiset_permutations(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of a multiset, in ascending lexicographic order."""
    distinct = sorted(set(values))
    counts = {v: values.count(v) for v in distinct}
    total = len(values)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == total:
            yield tuple(out)
            return
        for v in distinct:
            if counts[v]:
                counts[v] -= 1
                out.append(v)
                yield from rec()
                out.pop()
                counts[v] += 1

    yield from rec()


def parking_words_for_shape(path: DyckPath) -> Iterator[tuple[int, ...]]:
    """All distinct rearrangements of the shape's sequence, lexicographically."""
    yield from _multiset_permutations(path.seq)


def enumerate_parking_for_shape(path: DyckPath) -> Iterator[ParkingFunction]:
    for word in parking_words_for_shape(path):
        yield ParkingFunction(path.m, path.n, word)


def enumerate_parking(
    m: int, n: int, pathfilter: PathFilter = "all"
) -> list[ParkingFunction]:
    """All (m, n)-parking functions with qualifying shape, in word-lex order.

    The full list is materialized so it can be sorted globally.
    """
    words = []
    for path in shapes(m, n, pathfilter):
        words.extend(parking_words_for_shape(path))
    words.sort()
    return [ParkingFunction(m, n, w) for w in words]


def count_parking(m: int, n: int, pathfilter: PathFilter = "all") -> int:
    """Number of qualifying parking functions via the multinomial formula."""
    return sum(
        multinomial(n, path.riser_composition()) for path in shapes(m, n, pathfilter)
    )


def count_parking_brute(m: int, n: int, pathfilter: PathFilter = "all") -> int:
    """Number of qualifying parking functions by generating every word."""
    return sum(
        sum(1 for _ in parking_words_for_shape(path))
        for path in shapes(m, n, pathfilter)
    )


def brute_frobenius(m: int, n: int, pathfilter: PathFilter = "all") -> SymFunc:
    """Frobenius characteristic of the parking action, summed shape by shape.

    Each shape contributes the h basis element indexed by its riser partition.
    """
    acc: dict = {}
    for path in shapes(m, n, pathfilter):
        key = path.riser_partition()
        acc[key] = acc.get(key, 0) + 1
    return SymFunc("h", acc)


def brute_bifrobenius(m: int, n: int) -> BiSymFunc:
    """Two-alphabet Frobenius: sum over paths of h[risers](x) h[conjugate risers](y)."""
    acc: dict = {}
    for path in enumerate_dyck(m, n):
        key = (path.riser_partition(), path.conjugate().riser_partition())
        acc[key] = acc.get(key, 0) + 1
    return BiSymFunc("hh", acc)


def free_path_frobenius(m: int, n: int, south_start: bool = False) -> SymFunc:
    """Frobenius characteristic of label permutations on free paths."""
    from .paths import enumerate_free

    acc: dict = {}
    for path in enumerate_free(m, n, south_start):
        key = path.riser_partition()
        acc[key] = acc.get(key, 0) + 1
    return SymFunc("h", acc)
