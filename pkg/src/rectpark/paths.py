"""Rectangular Dyck paths and free south-east lattice paths.

An (m, n)-Dyck path runs from (0, n) to (m, 0) by south and east unit steps
while staying weakly on the origin side of the segment joining its endpoints
(the points (x, y) with n*x + m*y <= m*n). It is encoded as the weakly
decreasing sequence a_1 >= ... >= a_n where a_k is the x coordinate of the
south step from height k to height k - 1, bounded by the staircase sequence.

All geometry below uses exact integer arithmetic; diagonal membership is the
equality n*x + m*y == m*n, never a floating point test.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd
from typing import Iterator

from .combinat import Composition, Partition, conjugate, sort_to_partition


def slope_params(m: int, n: int) -> tuple[int, int, int]:
    """(d, a, b) with m = a*d, n = b*d and gcd(a, b) = 1."""
    if m < 1 or n < 1:
        raise ValueError(f"rectangle sides must be positive, got ({m}, {n})")
    d = gcd(m, n)
    return d, m // d, n // d


def staircase(m: int, n: int) -> tuple[int, ...]:
    """The maximal sequence d_k = floor((n - k) m / n), k = 1..n."""
    if m < 1 or n < 1:
        raise ValueError(f"rectangle sides must be positive, got ({m}, {n})")
    return tuple((n - k) * m // n for k in range(1, n + 1))


def _walk_points(word: str, n: int) -> list[tuple[int, int]]:
    """Lattice points visited by a step word, starting at (0, n)."""
    x, y = 0, n
    pts = [(x, y)]
    for ch in word:
        if ch == "E":
            x += 1
        else:
            y -= 1
        pts.append((x, y))
    return pts


def _highest_rank_points(m, n, points) -> list[tuple[int, int]]:
    best = None
    out: list[tuple[int, int]] = []
    for x, y in points:
        if (x, y) == (m, 0):
            continue
        r = m * y + n * x
        if best is None or r > best:
            best = r
            out = [(x, y)]
        elif r == best:
            out.append((x, y))
    return out


def _corner_points(word: str, n: int) -> list[tuple[int, int]]:
    pts = _walk_points(word, n)
    return [
        pts[i + 1]
        for i in range(len(word) - 1)
        if word[i] == "S" and word[i + 1] == "E"
    ]


class DyckPath:
    """An (m, n)-Dyck path in decreasing-sequence encoding."""

    __slots__ = ("m", "n", "seq")

    def __init__(self, m: int, n: int, seq):
        seq = tuple(int(x) for x in seq)
        bound = staircase(m, n)
        if len(seq) != n:
            raise ValueError(f"sequence {seq} must have length n = {n}")
        for k in range(n):
            if not 0 <= seq[k] <= bound[k]:
                raise ValueError(
                    f"entry a_{k + 1} = {seq[k]} violates the staircase bound {bound[k]}"
                )
            if k and seq[k] > seq[k - 1]:
                raise ValueError(f"sequence {seq} is not weakly decreasing")
        self.m = m
        self.n = n
        self.seq = seq

    def __eq__(self, other):
        if not isinstance(other, DyckPath):
            return NotImplemented
        return (self.m, self.n, self.seq) == (other.m, other.n, other.seq)

    def __hash__(self):
        return hash((self.m, self.n, self.seq))

    def __repr__(self):
        return f"DyckPath({self.m}, {self.n}, {self.seq})"

    def word(self) -> str:
        """Step word over S/E from (0, n) to (m, 0); always ends with E."""
        out = []
        prev = 0
        for k in range(self.n, 0, -1):
            a = self.seq[k - 1]
            out.append("E" * (a - prev))
            out.append("S")
            prev = a
        out.append("E" * (self.m - self.seq[0]))
        return "".join(out)

    def points(self) -> list[tuple[int, int]]:
        return _walk_points(self.word(), self.n)

    def partition(self) -> Partition:
        """The sequence with its zero entries stripped."""
        return tuple(x for x in self.seq if x > 0)

    def riser_composition(self) -> Composition:
        """Multiplicities of the distinct values in seq, by increasing value."""
        vals = sorted(set(self.seq))
        return tuple(sum(1 for x in self.seq if x == v) for v in vals)

    def riser_partition(self) -> Partition:
        return sort_to_partition(self.riser_composition())

    def conjugate(self) -> "DyckPath":
        """The (n, m)-Dyck path of the conjugate partition."""
        conj = conjugate(self.partition())
        seq = conj + (0,) * (self.m - len(conj))
        return DyckPath(self.n, self.m, seq)

    def returns_composition(self) -> Composition:
        """Gaps between successive diagonal contacts, a composition of gcd(m, n).

        The path can only meet the diagonal at the points (a*s, n - b*s) for
        s = 1..d; interior contacts (s < d) are the returns, and the end
        contact s = d is always included.
        """
        d, a, b = slope_params(self.m, self.n)
        pts = set(self.points())
        marks = [s for s in range(1, d) if (a * s, self.n - b * s) in pts]
        marks.append(d)
        prev = 0
        comp = []
        for mark in marks:
            comp.append(mark - prev)
            prev = mark
        return tuple(comp)

    def is_primitive(self) -> bool:
        """True when the path touches the diagonal only at its endpoints."""
        d, _, _ = slope_params(self.m, self.n)
        return self.returns_composition() == (d,)

    def highest_rank_points(self) -> list[tuple[int, int]]:
        """Path points (excluding (m, 0)) maximizing rank(x, y) = m*y + n*x."""
        return _highest_rank_points(self.m, self.n, self.points())

    def corners(self) -> list[tuple[int, int]]:
        """Points lying between a south step and a following east step."""
        return _corner_points(self.word(), self.n)

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "seq": list(self.seq)}


class FreePath:
    """A south-east path from (0, n) to (m, 0) whose final step is east.

    There is no condition relative to the diagonal. The path is stored as a
    step word over S/E with n south and m east steps.
    """

    __slots__ = ("m", "n", "word")

    def __init__(self, m: int, n: int, word: str):
        if m < 1 or n < 0:
            raise ValueError(f"need m >= 1 and n >= 0, got ({m}, {n})")
        if len(word) != m + n or any(ch not in "SE" for ch in word):
            raise ValueError(f"word {word!r} is not an S/E word of length {m + n}")
        if word.count("S") != n:
            raise ValueError(f"word {word!r} must contain {n} south steps")
        if not word.endswith("E"):
            raise ValueError(f"word {word!r} must end with an east step")
        self.m = m
        self.n = n
        self.word = word

    def __eq__(self, other):
        if not isinstance(other, FreePath):
            return NotImplemented
        return (self.m, self.n, self.word) == (other.m, other.n, other.word)

    def __hash__(self):
        return hash((self.m, self.n, self.word))

    def __repr__(self):
        return f"FreePath({self.m}, {self.n}, {self.word!r})"

    def starts_south(self) -> bool:
        return self.word.startswith("S")

    def points(self) -> list[tuple[int, int]]:
        return _walk_points(self.word, self.n)

    def riser_composition(self) -> Composition:
        """Lengths of the maximal south-step runs, in path order."""
        comp = []
        run = 0
        for ch in self.word:
            if ch == "S":
                run += 1
            elif run:
                comp.append(run)
                run = 0
        if run:
            comp.append(run)
        return tuple(comp)

    def riser_partition(self) -> Partition:
        return sort_to_partition(self.riser_composition())

    def highest_rank_points(self) -> list[tuple[int, int]]:
        return _highest_rank_points(self.m, self.n, self.points())

    def corners(self) -> list[tuple[int, int]]:
        return _corner_points(self.word, self.n)

    def cyclic_shift(self, j: int) -> "FreePath":
        """Cut the word just after its j-th east step and swap the two pieces.

        The result still ends with an east step, has the same riser partition,
        and the same number of highest rank points.
        """
        if not 1 <= j <= self.m:
            raise ValueError(f"east step index {j} out of range 1..{self.m}")
        count = 0
        for i, ch in enumerate(self.word):
            if ch == "E":
                count += 1
                if count == j:
                    return FreePath(self.m, self.n, self.word[i + 1 :] + self.word[: i + 1])
        raise AssertionError("unreachable: word holds m east steps")

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "word": self.word}


def enumerate_dyck(m: int, n: int) -> Iterator[DyckPath]:
    """All (m, n)-Dyck paths, in lexicographic order of their sequences."""
    bound = staircase(m, n)

    def rec(i: int, hi: int, prefix: tuple[int, ...]) -> Iterator[DyckPath]:
        if i == n:
            yield DyckPath(m, n, prefix)
            return
        for v in range(0, min(hi, bound[i]) + 1):
            yield from rec(i + 1, v, prefix + (v,))

    yield from rec(0, bound[0], ())


def count_dyck(m: int, n: int) -> int:
    """Number of (m, n)-Dyck paths, by enumeration."""
    return sum(1 for _ in enumerate_dyck(m, n))


def count_free(m: int, n: int, south_start: bool = False) -> int:
    """Number of free paths; binom(m + n - 1, n) without the south-start flag."""
    if south_start:
        return comb(m + n - 2, n - 1) if n >= 1 else 0
    return comb(m + n - 1, n)


def enumerate_free(m: int, n: int, south_start: bool = False) -> Iterator[FreePath]:
    """All free paths (final step east), optionally restricted to a south start.

    Deterministic order: by the positions of the south steps, lexicographically.
    """
    if m < 1:
        raise ValueError("need at least one east step")
    for south_positions in combinations(range(m + n - 1), n):
        if south_start and (n == 0 or south_positions[0] != 0):
            continue
        letters = ["E"] * (m + n)
        for i in south_positions:
            letters[i] = "S"
        yield FreePath(m, n, "".join(letters))
