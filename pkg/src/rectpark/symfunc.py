"""Exact symmetric function arithmetic in one and two alphabets.

Elements are sparse rational linear combinations of basis elements indexed by
partitions (:class:`SymFunc`) or by pairs of partitions, one per alphabet
(:class:`BiSymFunc`). Coefficients are exact ``Fraction`` values over
arbitrary-precision integers; no floating point is used anywhere. The pivot
basis for conversions and the Hall scalar product is the power sum basis.

Values are immutable by convention: operations never mutate their operands
and always return fresh objects, so they are safe to share across tasks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from .combinat import (
    Partition,
    character,
    check_partition,
    partitions_of,
    sort_to_partition,
    z_of,
)

BASES = ("p", "h", "e", "m", "s")
MULTIPLICATIVE_BASES = ("p", "h", "e")
BI_BASES = ("hh", "pp", "ss")


def _coeff(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(
        f"coefficients must be ints or Fractions, got {type(x).__name__}"
    )


def _bump(d: dict, k, v) -> None:
    nv = d.get(k, 0) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


def _dict_mul(d1: Mapping, d2: Mapping) -> dict:
    """Multiply two expansions in a multiplicative basis: concatenate indices."""
    out: dict = {}
    for k1, c1 in d1.items():
        for k2, c2 in d2.items():
            _bump(out, sort_to_partition(k1 + k2), c1 * c2)
    return out


# ---------------------------------------------------------------------------
# generator expansions, all cached and treated as read-only


@cache
def _h_in_p(k: int) -> dict:
    return {lam: Fraction(1, z_of(lam)) for lam in partitions_of(k)}


@cache
def _e_in_p(k: int) -> dict:
    return {
        lam: Fraction((-1) ** (k - len(lam)), z_of(lam)) for lam in partitions_of(k)
    }


@cache
def _p_in_h(k: int) -> dict:
    # Newton recurrence: p_k = k h_k - sum_{i<k} p_i h_{k-i}
    out = {(k,): Fraction(k)}
    for i in range(1, k):
        for idx, c in _p_in_h(i).items():
            _bump(out, sort_to_partition(idx + (k - i,)), -c)
    return out


@cache
def _p_in_e(k: int) -> dict:
    # Newton recurrence: p_k = (-1)^(k-1) k e_k + sum_{i<k} (-1)^(k+i-1) p_i e_{k-i}
    out = {(k,): Fraction((-1) ** (k - 1) * k)}
    for i in range(1, k):
        sign = (-1) ** (k + i - 1)
        for idx, c in _p_in_e(i).items():
            _bump(out, sort_to_partition(idx + (k - i,)), sign * c)
    return out


@cache
def _s_in_p(lam: Partition) -> dict:
    n = sum(lam)
    out = {}
    for mu in partitions_of(n):
        chi = character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_of(mu))
    return out


@cache
def _index_in_p(basis: str, idx: Partition) -> dict:
    """Expansion of a single basis element in the power sum basis."""
    if basis == "p":
        return {idx: Fraction(1)}
    if basis == "s":
        return _s_in_p(idx)
    gen = _h_in_p if basis == "h" else _e_in_p
    out = {(): Fraction(1)}
    for part in idx:
        out = _dict_mul(out, gen(part))
    return out


@cache
def _p_index_in(basis: str, idx: Partition) -> dict:
    """Expansion of p indexed by idx in a multiplicative target basis."""
    gen = _p_in_h if basis == "h" else _p_in_e
    out = {(): Fraction(1)}
    for part in idx:
        out = _dict_mul(out, gen(part))
    return out


def _power_in_monomial(mu: Partition, alpha: Partition) -> int:
    """Coefficient of the monomial x^alpha in p_mu.

    Counts assignments of the parts of mu to the slots of alpha so that each
    slot receives exactly its target total; equal parts of mu are grouped so
    the count stays polynomial in the degree.
    """
    sizes = tuple(sorted(set(mu), reverse=True))
    start = tuple(mu.count(s) for s in sizes)

    @cache
    def fill(j: int, counts: tuple[int, ...]) -> int:
        if j == len(alpha):
            return 1 if not any(counts) else 0
        total = 0
        for newcounts, ways in _consume(sizes, counts, alpha[j]):
            total += ways * fill(j + 1, newcounts)
        return total

    result = fill(0, start)
    fill.cache_clear()
    return result


def _consume(sizes, counts, target):
    """Yield (remaining counts, multiplicity) for part selections summing to target."""
    out = []

    def rec(i, remaining, acc, ways):
        if remaining == 0:
            out.append((acc + counts[i:], ways))
            return
        if i == len(sizes):
            return
        s = sizes[i]
        for k in range(min(counts[i], remaining // s) + 1):
            rec(i + 1, remaining - k * s, acc + (counts[i] - k,), ways * comb(counts[i], k))

    rec(0, target, (), 1)
    return out


def _mat_inv(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@cache
def _monomial_matrix(n: int):
    """Partitions of n with the matrix R[mu][lam] = [m_lam] p_mu."""
    parts = tuple(partitions_of(n))
    rows = [
        [Fraction(_power_in_monomial(mu, lam)) for lam in parts] for mu in parts
    ]
    return parts, rows


@cache
def _monomial_matrix_inv(n: int):
    parts, rows = _monomial_matrix(n)
    return parts, _mat_inv(rows)


def _sort_key(idx: Partition):
    # canonical term order: by degree, then reverse lexicographic on the index
    return (sum(idx), tuple(-x for x in idx))


class SymFunc:
    """Sparse rational linear combination of basis elements indexed by partitions.

    ``basis`` is one of ``p h e m s``; ``terms`` maps partitions to nonzero
    exact coefficients. Inhomogeneous values are allowed; degree-restricted
    operations validate and raise instead of silently truncating.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Partition, object] = (), *, _raw=False):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        if _raw:
            self.terms = dict(terms)
            return
        clean: dict[Partition, Fraction] = {}
        for idx, c in dict(terms).items():
            c = _coeff(c)
            if c:
                clean[check_partition(idx)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "p") -> "SymFunc":
        return cls(basis, {}, _raw=True)

    @classmethod
    def one(cls, basis: str = "p") -> "SymFunc":
        return cls(basis, {(): Fraction(1)}, _raw=True)

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_basis(self, other: "SymFunc") -> str:
        if not self.terms:
            return other.basis
        if not other.terms:
            return self.basis
        if self.basis != other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis} vs {other.basis} (convert explicitly)"
            )
        return self.basis

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        basis = self._check_basis(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            _bump(out, idx, c)
        return SymFunc(basis, out, _raw=True)

    def __neg__(self):
        return SymFunc(self.basis, {k: -c for k, c in self.terms.items()}, _raw=True)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return SymFunc.zero(self.basis)
            return SymFunc(
                self.basis, {k: v * c for k, v in self.terms.items()}, _raw=True
            )
        if not isinstance(other, SymFunc):
            return NotImplemented
        basis = self._check_basis(other)
        if not self.terms or not other.terms:
            return SymFunc.zero(basis)
        if basis in MULTIPLICATIVE_BASES:
            return SymFunc(basis, _dict_mul(self.terms, other.terms), _raw=True)
        if basis == "s":
            prod_p = self.to_basis("p") * other.to_basis("p")
            return prod_p.to_basis("s")
        raise ValueError("multiplication in the monomial basis is not supported")

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_basis("p").terms == other.to_basis("p").terms

    __hash__ = None  # mutable mapping inside; not hashable

    # -- degrees -----------------------------------------------------------

    def degrees(self) -> set[int]:
        return {sum(idx) for idx in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"element is inhomogeneous, degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc(
            self.basis,
            {k: c for k, c in self.terms.items() if sum(k) == d},
            _raw=True,
        )

    # -- basis conversion ---------------------------------------------------

    def _power_terms(self) -> dict:
        if self.basis == "p":
            return self.terms
        if self.basis == "m":
            out: dict = {}
            for d in self.degrees():
                parts, inv = _monomial_matrix_inv(d)
                vec = [self.terms.get(lam, Fraction(0)) for lam in parts]
                for j, mu in enumerate(parts):
                    val = sum(
                        (vec[i] * inv[i][j] for i in range(len(parts))), Fraction(0)
                    )
                    if val:
                        _bump(out, mu, val)
            return out
        out = {}
        for idx, c in self.terms.items():
            for mu, c2 in _index_in_p(self.basis, idx).items():
                _bump(out, mu, c * c2)
        return out

    def to_basis(self, target: str) -> "SymFunc":
        """Re-express the same element of the ring in another basis."""
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        pterms = self._power_terms()
        if target == "p":
            return SymFunc("p", dict(pterms), _raw=True)
        out: dict = {}
        if target in ("h", "e"):
            for mu, c in pterms.items():
                for idx, c2 in _p_index_in(target, mu).items():
                    _bump(out, idx, c * c2)
        elif target == "s":
            degs = {sum(mu) for mu in pterms}
            for d in degs:
                level = {mu: c for mu, c in pterms.items() if sum(mu) == d}
                for lam in partitions_of(d):
                    val = sum(
                        (c * character(lam, mu) for mu, c in level.items()),
                        Fraction(0),
                    )
                    if val:
                        out[lam] = val
        else:  # monomial
            degs = {sum(mu) for mu in pterms}
            for d in degs:
                parts, rows = _monomial_matrix(d)
                level = [pterms.get(mu, Fraction(0)) for mu in parts]
                for j, lam in enumerate(parts):
                    val = sum(
                        (level[i] * rows[i][j] for i in range(len(parts))),
                        Fraction(0),
                    )
                    if val:
                        out[lam] = val
        return SymFunc(target, out, _raw=True)

    # -- pairings and specializations ----------------------------------------

    def scalar(self, other: "SymFunc") -> Fraction:
        """Hall scalar product, with <p_lam, p_mu> = z_lam [lam == mu]."""
        fp = self._power_terms()
        gp = other._power_terms()
        if len(gp) < len(fp):
            fp, gp = gp, fp
        total = Fraction(0)
        for idx, c in fp.items():
            d = gp.get(idx)
            if d:
                total += c * d * z_of(idx)
        return total

    def dimension(self) -> Fraction:
        """Pairing against h_1^n: the dimension of a degree n permutation module."""
        if not self.terms:
            return Fraction(0)
        n = self.degree()
        c = self._power_terms().get((1,) * n, Fraction(0))
        return c * factorial(n)

    def scale_powersums(self, c) -> "SymFunc":
        """Substitute p_k -> c * p_k (the plethystic scaling f[c x]); p basis result."""
        c = _coeff(c)
        fp = self.to_basis("p")
        return SymFunc(
            "p", {idx: v * c ** len(idx) for idx, v in fp.terms.items()}
        )

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def render(self) -> str:
        """Deterministic text form, e.g. ``h[2] + h[1,1]`` or ``3/2*p[2,1]``."""
        if not self.terms:
            return "0"
        chunks = []
        for idx, c in self.sorted_terms():
            body = f"{self.basis}[{','.join(map(str, idx))}]" if idx else ""
            mag = abs(c)
            if body and mag == 1:
                frag = body
            elif body:
                frag = f"{mag}*{body}"
            else:
                frag = str(mag)
            chunks.append((c < 0, frag))
        neg, frag = chunks[0]
        out = ("-" if neg else "") + frag
        for neg, frag in chunks[1:]:
            out += (" - " if neg else " + ") + frag
        return out

    def __repr__(self):
        return f"<SymFunc {self.render()}>"

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {
                    "index": list(idx),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for idx, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "SymFunc":
        terms = {
            tuple(t["index"]): Fraction(int(t["num"]), int(t["den"]))
            for t in obj["terms"]
        }
        return cls(obj["basis"], terms)


def p(*parts: int) -> SymFunc:
    return SymFunc("p", {sort_to_partition(parts): 1})


def h(*parts: int) -> SymFunc:
    return SymFunc("h", {sort_to_partition(parts): 1})


def e(*parts: int) -> SymFunc:
    return SymFunc("e", {sort_to_partition(parts): 1})


def s(*parts: int) -> SymFunc:
    return SymFunc("s", {check_partition(parts): 1})


def mono(*parts: int) -> SymFunc:
    return SymFunc("m", {check_partition(parts): 1})


class BiSymFunc:
    """Sparse combination of products of basis elements in two alphabets.

    Terms are keyed by pairs (index_x, index_y) of partitions; the basis tag
    ``hh``, ``pp`` or ``ss`` fixes the interpretation of both sides.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping = (), *, _raw=False):
        if basis not in BI_BASES:
            raise ValueError(f"unknown two-alphabet basis {basis!r}")
        self.basis = basis
        if _raw:
            self.terms = dict(terms)
            return
        clean = {}
        for (ix, iy), c in dict(terms).items():
            c = _coeff(c)
            if c:
                clean[(check_partition(ix), check_partition(iy))] = c
        self.terms = clean

    @classmethod
    def zero(cls, basis: str = "hh") -> "BiSymFunc":
        return cls(basis, {}, _raw=True)

    @classmethod
    def one(cls, basis: str = "hh") -> "BiSymFunc":
        return cls(basis, {((), ()): Fraction(1)}, _raw=True)

    def __bool__(self):
        return bool(self.terms)

    def _check_basis(self, other):
        if not self.terms:
            return other.basis
        if not other.terms:
            return self.basis
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        return self.basis

    def __add__(self, other):
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        basis = self._check_basis(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _bump(out, k, c)
        return BiSymFunc(basis, out, _raw=True)

    def __neg__(self):
        return BiSymFunc(self.basis, {k: -c for k, c in self.terms.items()}, _raw=True)

    def __sub__(self, other):
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return BiSymFunc.zero(self.basis)
            return BiSymFunc(
                self.basis, {k: v * c for k, v in self.terms.items()}, _raw=True
            )
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        basis = self._check_basis(other)
        if not self.terms or not other.terms:
            return BiSymFunc.zero(basis)
        if basis == "ss":
            return (self.to_basis("pp") * other.to_basis("pp")).to_basis("ss")
        out: dict = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                key = (sort_to_partition(x1 + x2), sort_to_partition(y1 + y2))
                _bump(out, key, c1 * c2)
        return BiSymFunc(basis, out, _raw=True)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to_basis("pp").terms == other.to_basis("pp").terms

    __hash__ = None

    def swap(self) -> "BiSymFunc":
        """Exchange the two alphabets."""
        return BiSymFunc(
            self.basis, {(iy, ix): c for (ix, iy), c in self.terms.items()}, _raw=True
        )

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(ix), sum(iy)) for ix, iy in self.terms}

    def to_basis(self, target: str) -> "BiSymFunc":
        """Convert both sides, term by term, through the one-alphabet machinery."""
        if target not in BI_BASES:
            raise ValueError(f"unknown two-alphabet basis {target!r}")
        if target == self.basis:
            return self
        bx, by = self.basis[0], self.basis[1]
        tx, ty = target[0], target[1]
        out: dict = {}
        for (ix, iy), c in self.terms.items():
            ex = SymFunc(bx, {ix: 1}, _raw=True).to_basis(tx).terms
            ey = SymFunc(by, {iy: 1}, _raw=True).to_basis(ty).terms
            for kx, cx in ex.items():
                for ky, cy in ey.items():
                    _bump(out, (kx, ky), c * cx * cy)
        return BiSymFunc(target, out, _raw=True)

    def reduce_y(self, m: int) -> SymFunc:
        """Pair the y side against h_m, keeping the x side.

        Every h index of weight m pairs to 1 with h_m, so each term
        h_rho(x) h_sigma(y) collapses to h_rho(x). Requires the hh basis and
        y degree m in every term.
        """
        if self.basis != "hh":
            raise ValueError("reduce_y requires the hh basis")
        out: dict = {}
        for (ix, iy), c in self.terms.items():
            if sum(iy) != m:
                raise ValueError(
                    f"term with y index {iy} has y degree {sum(iy)}, expected {m}"
                )
            _bump(out, ix, c)
        return SymFunc("h", out, _raw=True)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (_sort_key(kv[0][0]), _sort_key(kv[0][1])),
        )

    def render(self) -> str:
        """Deterministic text form, e.g. ``h[2|2] + h[1,1|1,1]``."""
        if not self.terms:
            return "0"
        sym = self.basis[0]
        chunks = []
        for (ix, iy), c in self.sorted_terms():
            body = f"{sym}[{','.join(map(str, ix))}|{','.join(map(str, iy))}]"
            mag = abs(c)
            frag = body if mag == 1 else f"{mag}*{body}"
            chunks.append((c < 0, frag))
        neg, frag = chunks[0]
        out = ("-" if neg else "") + frag
        for neg, frag in chunks[1:]:
            out += (" - " if neg else " + ") + frag
        return out

    def __repr__(self):
        return f"<BiSymFunc {self.render()}>"

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {
                    "index_x": list(ix),
                    "index_y": list(iy),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for (ix, iy), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "BiSymFunc":
        terms = {
            (tuple(t["index_x"]), tuple(t["index_y"])): Fraction(
                int(t["num"]), int(t["den"])
            )
            for t in obj["terms"]
        }
        return cls(obj["basis"], terms)


def hh(index_x: Iterable[int], index_y: Iterable[int]) -> BiSymFunc:
    return BiSymFunc(
        "hh", {(sort_to_partition(index_x), sort_to_partition(index_y)): 1}
    )


# ---------------------------------------------------------------------------
# truncated series


def _zero_like(sample):
    if isinstance(sample, (int, Fraction)):
        return Fraction(0)
    if isinstance(sample, SymFunc):
        return SymFunc.zero(sample.basis)
    if isinstance(sample, BiSymFunc):
        return BiSymFunc.zero(sample.basis)
    raise TypeError(f"unsupported coefficient type {type(sample).__name__}")


def _one_like(sample):
    if isinstance(sample, (int, Fraction)):
        return Fraction(1)
    if isinstance(sample, SymFunc):
        return SymFunc.one(sample.basis)
    if isinstance(sample, BiSymFunc):
        return BiSymFunc.one(sample.basis)
    raise TypeError(f"unsupported coefficient type {type(sample).__name__}")


class TruncatedSeries:
    """Polynomial in a formal variable z, truncated at a fixed degree.

    Coefficients are all rationals, all SymFunc, or all BiSymFunc; arithmetic
    discards every term of z degree above the truncation order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, trunc: int) -> "TruncatedSeries":
        zero = _zero_like(value)
        return cls([value] + [zero] * trunc)

    def __getitem__(self, d: int):
        return self.coeffs[d]

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def _check_trunc(self, other: "TruncatedSeries"):
        if self.trunc != other.trunc:
            raise ValueError(
                f"truncation orders differ: {self.trunc} vs {other.trunc}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_trunc(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_trunc(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_trunc(other)
        zero = _zero_like(self.coeffs[0])
        out = [zero for _ in range(self.trunc + 1)]
        for i, a in enumerate(self.coeffs):
            for j in range(self.trunc + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with vanishing constant term.

        Uses the differential recurrence d F_d = sum_k (k a_k) F_{d-k}.
        """
        a = self.coeffs
        if a[0]:
            raise ValueError("exp requires a zero constant term")
        one = _one_like(a[0])
        zero = _zero_like(one)
        out = [one]
        for d in range(1, self.trunc + 1):
            acc = zero
            for k in range(1, d + 1):
                acc = acc + (k * a[k]) * out[d - k]
            out.append(Fraction(1, d) * acc)
        return TruncatedSeries(out)

    def __repr__(self):
        inner = ", ".join(repr(c) for c in self.coeffs)
        return f"<TruncatedSeries [{inner}]>"


def exp_series(coefficients: Mapping[int, object], trunc: int) -> TruncatedSeries:
    """Truncated exp(sum_k c_k z^k / k) for c_k given by ``coefficients``.

    Keys absent from the map are treated as zero; all present values must
    live in the same coefficient ring.
    """
    sample = next(iter(coefficients.values()), Fraction(1))
    zero = _zero_like(sample)
    coeffs = [zero]
    for k in range(1, trunc + 1):
        c = coefficients.get(k, zero)
        coeffs.append(Fraction(1, k) * c)
    return TruncatedSeries(coeffs).exp()
