"""Ring homomorphism machinery for closed path counts and parking Frobenius.

Two maps do all the work, both fixed by their values on power sum generators
for a coprime slope pair (a, b):

* ``count_eval`` sends p_k to binom((a+b)k, ak) / (a+b) and evaluates any
  symmetric function to an exact rational; applied to h_d it counts
  (ad, bd)-Dyck paths, applied to signed e products it counts primitive
  paths and paths with prescribed diagonal returns.

* ``frobenius_image`` sends p_k to a degree b*k symmetric function (see
  ``power_image``) and produces the Frobenius characteristic of the
  corresponding families of parking functions.

The two-alphabet generator ``power_image_xy`` extends the second map so that
riser structure of a path and of its conjugate are tracked simultaneously.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial, gcd

from .combinat import (
    compositions_of,
    falling_factorial,
    multinomial,
    multiplicities,
    multiplicity_partition,
    partitions_of,
    schur_principal_eval,
    sort_to_partition,
    z_of,
)
from .parking import PathFilter, normalize_filter
from .paths import slope_params
from .symfunc import BiSymFunc, SymFunc, TruncatedSeries, exp_series


def _require_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ValueError(f"(a, b) = ({a}, {b}) must be a coprime pair of positive integers")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def count_eval_pk(k: int, a: int, b: int) -> Fraction:
    """Value assigned to the power sum generator p_k by the counting map."""
    return Fraction(comb((a + b) * k, a * k), a + b)


def count_eval(f: SymFunc, a: int, b: int) -> Fraction:
    """Evaluate f under the ring map p_k -> binom((a+b)k, ak) / (a+b)."""
    _require_coprime(a, b)
    total = Fraction(0)
    for lam, c in f.to_basis("p").terms.items():
        val = c
        for part in lam:
            val *= count_eval_pk(part, a, b)
        total += val
    return total


@cache
def power_image(k: int, a: int, b: int) -> SymFunc:
    """Image of p_k under the Frobenius-valued map, in the power sum basis.

    (1/a) * sum over partitions lam of b*k of (a*k)^len(lam) p_lam / z_lam,
    which is also (1/a) h_{bk}[a k x].
    """
    _require_coprime(a, b)
    ak = a * k
    terms = {
        lam: Fraction(ak ** len(lam), a * z_of(lam)) for lam in partitions_of(b * k)
    }
    return SymFunc("p", terms)


def frobenius_image(f: SymFunc, a: int, b: int) -> SymFunc:
    """Image of a homogeneous f, extending p_k -> power_image(k, a, b).

    Sends degree d to degree b*d; the result is in the power sum basis.
    """
    _require_coprime(a, b)
    if not f.is_homogeneous():
        raise ValueError("frobenius_image requires a homogeneous element")
    out = SymFunc.zero("p")
    for lam, c in f.to_basis("p").terms.items():
        prod = SymFunc.one("p")
        for part in lam:
            prod = prod * power_image(part, a, b)
        out = out + c * prod
    return out


def _filter_preimage(d: int, pathfilter: PathFilter) -> SymFunc:
    """The symmetric function whose image realizes the filtered family.

    h_d for all paths, (-1)^(d-1) e_d for primitive paths, and the signed
    product of e's indexed by a returns composition in general.
    """
    if pathfilter == "all":
        return SymFunc("h", {(d,): 1})
    if pathfilter == "primitive":
        return SymFunc("e", {(d,): (-1) ** (d - 1)})
    gamma = pathfilter
    return SymFunc("e", {sort_to_partition(gamma): (-1) ** (d - len(gamma))})


@cache
def _park_frobenius_cached(m: int, n: int, pathfilter: PathFilter) -> SymFunc:
    d, a, b = slope_params(m, n)
    pre = _filter_preimage(d, pathfilter)
    return frobenius_image(pre, a, b).to_basis("h")


def park_frobenius(m: int, n: int, pathfilter: PathFilter = "all") -> SymFunc:
    """Closed-form Frobenius characteristic of (m, n)-parking functions.

    The filter selects all paths, primitive paths, or paths with returns
    given by a composition of gcd(m, n). Result in the h basis.
    """
    return _park_frobenius_cached(m, n, normalize_filter(m, n, pathfilter))


def coprime_frobenius(m: int, n: int, form: str = "h") -> SymFunc:
    """Frobenius of (m, n)-parking functions for coprime m, n, three ways.

    form "p":   (1/m) sum over lam of n of m^len(lam) p_lam / z_lam
    form "s":   (1/m) sum over lam of n of s_lam(1^m) s_lam
    form "h":   sum over lam of n of (m-1)...(m-len(lam)+1) / prod d_i(lam)! h_lam
    """
    if gcd(m, n) != 1:
        raise ValueError(f"({m}, {n}) must be coprime")
    if form == "p":
        terms = {
            lam: Fraction(m ** len(lam), m * z_of(lam)) for lam in partitions_of(n)
        }
        return SymFunc("p", terms)
    if form == "s":
        terms = {}
        for lam in partitions_of(n):
            val = schur_principal_eval(lam, m) / m
            if val:
                terms[lam] = val
        return SymFunc("s", terms)
    if form == "h":
        terms = {}
        for lam in partitions_of(n):
            den = 1
            for mult in multiplicities(lam).values():
                den *= factorial(mult)
            coeff = Fraction(falling_factorial(m - 1, len(lam) - 1), den)
            if coeff:
                terms[lam] = coeff
        return SymFunc("h", terms)
    raise ValueError(f"unknown form {form!r}, expected p, s or h")


def count_dyck_closed(m: int, n: int) -> int:
    """Number of (m, n)-Dyck paths via the counting map applied to h_d."""
    d, a, b = slope_params(m, n)
    return _as_int(count_eval(_filter_preimage(d, "all"), a, b), "Dyck path count")


def count_primitive_closed(m: int, n: int) -> int:
    d, a, b = slope_params(m, n)
    return _as_int(
        count_eval(_filter_preimage(d, "primitive"), a, b), "primitive path count"
    )


def count_returns_closed(m: int, n: int, gamma) -> int:
    gamma = normalize_filter(m, n, tuple(gamma))
    d, a, b = slope_params(m, n)
    return _as_int(
        count_eval(_filter_preimage(d, gamma), a, b), f"returns {gamma} path count"
    )


def count_parking_closed(m: int, n: int, pathfilter: PathFilter = "all") -> int:
    """Number of qualifying parking functions as the dimension of the image."""
    return _as_int(
        park_frobenius(m, n, pathfilter).dimension(), "parking function count"
    )


@cache
def power_image_xy(k: int, a: int, b: int, form: str = "partition") -> BiSymFunc:
    """Two-alphabet image of p_k, in the hh basis.

    form "composition": sum over j of (k/j) sum over pairs of j-part
    compositions of b*k and a*k of h(x) h(y).

    form "partition": the collected version, summing over j-part partition
    pairs weighted by multinomials of their part multiplicities.

    Both produce the same element; keeping the two routes separate lets the
    tests compare them.
    """
    _require_coprime(a, b)
    acc: dict = {}
    if form == "composition":
        for j in range(1, k + 1):
            w = Fraction(k, j)
            for rho in compositions_of(b * k, j):
                kx = sort_to_partition(rho)
                for sigma in compositions_of(a * k, j):
                    key = (kx, sort_to_partition(sigma))
                    acc[key] = acc.get(key, 0) + w
    elif form == "partition":
        for j in range(1, k + 1):
            w = Fraction(k, j)
            for mu in partitions_of(b * k, j):
                wx = multinomial(j, multiplicity_partition(mu))
                for nu in partitions_of(a * k, j):
                    wy = multinomial(j, multiplicity_partition(nu))
                    key = (mu, nu)
                    acc[key] = acc.get(key, 0) + w * wx * wy
    else:
        raise ValueError(f"unknown form {form!r}, expected composition or partition")
    return BiSymFunc("hh", acc)


def bifrobenius(m: int, n: int) -> BiSymFunc:
    """Closed-form two-alphabet Frobenius of (m, n)-parking functions.

    Coefficient of z^d in exp(sum_k power_image_xy(k) z^k / k) where
    d = gcd(m, n); x tracks riser structure, y the conjugate's.
    """
    d, a, b = slope_params(m, n)
    series = exp_series(
        {k: power_image_xy(k, a, b) for k in range(1, d + 1)}, d
    )
    return series[d]


def frobenius_series(a: int, b: int, trunc: int) -> TruncatedSeries:
    """Generating series whose z^d coefficient is the (ad, bd) parking Frobenius."""
    _require_coprime(a, b)
    return exp_series(
        {k: power_image(k, a, b) for k in range(1, trunc + 1)}, trunc
    )


def primitive_series(a: int, b: int, trunc: int) -> TruncatedSeries:
    """Generating series of primitive parking Frobenius: 1 - exp(-sum ...)."""
    _require_coprime(a, b)
    ex = exp_series(
        {k: -1 * power_image(k, a, b) for k in range(1, trunc + 1)}, trunc
    )
    one = TruncatedSeries.constant(SymFunc.one("p"), trunc)
    return one - ex
