"""Oracle-equivalence suites: every closed formula against brute enumeration.

Each check compares two independently computed quantities; nothing here
depends on externally recorded values. The CLI ``verify`` verb runs these and
maps any failure to exit status 2.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from math import gcd
from typing import Callable, NamedTuple

from .combinat import compositions_of, multinomial, partitions_of
from .homomorphisms import (
    bifrobenius,
    count_dyck_closed,
    count_eval,
    count_primitive_closed,
    count_returns_closed,
    coprime_frobenius,
    frobenius_series,
    park_frobenius,
    power_image,
    power_image_xy,
    primitive_series,
)
from .parking import (
    brute_bifrobenius,
    brute_frobenius,
    count_parking_brute,
    count_parking,
    is_parking,
)
from .paths import DyckPath, FreePath, count_dyck, enumerate_dyck, enumerate_free, slope_params
from .positivity import hook_image_h_positive
from .symfunc import SymFunc, TruncatedSeries, e, h, s


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str


def _pairs(max_semi: int):
    for total in range(2, max_semi + 1):
        for m in range(1, total):
            yield m, total - m


def check_dyck_counts(max_semi: int = 12) -> Check:
    """Counting map on h_d against direct path enumeration."""
    cases = 0
    for m, n in _pairs(max_semi):
        brute = count_dyck(m, n)
        closed = count_dyck_closed(m, n)
        if brute != closed:
            return Check(
                "dyck-counts", False, f"({m},{n}): closed {closed} != brute {brute}"
            )
        cases += 1
    return Check("dyck-counts", True, f"{cases} rectangles, semiperimeter <= {max_semi}")


def check_staircase_stability(k_max: int = 3, n_max: int = 4) -> Check:
    """Dyck path sets agree for widths k*n and k*n + 1."""
    cases = 0
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            left = {path.seq for path in enumerate_dyck(k * n, n)}
            right = {path.seq for path in enumerate_dyck(k * n + 1, n)}
            if left != right:
                return Check(
                    "staircase-stability", False, f"sets differ at (k, n) = ({k}, {n})"
                )
            cases += 1
    return Check("staircase-stability", True, f"{cases} cases")


def check_conjugation(max_semi: int = 10) -> Check:
    """Conjugation is an involutive bijection onto the transposed rectangle."""
    for m, n in _pairs(max_semi):
        image = set()
        for path in enumerate_dyck(m, n):
            conj = path.conjugate()
            if conj.conjugate() != path:
                return Check("conjugation", False, f"not involutive at {path!r}")
            image.add(conj.seq)
        if image != {q.seq for q in enumerate_dyck(n, m)}:
            return Check("conjugation", False, f"not onto for ({m},{n})")
    return Check("conjugation", True, f"semiperimeter <= {max_semi}")


def check_returns_partition(max_semi: int = 12) -> Check:
    """Path sets split by returns composition; closed counts match per block."""
    for m, n in _pairs(max_semi):
        d, _, _ = slope_params(m, n)
        by_comp: dict = {}
        for path in enumerate_dyck(m, n):
            gamma = path.returns_composition()
            by_comp[gamma] = by_comp.get(gamma, 0) + 1
        total = 0
        for gamma in compositions_of(d):
            cnt = by_comp.pop(gamma, 0)
            closed = count_returns_closed(m, n, gamma)
            if closed != cnt:
                return Check(
                    "returns-partition",
                    False,
                    f"({m},{n}) gamma={gamma}: closed {closed} != brute {cnt}",
                )
            total += cnt
        if by_comp or total != count_dyck(m, n):
            return Check("returns-partition", False, f"({m},{n}): stray blocks {by_comp}")
        if count_primitive_closed(m, n) != sum(
            1 for path in enumerate_dyck(m, n) if path.is_primitive()
        ):
            return Check("returns-partition", False, f"({m},{n}): primitive count")
    return Check("returns-partition", True, f"semiperimeter <= {max_semi}")


def _class_counts_free(m: int, n: int, south_start: bool) -> dict:
    out: dict = {}
    for path in enumerate_free(m, n, south_start):
        t = len(path.highest_rank_points())
        j = len(path.corners())
        out[(t, j)] = out.get((t, j), 0) + 1
    return out


def _class_counts_dyck(m: int, n: int) -> dict:
    out: dict = {}
    for path in enumerate_dyck(m, n):
        t = len(path.highest_rank_points())
        j = len(path.corners())
        out[(t, j)] = out.get((t, j), 0) + 1
    return out


def check_rotation_bijection(max_semi: int = 10) -> Check:
    """Cardinality identity behind the cyclic-shift argument: Dyck^t * m = Bin^t * t."""
    for m, n in _pairs(max_semi):
        dyck = _class_counts_dyck(m, n)
        free: dict = {}
        for path in enumerate_free(m, n):
            t = len(path.highest_rank_points())
            free[t] = free.get(t, 0) + 1
        d, _, _ = slope_params(m, n)
        for t in range(1, d + 1):
            lhs = sum(cnt for (tt, _), cnt in dyck.items() if tt == t) * m
            rhs = free.get(t, 0) * t
            if lhs != rhs:
                return Check(
                    "rotation-bijection", False, f"({m},{n}) t={t}: {lhs} != {rhs}"
                )
        if any(t > d for t in free):
            return Check("rotation-bijection", False, f"({m},{n}): t exceeds d")
    return Check("rotation-bijection", True, f"semiperimeter <= {max_semi}")


def check_corner_bijection(max_semi: int = 10) -> Check:
    """Corner-refined identity: Dyck^(t,j) * j = cBin^(t,j) * t."""
    for m, n in _pairs(max_semi):
        dyck = _class_counts_dyck(m, n)
        cfree = _class_counts_free(m, n, south_start=True)
        keys = set(dyck) | set(cfree)
        for t, j in sorted(keys):
            lhs = dyck.get((t, j), 0) * j
            rhs = cfree.get((t, j), 0) * t
            if lhs != rhs:
                return Check(
                    "corner-bijection",
                    False,
                    f"({m},{n}) (t,j)=({t},{j}): {lhs} != {rhs}",
                )
    return Check("corner-bijection", True, f"semiperimeter <= {max_semi}")


def check_parking_count_identity(max_semi: int = 12) -> Check:
    """Multinomial count over shapes equals generated-word count."""
    for m, n in _pairs(max_semi):
        formula = count_parking(m, n)
        brute = count_parking_brute(m, n)
        if formula != brute:
            return Check(
                "parking-count", False, f"({m},{n}): formula {formula} != brute {brute}"
            )
    return Check("parking-count", True, f"semiperimeter <= {max_semi}")


def check_coprime_count(max_semi: int = 13) -> Check:
    """m^(n-1) parking functions in the coprime case, by enumeration."""
    for m, n in _pairs(max_semi):
        if gcd(m, n) != 1:
            continue
        brute = count_parking_brute(m, n)
        if brute != m ** (n - 1):
            return Check(
                "coprime-count", False, f"({m},{n}): {brute} != {m}^{n - 1}"
            )
    return Check("coprime-count", True, f"semiperimeter <= {max_semi}")


def check_coset_uniqueness(
    pairs=((3, 2), (2, 3), (5, 2), (4, 3), (3, 4), (5, 4))
) -> Check:
    """Each shift coset of Z_m^n contains exactly one parking function (coprime)."""
    from itertools import product

    for m, n in pairs:
        for word in product(range(m), repeat=n):
            hits = sum(
                1
                for k in range(m)
                if is_parking(tuple((x + k) % m for x in word), m, n)
            )
            if hits != 1:
                return Check(
                    "coset-uniqueness", False, f"({m},{n}) word {word}: {hits} hits"
                )
    return Check("coset-uniqueness", True, f"pairs {tuple(pairs)}")


def check_frobenius_oracle(max_semi: int = 12) -> Check:
    """Closed-form parking Frobenius equals the enumeration oracle, all filters."""
    cases = 0
    for m, n in _pairs(max_semi):
        d, _, _ = slope_params(m, n)
        filters = ["all", "primitive"] + list(compositions_of(d))
        for pathfilter in filters:
            closed = park_frobenius(m, n, pathfilter)
            brute = brute_frobenius(m, n, pathfilter)
            if closed != brute:
                return Check(
                    "frobenius-oracle",
                    False,
                    f"({m},{n}) filter={pathfilter}: {closed.render()} != {brute.render()}",
                )
            cases += 1
    return Check("frobenius-oracle", True, f"{cases} cases, semiperimeter <= {max_semi}")


def check_triform(max_semi: int = 11) -> Check:
    """The three coprime expansions agree and give the expected multiplicities."""
    from math import comb

    for m, n in _pairs(max_semi):
        if gcd(m, n) != 1:
            continue
        fp = coprime_frobenius(m, n, "p")
        fs = coprime_frobenius(m, n, "s")
        fh = coprime_frobenius(m, n, "h")
        if not (fp == fs and fs == fh and fh == park_frobenius(m, n)):
            return Check("coprime-triform", False, f"({m},{n}): forms differ")
        triv = fp.scalar(s(n))
        sign = fp.scalar(SymFunc("s", {(1,) * n: 1}))
        if triv * (m + n) != comb(m + n, n) or sign * m != comb(m, n):
            return Check(
                "coprime-triform", False, f"({m},{n}): multiplicities {triv}, {sign}"
            )
    return Check("coprime-triform", True, f"semiperimeter <= {max_semi}")


def check_bizley_small_gcd(ab_max: int = 4) -> Check:
    """Displayed closed forms for gcd 2 and 3 equal the counting map images."""
    from fractions import Fraction
    from math import comb

    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            if gcd(a, b) != 1:
                continue
            c1 = Fraction(comb(a + b, a), a + b)
            c2 = Fraction(comb(2 * a + 2 * b, 2 * a), a + b)
            c3 = Fraction(comb(3 * a + 3 * b, 3 * a), a + b)
            d2 = Fraction(1, 2) * c1**2 + Fraction(1, 2) * c2
            d3 = Fraction(1, 6) * c1**3 + Fraction(1, 2) * c1 * c2 + Fraction(1, 3) * c3
            if count_eval(h(2), a, b) != d2 or count_eval(h(3), a, b) != d3:
                return Check("bizley-gcd23", False, f"(a,b)=({a},{b})")
            if count_dyck(2 * a, 2 * b) != d2 or count_dyck(3 * a, 3 * b) != d3:
                return Check("bizley-gcd23", False, f"(a,b)=({a},{b}) vs enumeration")
    return Check("bizley-gcd23", True, f"a, b <= {ab_max}")


def check_power_image_routes(ab_max: int = 3, k_max: int = 3) -> Check:
    """Explicit partition sum for the p_k image equals the rescaled h route."""
    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            if gcd(a, b) != 1:
                continue
            for k in range(1, k_max + 1):
                direct = power_image(k, a, b)
                from fractions import Fraction

                rescaled = Fraction(1, a) * h(b * k).scale_powersums(a * k)
                if direct != rescaled:
                    return Check(
                        "power-image-routes", False, f"(k,a,b)=({k},{a},{b})"
                    )
    return Check("power-image-routes", True, f"a, b <= {ab_max}, k <= {k_max}")


def check_pxy_forms(ab_max: int = 2, k_max: int = 3) -> Check:
    """Composition-indexed and partition-indexed two-alphabet generators agree."""
    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            if gcd(a, b) != 1:
                continue
            for k in range(1, k_max + 1):
                lhs = power_image_xy(k, a, b, "composition")
                rhs = power_image_xy(k, a, b, "partition")
                if lhs != rhs:
                    return Check("pxy-dual-forms", False, f"(k,a,b)=({k},{a},{b})")
    return Check("pxy-dual-forms", True, f"a, b <= {ab_max}, k <= {k_max}")


def check_bifrobenius_cases(
    pairs=((1, 1), (2, 2), (3, 3), (2, 4), (4, 2), (3, 2), (2, 3), (4, 6))
) -> Check:
    """Closed two-alphabet Frobenius equals the oracle; symmetry and reduction hold."""
    for m, n in pairs:
        closed = bifrobenius(m, n)
        brute = brute_bifrobenius(m, n)
        if closed != brute:
            return Check("bifrobenius-oracle", False, f"({m},{n}): mismatch")
        if closed.swap() != bifrobenius(n, m):
            return Check("bifrobenius-oracle", False, f"({m},{n}): symmetry fails")
        if closed.reduce_y(m) != park_frobenius(m, n):
            return Check("bifrobenius-oracle", False, f"({m},{n}): reduction fails")
    return Check("bifrobenius-oracle", True, f"pairs {tuple(pairs)}")


def check_series_identity(trunc: int = 3, pairs=((1, 1), (1, 2), (2, 3))) -> Check:
    """Full series times (1 - primitive series) is 1; coefficients match."""
    for a, b in pairs:
        full = frobenius_series(a, b, trunc)
        prim = primitive_series(a, b, trunc)
        one = TruncatedSeries.constant(SymFunc.one("p"), trunc)
        if full * (one - prim) != one:
            return Check("series-identity", False, f"(a,b)=({a},{b})")
        for dd in range(trunc + 1):
            if dd == 0:
                continue
            if full[dd] != park_frobenius(a * dd, b * dd):
                return Check(
                    "series-identity", False, f"(a,b)=({a},{b}) coefficient {dd}"
                )
            if prim[dd] != park_frobenius(a * dd, b * dd, "primitive"):
                return Check(
                    "series-identity", False, f"(a,b)=({a},{b}) primitive coeff {dd}"
                )
    return Check("series-identity", True, f"order {trunc}, pairs {tuple(pairs)}")


def check_hook_positivity(
    size_max: int = 4, pairs=((1, 1), (1, 2), (2, 1), (2, 3))
) -> Check:
    """Signed hook images are h-positive with integer coefficients (proven)."""
    for a, b in pairs:
        for size in range(1, size_max + 1):
            for j in range(size):
                k = size - 1 - j
                report = hook_image_h_positive(k, j, a, b)
                if not report.positive:
                    return Check(
                        "hook-h-positivity",
                        False,
                        f"hook ({k}|{j}) at (a,b)=({a},{b}): {report.bad_terms}",
                    )
    return Check("hook-h-positivity", True, f"hooks of size <= {size_max}")


def check_lbin_frobenius(max_semi: int = 8) -> Check:
    """Labelled free path Frobenius equals a times the p_d image."""
    from .parking import free_path_frobenius

    for m, n in _pairs(max_semi):
        d, a, b = slope_params(m, n)
        lhs = free_path_frobenius(m, n)
        rhs = a * power_image(d, a, b)
        if lhs != rhs:
            return Check("labelled-free-frobenius", False, f"({m},{n})")
    return Check("labelled-free-frobenius", True, f"semiperimeter <= {max_semi}")


ALL_CHECKS: dict[str, Callable[..., Check]] = {
    "dyck-counts": check_dyck_counts,
    "staircase-stability": check_staircase_stability,
    "conjugation": check_conjugation,
    "returns-partition": check_returns_partition,
    "rotation-bijection": check_rotation_bijection,
    "corner-bijection": check_corner_bijection,
    "parking-count": check_parking_count_identity,
    "coprime-count": check_coprime_count,
    "coset-uniqueness": check_coset_uniqueness,
    "frobenius-oracle": check_frobenius_oracle,
    "coprime-triform": check_triform,
    "bizley-gcd23": check_bizley_small_gcd,
    "power-image-routes": check_power_image_routes,
    "pxy-dual-forms": check_pxy_forms,
    "bifrobenius-oracle": check_bifrobenius_cases,
    "series-identity": check_series_identity,
    "hook-h-positivity": check_hook_positivity,
    "labelled-free-frobenius": check_lbin_frobenius,
}

# checks whose default sweep is capped by the --max-semi option
_SEMI_BOUND = {
    "dyck-counts": 12,
    "returns-partition": 12,
    "parking-count": 12,
    "frobenius-oracle": 12,
}


def thread_count() -> int:
    """Worker bound from RECTPARK_THREADS (default 1)."""
    raw = os.environ.get("RECTPARK_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_checks(names=None, max_semi: int = 12) -> list[Check]:
    """Run the named checks (all by default), in deterministic order.

    Checks run on a small thread pool bounded by RECTPARK_THREADS; results
    are collected and reported in submission order regardless of timing.
    """
    selected = list(ALL_CHECKS) if names is None else list(names)
    jobs = []
    for name in selected:
        fn = ALL_CHECKS[name]
        if name in _SEMI_BOUND:
            jobs.append((name, lambda fn=fn: fn(max_semi)))
        else:
            jobs.append((name, fn))
    workers = thread_count()
    if workers == 1:
        return [job() for _, job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(job) for _, job in jobs]
        return [f.result() for f in futures]
