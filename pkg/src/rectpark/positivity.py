"""Positivity experiments for images of signed Schur functions.

The images of hook Schur functions, signed by their leg length, expand with
nonnegative integer coefficients in the h basis (a provable statement, tested
hard). For general shapes the sign is the number of diagram cells strictly
below the main diagonal, and Schur positivity of the image is an experimental
observation: counterexamples are reported, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import Partition, check_partition
from .homomorphisms import frobenius_image
from .symfunc import SymFunc


def cells_below_diagonal(mu: Partition) -> int:
    """Number of diagram cells in row r, column c with r > c (1-based).

    This is the sign exponent for the signed Schur image: it equals the leg
    length j on the hook with arm k and leg j, matching the proven hook case.
    """
    mu = check_partition(mu)
    return sum(min(row, r - 1) for r, row in enumerate(mu, start=1))


def hook_partition(k: int, j: int) -> Partition:
    """The hook with arm k and leg j: one part k + 1 and j parts equal to 1."""
    if k < 0 or j < 0:
        raise ValueError("hook arm and leg must be nonnegative")
    return (k + 1,) + (1,) * j


def hook_schur(k: int, j: int) -> SymFunc:
    """Schur function of the hook with arm k and leg j (degree k + j + 1)."""
    return SymFunc("s", {hook_partition(k, j): 1})


@dataclass
class PositivityReport:
    """Outcome of a coefficient-positivity check in some basis."""

    positive: bool
    basis: str
    coefficients: dict[Partition, Fraction]
    bad_terms: list[tuple[Partition, Fraction]] = field(default_factory=list)


def _report(basis: str, coeffs: dict) -> PositivityReport:
    bad = sorted(
        ((idx, c) for idx, c in coeffs.items() if c < 0 or c.denominator != 1),
        key=lambda kv: (sum(kv[0]), kv[0]),
    )
    return PositivityReport(not bad, basis, dict(coeffs), bad)


def schur_positive_report(f: SymFunc) -> PositivityReport:
    """Expand in the Schur basis and flag negative or non-integer coefficients."""
    return _report("s", f.to_basis("s").terms)


def signed_e_positive_report(f: SymFunc) -> PositivityReport:
    """Check positivity in the signed elementary basis (-1)^(|mu|-len(mu)) e_mu."""
    resigned = {
        idx: (-1) ** (sum(idx) - len(idx)) * c
        for idx, c in f.to_basis("e").terms.items()
    }
    return _report("e", resigned)


def h_positive_report(f: SymFunc) -> PositivityReport:
    return _report("h", f.to_basis("h").terms)


def signed_schur_image(mu: Partition, a: int, b: int) -> SymFunc:
    """Image of (-1)^(cells below diagonal) s_mu under the Frobenius map."""
    mu = check_partition(mu)
    sign = (-1) ** cells_below_diagonal(mu)
    return frobenius_image(SymFunc("s", {mu: sign}), a, b)


def hook_image_h_positive(k: int, j: int, a: int, b: int) -> PositivityReport:
    """h-positivity of the signed hook image; provable, so a failure is a bug."""
    f = (-1) ** j * hook_schur(k, j)
    return h_positive_report(frobenius_image(f, a, b))


def conjecture_case(mu: Partition, a: int, b: int) -> dict:
    """Schur positivity report for one signed Schur image, JSON-shaped."""
    mu = check_partition(mu)
    report = schur_positive_report(signed_schur_image(mu, a, b))
    return {
        "mu": list(mu),
        "a": a,
        "b": b,
        "iota": cells_below_diagonal(mu),
        "schur_positive": report.positive,
        "coefficients": {
            ",".join(map(str, idx)): f"{c.numerator}/{c.denominator}"
            if c.denominator != 1
            else str(c.numerator)
            for idx, c in sorted(report.coefficients.items())
        },
    }
