"""Exact enumeration and Frobenius characteristics of rectangular Dyck paths
and parking functions, with closed formulas verified against brute force."""

from .combinat import (
    Composition,
    Partition,
    character,
    compositions_of,
    conjugate,
    multinomial,
    multiplicity_partition,
    partitions_of,
    schur_principal_eval,
    sort_to_partition,
    z_of,
)
from .homomorphisms import (
    bifrobenius,
    count_dyck_closed,
    count_eval,
    count_parking_closed,
    count_primitive_closed,
    count_returns_closed,
    coprime_frobenius,
    frobenius_image,
    frobenius_series,
    park_frobenius,
    power_image,
    power_image_xy,
    primitive_series,
)
from .parking import (
    ParkingFunction,
    brute_bifrobenius,
    brute_frobenius,
    count_parking,
    count_parking_brute,
    enumerate_parking,
    enumerate_parking_for_shape,
    is_parking,
)
from .paths import (
    DyckPath,
    FreePath,
    count_dyck,
    count_free,
    enumerate_dyck,
    enumerate_free,
    slope_params,
    staircase,
)
from .positivity import (
    cells_below_diagonal,
    conjecture_case,
    hook_image_h_positive,
    hook_schur,
    schur_positive_report,
    signed_e_positive_report,
    signed_schur_image,
)
from .symfunc import (
    BiSymFunc,
    SymFunc,
    TruncatedSeries,
    e,
    exp_series,
    h,
    hh,
    mono,
    p,
    s,
)

__version__ = "0.1.0"
