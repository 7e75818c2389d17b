"""Exact arithmetic for truncated elementary and complete symmetric functions."""

from .exactalg import (
    BiPoly,
    CycInt,
    UniPoly,
    cyc_as_integer,
    cyc_power_sum,
    cyc_root_power,
    cyclotomic_coeffs,
)
from .multipoly import (
    MPoly,
    TSeries,
    is_symmetric,
    mpoly_mul,
    specialize,
    substitute_power,
    tseries_inverse,
    tseries_mul,
)
from .partitions import (
    conjugate,
    distinct_orbit,
    enum_partitions,
    is_partition,
    multinomial,
    multiplicities,
)
from .symfun import (
    E,
    H,
    P,
    classical,
    m_lambda,
    m_lambda_at_roots,
    product_over_partition,
    schur_det,
)
from .identities import (
    REGISTRY,
    IdentityReport,
    default_grid,
    list_identities,
    verify,
    verify_grid,
)
from .combinatorics import (
    enum_paths,
    enum_tilings,
    path_sign,
    path_to_tiling,
    path_weight,
    tiling_sign,
    tiling_to_path,
    tiling_weight,
    weight_sum,
)
from .bisnomial import (
    bisnomial,
    bisnomial_row,
    check_conversion,
    gaussian,
    pq_bisnomial,
    pq_gaussian,
    q_bisnomial,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CycInt",
    "E",
    "H",
    "IdentityReport",
    "MPoly",
    "P",
    "REGISTRY",
    "TSeries",
    "UniPoly",
    "bisnomial",
    "bisnomial_row",
    "check_conversion",
    "classical",
    "conjugate",
    "cyc_as_integer",
    "cyc_power_sum",
    "cyc_root_power",
    "cyclotomic_coeffs",
    "default_grid",
    "distinct_orbit",
    "enum_partitions",
    "enum_paths",
    "enum_tilings",
    "gaussian",
    "is_partition",
    "is_symmetric",
    "list_identities",
    "m_lambda",
    "m_lambda_at_roots",
    "mpoly_mul",
    "multinomial",
    "multiplicities",
    "path_sign",
    "path_to_tiling",
    "path_weight",
    "pq_bisnomial",
    "pq_gaussian",
    "product_over_partition",
    "q_bisnomial",
    "schur_det",
    "specialize",
    "substitute_power",
    "tiling_sign",
    "tiling_to_path",
    "tiling_weight",
    "tseries_inverse",
    "tseries_mul",
    "verify",
    "verify_grid",
    "weight_sum",
]
