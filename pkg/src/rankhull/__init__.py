"""Rank-metric codes over F_{q^{2m}}: hulls, hull variation by F_q-equivalence,
and Hermitian self-orthogonal Gabidulin codes."""
from .codes import (
    Flavor,
    HullReport,
    RankCode,
    ZeroCode,
    apply_equivalence,
    dual,
    gram,
    hull,
    hull_oracle,
    is_mrd,
    min_rank_distance,
    random_code,
    rank_weight,
)
from .construct import (
    GabidulinSpec,
    ScaledSelfDualBasis,
    gabidulin_code,
    hermitian_so_gabidulin,
    power_sums,
    scaled_self_dual_basis,
    verify_scaled_basis,
)
from .gf import FieldElement, FieldTower, build_field, standard_tower
from .hullvary import mrd_with_hull, reduce_hull_once, to_lcd, vary_hull
from .linalg import Matrix
from .oracle import check_22_obstruction, euclidean_so_mrd_search, hull_spectrum

__version__ = "0.1.0"
