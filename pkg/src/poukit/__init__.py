"""Desk-scale toolkit for partitions of unity, indexed covers, nerves, and
certified approximate selections on finite grounds."""

from .errors import (
    CoverGap,
    DiscontinuousAt,
    InputError,
    NonPositiveEpsilon,
    NotACover,
    NotReflexive,
    NotTransitive,
    PoukitError,
    RowNotSimplex,
    TailTooLarge,
)
from .nerve import (
    CoverSimplexMapping,
    SimplicialComplex,
    canonical_map_check,
    cover_simplex_mapping,
    nerve_from_cover,
)
from .pou import (
    LocalFinitenessCertificate,
    PartitionOfUnity,
    mather_compose,
    pou_from_metric_cover,
    subordination_check,
    validate_pou,
)
from .selection import (
    ConvexTarget,
    SelectionCertificate,
    barycentric_selection,
    conv_fiber_open,
    conv_membership,
    epsilon_selection,
)
from .setmaps import (
    PropertyReport,
    SetValuedMap,
    classify,
    closure_cover,
    graph_closure,
    indexed_cover,
)
from .spaces import (
    Ball,
    FiniteSpace,
    MetricSampleSpace,
    finite_interval_model,
    product_space,
    validate_space,
)
from .sparse import (
    ExtendedUnitVec,
    SparseVec,
    carrier,
    convex_combination,
    dirac,
    mather_eta,
    mather_lambda,
    mather_support_bound,
    norms,
    uniform,
)

__version__ = "0.1.0"
