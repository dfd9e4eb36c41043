"""Factorizations, Betti elements, minimal presentations and gluings of
finitely generated, cancellative, reduced commutative monoids (numerical and
affine semigroups)."""

from .errors import (
    ArithmeticOverflow,
    BoundTooSmall,
    DimensionMismatch,
    DuplicateGenerator,
    EmptyInput,
    InputError,
    InvalidGluing,
    InvalidParams,
    MonoidError,
    NegativeCoordinate,
    NonCoprimeGenerators,
    NotAMember,
    NotEmbeddingDimension3,
    NotInTheoremScope,
    NotMED,
    TooManyGenerators,
    UnsupportedX,
    ZeroGenerator,
    ZeroVectorGenerator,
)
from .semigroups import (
    AffineSemigroup,
    NumericalInvariants,
    NumericalSemigroup,
    affine_from_generators,
    as_affine,
    numerical_from_generators,
)
from .factorizations import (
    Factorization,
    FactorizationSet,
    RClassPartition,
    count_factorizations,
    enumerate_factorizations,
    r_classes,
)
from .presentations import (
    BettiReport,
    Presentation,
    PresentationPair,
    UniquePresentation,
    affine_betti_up_to,
    betti_elements,
    betti_minimal_elements,
    betti_report,
    betti_scan_bound,
    element_has_unique_presentation,
    is_betti_minimal_by_classes,
    is_complete_intersection_cardinality,
    is_minimal_multi_element,
    is_uniquely_presented,
    minimal_presentation,
    verify_presentation,
)
from .gluing import (
    GluingDecomposition,
    IntegerLattice,
    PartReport,
    betti_via_gluing,
    check_gluing,
    d_has_unique_presentation,
    find_gluings,
    glue_numerical,
    hnf,
    lattice_intersection,
    uniquely_presented_via_gluing,
)
from .families import (
    ClosedFormBetti,
    ED3SymmetricParams,
    IntervalParams,
    TelescopicStep,
    ed3_symmetric,
    ed3_symmetric_betti,
    ed3_symmetric_uniquely_presented,
    interval_betti_closed_form,
    interval_semigroup,
    interval_uniquely_presented,
    med_betti_closed_form,
    med_uniquely_presented,
    telescopic_sequence,
)
from .enumeration import (
    TreeNode,
    children,
    count_by_frobenius,
    semigroups_with_frobenius,
    tree_node,
    tree_root,
)

__version__ = "0.1.0"
