"""Alexander self-dual complexes and the intersection theory of their compactifications."""

from .chowring import (
    ChowClass,
    Degree1Basis,
    cycle_class,
    default_unicycle,
    degree1_basis,
    degree1_group,
    edge_class,
    eq_via_pairing,
    evaluate_top,
    face_cycles,
    graded_group,
    graded_rank,
    multiply,
    parse_class,
    psi_class,
    unit,
    zero,
)
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    canonical_form,
    complex_from_facets,
    contract,
    enumerate_asd,
    equivalent_coarse,
    facets,
    flip,
    is_asd,
    is_pre_asd,
    is_stable_configuration,
    minimal_nonfaces,
    projective_complex,
    relabel,
)
from .errors import ASDError, Defect
from .intersection import (
    CrossCheckReport,
    cross_check,
    intersection_formula,
    intersection_number,
    intersection_recursion,
    intersection_ring,
    intersection_table,
)
from .invariants import (
    IntegerPolynomial,
    betti_numbers,
    euler_characteristic,
    poincare_polynomial,
)
from .threshold import (
    LengthVector,
    find_realization,
    is_generic,
    realize_threshold,
    same_chamber,
    short_complex,
)

__version__ = "0.1.0"
