"""Exact workbench for generalized and graded valuations on presented algebras."""

from .trop import BOTTOM, TropicalValue, monomial_weight, trop, trop_add, trop_mul
from .poly import (
    CoeffValuation,
    Polynomial,
    Presentation,
    RingContext,
    WeightVector,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    contains_monomial,
    enumerate_fan,
    initial_form,
    initial_ideal,
    normal_form,
    same_initial_ideal,
)
from .valuation import (
    AxiomReport,
    CandidateValuation,
    check_axioms,
    check_trop_membership,
    cross_presentation_consistency,
    make_weight_valuation,
    pullback,
    tropicalize,
)
from .cones import (
    RelationVerdict,
    arrow_check,
    cone_sum,
    facet_classes,
    implies_check,
    scale,
)
from .graded import (
    GradedAlgebra,
    GradedValuation,
    LexFunctional,
    associated_graded,
    check_graded_axioms,
    check_lower_triangular,
    check_monoid_theorem,
    check_valuation_axioms,
    graded_value,
    monomial_poly_ring,
    zero_divisor_search,
)
from .sl2 import (
    collapse_functional,
    root_functional,
    sl2_branching_algebra,
    sl2_rep_ring,
)
from .textio import parse_poly, parse_presentation, parse_ring, parse_weights, poly_to_str

__version__ = "0.1.0"
