"""Exact partition/orbit-dimension calculus for global integrals on GL_n.

Partitions label unipotent orbits; representation descriptors carry attached
orbits; the dimension equation books their sizes against n(n-1)/2.  The
theorems module verifies the supporting statements exhaustively at desk
scale, and the verdict engine applies them to concrete integral data.
"""

from .equation import (
    DEFAULT_MAX_L,
    DEFAULT_MAX_N,
    EquationReport,
    check_dim_equation,
    check_dim_equation_full,
    enumerate_orbit_solutions,
    reduce_to_whittaker_form,
)
from .errors import InvalidInputError, ResourceLimitError
from .partitions import (
    Dominance,
    EpsilonVector,
    Partition,
    dominance_floor,
    enumerate_partitions,
    partition_from_epsilon,
)
from .representations import (
    Eisenstein,
    ExplicitOrbit,
    Generic,
    IntegralSpec,
    RepDescriptor,
    Speh,
    TrivialConstituent,
    attached_orbit,
    dim_rep,
    is_speh_type,
    minimal_eisenstein,
    rank,
    rep_from_json,
    rep_to_json,
    spec_from_json,
    spec_to_json,
    top_trivial_block,
    trivial_block_at,
)
from .theorems import (
    DEFAULT_CEX_CAP,
    EquationFails,
    Lemma2Case,
    NotApplicable,
    NotConcluded,
    Vanishes,
    Verdict,
    VerificationReport,
    check_corollary1,
    lemma2_I,
    lemma2_reduction_cases,
    residual_bound,
    vanishing_verdict,
    verdict_to_json,
    verify_epsilon_orbit_claim,
    verify_lemma1,
    verify_lemma2,
    verify_lemma2_reduction,
    verify_prop3,
    verify_prop4,
    verify_prop5,
)

__version__ = "0.1.0"

__all__ = [
    "Dominance",
    "EpsilonVector",
    "Partition",
    "dominance_floor",
    "enumerate_partitions",
    "partition_from_epsilon",
    "Generic",
    "Speh",
    "TrivialConstituent",
    "ExplicitOrbit",
    "Eisenstein",
    "RepDescriptor",
    "IntegralSpec",
    "attached_orbit",
    "dim_rep",
    "is_speh_type",
    "minimal_eisenstein",
    "rank",
    "top_trivial_block",
    "trivial_block_at",
    "rep_from_json",
    "rep_to_json",
    "spec_from_json",
    "spec_to_json",
    "EquationReport",
    "check_dim_equation",
    "check_dim_equation_full",
    "enumerate_orbit_solutions",
    "reduce_to_whittaker_form",
    "DEFAULT_MAX_N",
    "DEFAULT_MAX_L",
    "DEFAULT_CEX_CAP",
    "VerificationReport",
    "Lemma2Case",
    "lemma2_I",
    "lemma2_reduction_cases",
    "residual_bound",
    "check_corollary1",
    "verify_lemma1",
    "verify_lemma2",
    "verify_lemma2_reduction",
    "verify_prop3",
    "verify_prop4",
    "verify_prop5",
    "verify_epsilon_orbit_claim",
    "Vanishes",
    "EquationFails",
    "NotApplicable",
    "NotConcluded",
    "Verdict",
    "vanishing_verdict",
    "verdict_to_json",
    "InvalidInputError",
    "ResourceLimitError",
]
