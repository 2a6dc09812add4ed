"""Exact iterated elimination of dominated strategies in finite games."""

from .errors import (
    AssumptionViolated,
    CyclicSystem,
    DegenerateDominator,
    DomelimError,
    GameParseError,
    InvalidCertificate,
    StructuralError,
    UnsupportedConfiguration,
)
from .game import (
    Belief,
    BeliefMode,
    CorrelatedBelief,
    Game,
    JointPureBelief,
    MixedProfileBelief,
    MixedStrategy,
    Restriction,
    expected_payoff,
    payoff_pure,
    restriction_leq,
)
from .lp import (
    LinearProgram,
    LpOutcome,
    best_response_feasible,
    max_min_advantage,
    solve,
)
from .dominance import (
    GlobalNeverBestResponse,
    GlobalStrictMixed,
    GlobalStrictPure,
    Inherent,
    Intersection,
    NeverBestResponse,
    Relation,
    StrictMixed,
    StrictPure,
    dominated_set,
    is_dominated,
    is_inherently_dominated,
    parse_relation,
    persist_dominator,
    renormalize_without,
    strictly_dominates_pure,
    substitute,
    verify_certificate,
    weakly_dominates_pure,
)
from .reduction import (
    AllSubsets,
    FullSpeed,
    OrderPolicy,
    ReductionStep,
    SingleLex,
    SingleRandom,
    Trace,
    all_outcomes,
    check_hereditary_step,
    check_monotonic_pair,
    check_proof_shape,
    normal_form,
    successors,
)
from .ars import (
    FiniteArs,
    ars_is_weakly_confluent,
    ars_normal_forms,
    ars_unique_nf,
    newman_experiment,
    random_dag,
)
from .gamefile import parse_game, write_game

__all__ = [name for name in dir() if not name.startswith("_")]
