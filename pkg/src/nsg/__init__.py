"""Minimal relations and Frobenius numbers of numerical semigroups with up
to three generators, with closed formulas cross-validated against a
brute-force oracle."""

from .arith import (
    GENERATOR_LIMIT,
    Residue,
    checked_add,
    checked_mul,
    ext_gcd,
    mod_inverse,
    mod_reduce,
)
from .errors import (
    BothZero,
    ConsistencyError,
    DegenerateGenerators,
    IdentityViolation,
    InvalidModulus,
    NotCoprime,
    NotCoprimeOverall,
    NotMinimal,
    NotPairwiseCoprime,
    NsgError,
    Overflow,
    PreconditionViolated,
)
from .frobenius import (
    FrobeniusResult,
    Method,
    ReductionStep,
    frobenius_altfrob,
    frobenius_general,
    frobenius_iterfrob,
    reduce_non_coprime,
    sylvester,
)
from .relations import (
    SCHEDULE,
    LambdaPair,
    MinimalRelations,
    MinSearchResult,
    TState,
    c_fast,
    c_min_relation,
    lambda_pair,
    minimal_relation,
    minimal_relations,
    pass_map,
    s_i_member,
    t_state,
)
from .semigroup import (
    RelationWitness,
    Triple,
    frobenius_oracle,
    gaps,
    make_triple,
    member_two_gen,
    min_relation_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "GENERATOR_LIMIT",
    "Residue",
    "checked_add",
    "checked_mul",
    "ext_gcd",
    "mod_inverse",
    "mod_reduce",
    "NsgError",
    "InvalidModulus",
    "BothZero",
    "NotCoprime",
    "Overflow",
    "NotCoprimeOverall",
    "DegenerateGenerators",
    "NotMinimal",
    "NotPairwiseCoprime",
    "PreconditionViolated",
    "IdentityViolation",
    "ConsistencyError",
    "Triple",
    "RelationWitness",
    "make_triple",
    "member_two_gen",
    "frobenius_oracle",
    "gaps",
    "min_relation_oracle",
    "SCHEDULE",
    "LambdaPair",
    "MinSearchResult",
    "MinimalRelations",
    "TState",
    "lambda_pair",
    "c_min_relation",
    "c_fast",
    "minimal_relation",
    "minimal_relations",
    "s_i_member",
    "t_state",
    "pass_map",
    "Method",
    "ReductionStep",
    "FrobeniusResult",
    "sylvester",
    "frobenius_altfrob",
    "frobenius_iterfrob",
    "reduce_non_coprime",
    "frobenius_general",
]
