"""Regular-tournament extensions of arbitrary tournaments."""

from .core import (
    TYPE_I,
    TYPE_II,
    DegreeTriple,
    Tournament,
    TournamentError,
    TypeWitness,
    are_isomorphic,
    build,
    certify_type,
    cycle3,
    degrees,
    induced,
    invert,
    is_regular,
    score_sequence,
    transitive,
    validate_tournament_matrix,
)
from .constructions import (
    ConstructionTrace,
    ExtensionResult,
    embed_regular,
    embed_type1,
    embed_type2,
    greedy_type2,
    pad_to_order,
    plus_two,
)
from .galeryser import feasible, realize01
from .scores import (
    ConditionFlags,
    enumerate_scores,
    evaluate_conditions,
    griggs_reid_step,
    is_landau,
    prec,
    r_of,
    realize,
)

__all__ = [
    "TYPE_I", "TYPE_II", "DegreeTriple", "Tournament", "TournamentError", "TypeWitness",
    "are_isomorphic", "build", "certify_type", "cycle3", "degrees", "induced", "invert",
    "is_regular", "score_sequence", "transitive", "validate_tournament_matrix",
    "ConstructionTrace", "ExtensionResult", "embed_regular", "embed_type1", "embed_type2",
    "greedy_type2", "pad_to_order", "plus_two", "feasible", "realize01",
    "ConditionFlags", "enumerate_scores", "evaluate_conditions", "griggs_reid_step",
    "is_landau", "prec", "r_of", "realize",
]

__version__ = "0.1.0"
