"""Double-pushout graph rewriting over finite labelled directed multigraphs."""
from .errors import (
    BoundTooLarge,
    DanglingRestriction,
    DanglingViolation,
    DomainMismatch,
    DPOError,
    NonUniqueMediator,
    NotInjective,
    NotInjectiveSpan,
    ParseError,
    ValidationError,
)
from .graph import Graph, ValidationReport, Violation, empty_graph, restrict, validate_graph
from .matching import Match, check_dangling, find_matches
from .morphism import (
    Morphism,
    MorphismClass,
    classify_morphism,
    compose,
    enumerate_morphisms,
    find_isomorphism,
    identity,
    iter_morphisms,
    validate_morphism,
)
from .pushout import (
    Cocone,
    OracleBound,
    OracleResult,
    Square,
    check_commutativity,
    check_universal_property_oracle,
    deletion_square,
    derivation_squares,
    gluing_square,
    is_pushout,
    mediating_morphism,
    pushout_witness,
)
from .rewrite import (
    DeletionResult,
    DerivationTrace,
    GluingResult,
    TaggedId,
    comatch,
    delete,
    direct_derive,
    glue,
    normalize,
)
from .rule import Rule, inclusion_left, inclusion_right, invert_rule, validate_rule

__version__ = "0.1.0"
