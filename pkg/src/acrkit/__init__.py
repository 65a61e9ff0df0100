"""acrkit: structural analysis and absolute concentration robustness for mass-action networks."""

from .decide import (
    AcrVerdict,
    SFCriterionReport,
    Status,
    decide,
    decide_one_dimensional,
    decide_one_species,
    decide_two_reactions,
    positive_steady_state_exists,
    shinar_feinberg_criterion,
)
from .embedding import (
    Arrow,
    ArrowDiagram,
    ArrowPattern,
    EmbeddedNetwork,
    arrow_diagram,
    classify_arrow_pattern,
    embed,
    has_two_alternating_subnetwork,
    project,
    two_alternating_witness,
)
from .errors import *  # noqa: F401,F403
from .graph import LinkageReport, ReactionGraph, build_reaction_graph, deficiency, linkage_report
from .linalg import RationalMatrix
from .network import (
    ConservationBasis,
    Network,
    Reaction,
    Species,
    catalyst_only_species,
    conservation_basis,
    enumerate_networks,
    is_one_dimensional,
    is_one_species,
    network,
    parse_network,
    prune_inert,
    render_network,
    stoichiometric_dimension,
    stoichiometric_matrix,
    union,
)
from .operations import (
    Duplicate,
    Family,
    OperationTrace,
    PartialScale,
    RateConstantMap,
    Relabel,
    Stretch,
    Translate,
    apply,
    apply_trace,
    canonicalize,
    canonicalize_one_species_two_reactions,
    canonicalize_two_species_two_reactions,
    degenerate_acr,
    generalized_sf,
    invert_trace,
    ode_effect,
    rotation_metrics,
    zero_to_ma,
)

__version__ = "0.1.0"
