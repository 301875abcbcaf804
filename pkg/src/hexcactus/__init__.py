"""Hosoya and Merrifield-Simmons indices of random hexagonal cactus chains."""
from .cactus_graph import (
    AttachmentSequence,
    AttachmentType,
    AuxVariant,
    CactusGraph,
    build_aux,
    build_chain,
    reverse_sequence,
    to_dot,
)
from .exact_count import (
    IndexKind,
    SizeLimitExceeded,
    count_brute,
    count_chain,
    count_recursive,
    hexagon_transfer,
)
from .expectation import (
    ExpectationState,
    ProbabilityTriple,
    RationalGF,
    expect_by_enumeration,
    expect_states,
    gf_closed_form,
    series_expand,
    special_case_gf,
)
from .asymptotics import PoleData, asymptotic_report, dominant_pole, pole_approx, printed_asymptotic
from .random_model import McEstimate, monte_carlo, sample_sequence, trial_stream

__version__ = "0.1.0"
