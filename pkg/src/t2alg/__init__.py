"""Exact truth-value algebra on piecewise-affine membership functions.

The carrier is the set of normal convex functions from [0, 1] to
[0, 1], represented exactly with rational breakpoints and affine
segments.  The package provides the lattice operations (meet, join,
negation), running-supremum envelopes, closed-form star and diamond
constructions, convolution engines lifting scalar t-norms and
t-conorms, and an axiom laboratory that classifies operations by the
algebraic laws they satisfy.
"""

from .constructions import (
    StarResult,
    diamond,
    diamond_envelopes,
    star,
    star_envelopes,
    unit_singleton,
)
from .convolution import (
    ENGINES,
    ConvSpec,
    GridValue,
    as_interval_indicator,
    convolve,
    grid_oracle,
    star_has_tnorm_corners,
)
from .envelope import (
    EnvelopeKind,
    envelope,
    is_convex,
    is_normal,
    plateau,
    require_member,
)
from .axiom_lab import (
    AXIOM_IDS,
    CASE_IDS,
    OP_REGISTRY,
    AxiomReport,
    Classification,
    GenConfig,
    ReproReport,
    T2Op,
    Witness,
    check_axiom,
    classify,
    gen_comparable_pair,
    gen_normal_convex,
    render_axiom_report,
    render_classification,
    render_repro_report,
    reproduce,
    resolve_op,
)
from .pwfn import (
    Affine,
    PWFn,
    PwfDomainError,
    PwfError,
    PwfSyntaxError,
    canonical_equal,
    constant,
    indicator,
    parse_pwf,
    parse_pwf_document,
    parse_rational,
    serialize_pwf,
    sup_on,
)
from .scalar_ops import (
    BUILTIN_NAMES,
    PwfGridClaimError,
    ScalarAxiomReport,
    ScalarOp,
    builtin,
    check_scalar_axioms,
    section_continuity_scan,
)
from .truth_lattice import LEQ_METHODS, join, leq, meet, negate, pointwise_leq

__all__ = [
    "AXIOM_IDS",
    "Affine",
    "AxiomReport",
    "BUILTIN_NAMES",
    "CASE_IDS",
    "Classification",
    "ConvSpec",
    "ENGINES",
    "EnvelopeKind",
    "GenConfig",
    "GridValue",
    "LEQ_METHODS",
    "OP_REGISTRY",
    "PWFn",
    "PwfDomainError",
    "PwfError",
    "PwfGridClaimError",
    "PwfSyntaxError",
    "ReproReport",
    "ScalarAxiomReport",
    "ScalarOp",
    "StarResult",
    "T2Op",
    "Witness",
    "as_interval_indicator",
    "builtin",
    "canonical_equal",
    "check_axiom",
    "check_scalar_axioms",
    "classify",
    "constant",
    "convolve",
    "diamond",
    "diamond_envelopes",
    "envelope",
    "gen_comparable_pair",
    "gen_normal_convex",
    "grid_oracle",
    "indicator",
    "is_convex",
    "is_normal",
    "join",
    "leq",
    "meet",
    "negate",
    "parse_pwf",
    "parse_pwf_document",
    "parse_rational",
    "plateau",
    "pointwise_leq",
    "render_axiom_report",
    "render_classification",
    "render_repro_report",
    "reproduce",
    "require_member",
    "resolve_op",
    "section_continuity_scan",
    "serialize_pwf",
    "star",
    "star_envelopes",
    "star_has_tnorm_corners",
    "sup_on",
    "unit_singleton",
]

__version__ = "0.1.0"
