"""May-must and condition-table argumentation on a shared attack-graph substrate.

Two ways of attaching local labelling instructions to an attack graph:
per-argument may/must threshold scales, and explicit per-row condition
tables.  The package computes their exact and grounded semantics, the
concretisation and abstraction maps between the two, and the acceptance
facts an abstraction certifies about the frameworks it abstracts.
"""

from .adf import (
    DEFAULT_MAX_ATTACKERS,
    AdfFramework,
    ConditionTable,
    designation_adf,
    is_exact_adf,
    is_proper_adf,
    label_vectors,
)
from .core import (
    LABELS,
    AttackGraph,
    Label,
    Labelling,
    LabellingSet,
    labelling_leq,
    maximal_completions,
)
from .errors import (
    DomainMismatchError,
    GraphMismatchError,
    MayMustError,
    NonMonotoneStepError,
    ParseError,
    ResourceCapError,
    UnknownArgumentError,
)
from .fileformat import parse, serialize
from .galois import (
    ConcretisationCount,
    ScaleCandidateSet,
    TransferFact,
    TransferReport,
    allowed_labels,
    canonical_concretisation,
    count_concretisations,
    enumerate_concretisations,
    f_alpha,
    f_gamma,
    framework_leq,
    is_abstraction,
    is_concretisation,
    label_one_exact,
    minimal_abstractions,
    nuance_leq,
    pareto_minimal,
    set_leq,
    tightest_scale,
    transfer_report,
    valid_scales,
)
from .mma import (
    DESIGNATION_CELLS,
    ConditionClass,
    MayMustScale,
    MmaFramework,
    NuanceTuple,
    classify,
    classify_counts,
    count_labelled,
    designation_cell,
    designation_for_counts,
    designations_mma,
    is_exact_mma,
    is_proper_mma,
    scale_warnings,
)
from .semantics import (
    DEFAULT_MAX_ARGS,
    AcceptanceMode,
    Framework,
    SemanticsKind,
    accepted,
    designation_set,
    exact_semantics,
    grounded,
    grounded_iteration,
    is_exact,
    semantics_labellings,
    theta,
)

__all__ = [
    "AcceptanceMode",
    "AdfFramework",
    "AttackGraph",
    "ConcretisationCount",
    "ConditionClass",
    "ConditionTable",
    "DESIGNATION_CELLS",
    "DEFAULT_MAX_ARGS",
    "DEFAULT_MAX_ATTACKERS",
    "DomainMismatchError",
    "Framework",
    "GraphMismatchError",
    "LABELS",
    "Label",
    "Labelling",
    "LabellingSet",
    "MayMustError",
    "MayMustScale",
    "MmaFramework",
    "NonMonotoneStepError",
    "NuanceTuple",
    "ParseError",
    "ResourceCapError",
    "ScaleCandidateSet",
    "SemanticsKind",
    "TransferFact",
    "TransferReport",
    "UnknownArgumentError",
    "accepted",
    "allowed_labels",
    "canonical_concretisation",
    "classify",
    "classify_counts",
    "count_concretisations",
    "count_labelled",
    "designation_adf",
    "designation_cell",
    "designation_for_counts",
    "designation_set",
    "designations_mma",
    "enumerate_concretisations",
    "exact_semantics",
    "f_alpha",
    "f_gamma",
    "framework_leq",
    "grounded",
    "grounded_iteration",
    "is_abstraction",
    "is_concretisation",
    "is_exact",
    "is_exact_adf",
    "is_exact_mma",
    "is_proper_adf",
    "is_proper_mma",
    "label_one_exact",
    "label_vectors",
    "labelling_leq",
    "maximal_completions",
    "minimal_abstractions",
    "nuance_leq",
    "pareto_minimal",
    "parse",
    "scale_warnings",
    "semantics_labellings",
    "serialize",
    "set_leq",
    "theta",
    "tightest_scale",
    "transfer_report",
    "valid_scales",
]
