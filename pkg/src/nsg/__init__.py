"""Invariants, decompositions and classification of numerical semigroups."""

from .core import (
    InvariantReport,
    NumericalSemigroup,
    from_gaps,
    from_generators,
    invariant_report,
)
from .decomp import (
    Decomposition,
    XyzSplit,
    case_formulas,
    conductor_identity,
    decompose,
    reconstruct,
    xyz_split,
)
from .enumeration import (
    brute_force_by_genus,
    children,
    enumerate_by_conductor,
    enumerate_by_genus,
)
from .classify import (
    Classification,
    Match,
    classify,
    classify_b1_b2,
    example36_family,
    family_ids,
    generate_family,
)
from .ideals import (
    RelativeIdeal,
    colon_value_set_xR_m,
    dual,
    ideal_of_chain,
    length_between,
)
from .typeseq import (
    AbPartition,
    Check,
    TypeSequence,
    ab_partition,
    b_invariant,
    inequality_suite,
    k_invariant,
    type_sequence,
)
from .verify import THEOREM_IDS, VerificationReport, verify, verify_many
from . import errors

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup",
    "InvariantReport",
    "from_generators",
    "from_gaps",
    "invariant_report",
    "RelativeIdeal",
    "ideal_of_chain",
    "dual",
    "length_between",
    "colon_value_set_xR_m",
    "TypeSequence",
    "AbPartition",
    "Check",
    "type_sequence",
    "b_invariant",
    "k_invariant",
    "ab_partition",
    "inequality_suite",
    "Decomposition",
    "XyzSplit",
    "decompose",
    "xyz_split",
    "conductor_identity",
    "reconstruct",
    "case_formulas",
    "Classification",
    "Match",
    "classify",
    "classify_b1_b2",
    "generate_family",
    "example36_family",
    "family_ids",
    "enumerate_by_genus",
    "enumerate_by_conductor",
    "children",
    "brute_force_by_genus",
    "verify",
    "verify_many",
    "VerificationReport",
    "THEOREM_IDS",
    "errors",
]
