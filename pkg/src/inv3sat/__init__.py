"""Inverse 3-SAT: decide whether a set of assignments is exactly the
model set of some 3-CNF formula.

The pipeline builds the candidate formula (every 3-clause the input
models satisfy), saturates it under width-limited resolution, and probes
one restriction per complement-covering prefix for an assignment outside
the input set.  ``oracle_decide`` answers the same question by exhaustive
enumeration and is the reference the pipeline is validated against.
"""

from .closure import ClosureResult, contains_empty, is_closed_3limited, three_limited_closure
from .formats import (
    InputFormatError,
    format_clause,
    format_formula,
    read_dimacs,
    read_models,
    write_cover,
    write_dimacs,
    write_models,
)
from .formula import (
    CapExceeded,
    Clause,
    Cnf,
    ENUMERATION_CAP,
    InputTooSmall,
    ModelSet,
    TautologyRejected,
    cnf_of,
    enumerate_models,
    evaluate,
    mk_clause,
    resolve,
    restrict_clause,
    restrict_formula,
    subsumes,
)
from .inverse import (
    Answer,
    DecisionReport,
    PrefixCover,
    PrefixRecord,
    WitnessExtractionFailed,
    candidate_formula,
    closed_candidate_formula,
    cover_stratum,
    decide,
    extract_witness,
    model_prefixes,
    prefix_cover,
)
from .oracle import OracleVerdict, oracle_decide, verify_witness

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "CapExceeded",
    "Clause",
    "ClosureResult",
    "Cnf",
    "DecisionReport",
    "ENUMERATION_CAP",
    "InputFormatError",
    "InputTooSmall",
    "ModelSet",
    "OracleVerdict",
    "PrefixCover",
    "PrefixRecord",
    "TautologyRejected",
    "WitnessExtractionFailed",
    "candidate_formula",
    "closed_candidate_formula",
    "cnf_of",
    "contains_empty",
    "cover_stratum",
    "decide",
    "enumerate_models",
    "evaluate",
    "extract_witness",
    "format_clause",
    "format_formula",
    "is_closed_3limited",
    "mk_clause",
    "model_prefixes",
    "oracle_decide",
    "prefix_cover",
    "read_dimacs",
    "read_models",
    "resolve",
    "restrict_clause",
    "restrict_formula",
    "subsumes",
    "three_limited_closure",
    "verify_witness",
    "write_cover",
    "write_dimacs",
    "write_models",
    "__version__",
]
