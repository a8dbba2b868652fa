"""Symbolic solver for abstract dialectical frameworks and Boolean networks.

The solution sets of the admissible, complete, grounded, preferred,
two-valued and stable semantics are characterized as binary decision
diagrams and then counted, enumerated, or sampled exactly uniformly.
"""

from .bdd import Bdd, BddError, BddManager
from .encoding import (
    EncodingError,
    GammaPair,
    Interpretation,
    VarLayout,
    decode,
    dual_transform,
    encode_interpretation,
    formula_to_bdd,
    gamma_pairs,
    validity_constraint,
)
from .formula import (
    Adf,
    And,
    Const,
    Formula,
    FormatError,
    Iff,
    Imp,
    Not,
    Or,
    ParseError,
    RewriteBudgetError,
    Var,
    Xor,
    parse_adf,
    parse_bnet,
    write_adf,
    write_bnet,
)
from .semantics import (
    SEMANTICS,
    SolutionSet,
    admissible,
    complete,
    embed_two_valued,
    grounded,
    grounded_set,
    preferred,
    restrict_free_inputs,
    solve,
    stable,
    two_valued_models,
)
from .solutions import count, enumerate_solutions, sample_uniform

__version__ = "0.1.0"

__all__ = [
    "Adf",
    "And",
    "Bdd",
    "BddError",
    "BddManager",
    "Const",
    "EncodingError",
    "Formula",
    "FormatError",
    "GammaPair",
    "Iff",
    "Imp",
    "Interpretation",
    "Not",
    "Or",
    "ParseError",
    "RewriteBudgetError",
    "SEMANTICS",
    "SolutionSet",
    "Var",
    "VarLayout",
    "Xor",
    "admissible",
    "complete",
    "count",
    "decode",
    "dual_transform",
    "embed_two_valued",
    "encode_interpretation",
    "enumerate_solutions",
    "formula_to_bdd",
    "gamma_pairs",
    "grounded",
    "grounded_set",
    "parse_adf",
    "parse_bnet",
    "preferred",
    "restrict_free_inputs",
    "sample_uniform",
    "solve",
    "stable",
    "two_valued_models",
    "validity_constraint",
    "write_adf",
    "write_bnet",
]
