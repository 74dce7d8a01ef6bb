"""Free bialgebra on a partitioned alphabet, its matrix-representation
calculus, and recognizable series with Hankel-rank learning."""

from .errors import (
    DomainError,
    HopfwordsError,
    InconclusiveError,
    InternalInvariantError,
    ParseError,
)
from .freealg import (
    Alphabet,
    Letter,
    LetterKind,
    NCPoly,
    Tensor2,
    Tensor3,
    Word,
    antipode,
    coassoc_lhs,
    coassoc_rhs,
    conc,
    coproduct,
    coproduct_multiplicative,
    coproduct_word,
    counit,
    poly_mul,
    splittings,
    tensor2_mul,
)
from .linalg import Matrix
from .rep import (
    MatRep,
    direct_sum,
    dual_action,
    eval_rep,
    eval_word,
    pairing_invariance_check,
    tensor_rep,
    trivial_rep,
)
from .dualforms import (
    FiniteSupportSeries,
    RecognizableSeries,
    Series,
    coefficients_agree,
    convolve,
    dual_unit,
    pair,
)
from .sweedler import (
    HankelSlice,
    LinRep,
    behavior,
    behavior_table,
    conv_rep,
    dual_counit,
    embed_finite,
    hankel,
    hankel_rank,
    learn,
    rep_sum,
    reps_equal,
    scale_rep,
    shift_left,
    shift_right,
    split,
    transpose_antipode,
    zero_rep,
)

__all__ = [
    "Alphabet",
    "DomainError",
    "FiniteSupportSeries",
    "HankelSlice",
    "HopfwordsError",
    "InconclusiveError",
    "InternalInvariantError",
    "Letter",
    "LetterKind",
    "LinRep",
    "MatRep",
    "Matrix",
    "NCPoly",
    "ParseError",
    "RecognizableSeries",
    "Series",
    "Tensor2",
    "Tensor3",
    "Word",
    "antipode",
    "behavior",
    "behavior_table",
    "coassoc_lhs",
    "coassoc_rhs",
    "coefficients_agree",
    "conc",
    "conv_rep",
    "convolve",
    "coproduct",
    "coproduct_multiplicative",
    "coproduct_word",
    "counit",
    "direct_sum",
    "dual_action",
    "dual_counit",
    "dual_unit",
    "embed_finite",
    "eval_rep",
    "eval_word",
    "hankel",
    "hankel_rank",
    "learn",
    "pair",
    "pairing_invariance_check",
    "poly_mul",
    "rep_sum",
    "reps_equal",
    "scale_rep",
    "shift_left",
    "shift_right",
    "split",
    "splittings",
    "tensor2_mul",
    "tensor_rep",
    "transpose_antipode",
    "trivial_rep",
    "zero_rep",
]
