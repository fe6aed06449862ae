"""Two independent expansions of the same noncommutative series, compared
coefficient by coefficient to produce exact relations between multiple zeta
values and polylogarithms at one half, with arbitrary-precision certification.
"""

from .symring import (
    Generator,
    LOG2,
    NotAdmissibleError,
    NotHomogeneousError,
    SymExpr,
    SymMonomial,
    WeightMismatchError,
    delta,
    monomial,
    sym_weight,
    zeta,
)
from .freealg import (
    A,
    B,
    DegreeTooLargeError,
    NCSeries,
    NotUnitalError,
    OrderMismatchError,
    ad_power,
    nc_coeff,
    nc_exp_letter,
    nc_inverse,
    nc_mul,
    nc_swap,
    nc_unit,
    series_to_json,
)
from .mzv_side import PQComposition, dual_composition, enumerate_pq, phi_mzv, zeta_composition
from .delta_side import iint_to_sym, index_words, phi_delta, xi_series
from .relations import (
    Comparison,
    Duality,
    KnownValue,
    Relation,
    Shuffle,
    Span,
    comparison_relations,
    duality_relations,
    extract_relations,
    iint_to_zeta,
    known_values,
    reduce,
    shuffle,
    shuffle_relations,
)
from .numeric import (
    Precision,
    eval_alt_ones,
    eval_delta,
    eval_symexpr,
    eval_zeta,
    verify_relation,
    word_dual,
)

__version__ = "0.1.0"
