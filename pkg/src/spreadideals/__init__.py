"""Exact invariants of squarefree and t-spread monomial ideals."""

from ._validation import DomainError, ParseError
from .monomials import (
    Monomial,
    binomial,
    count_t_spread,
    enumerate_t_spread,
    is_t_spread,
    lcm,
    max_index,
    max_t_spread_degree,
    slex_compare,
    slex_key,
    t_shadow,
)
from .ideals import (
    FtVector,
    MonomialIdeal,
    alexander_dual,
    bcos,
    ci_invariants,
    cosize,
    ft_vector,
    is_regular_sequence,
    is_t_spread_ideal,
    is_t_spread_lexsegment,
    is_t_spread_strongly_stable,
    minimal_transversals,
    minimalize,
    pd_bound,
    reg_bound,
    reg_bound_degree_at_most_d,
    reg_bound_tspread,
    strongly_stable_invariants,
    support_index,
    support_index_by_scan,
    t_spread_part,
)
from .resolutions import (
    BettiTable,
    GradedComplex,
    SimplicialComplex,
    betti_table,
    complex_to_ideal,
    depth_of,
    extremal_betti,
    koszul_complex,
    pd,
    reg,
    stanley_reisner_complex,
    taylor_complex,
)
from .tspread import (
    HilbertSeries,
    PascalIdeal,
    TLexCompanion,
    hilbert_function,
    hilbert_series,
    hilbert_series_ci,
    max_reg_witness,
    pascal_ft_vector,
    pascal_hilbert_series,
    pascal_ideal,
    pascal_tlex,
    pascal_total_betti,
    shadow_discrepancy,
    tlex_companion_exists,
)
from .graphs import (
    Graph,
    corollary_graph,
    edge_ideal,
    forest_regularity,
    induced_matching_number,
    is_forest,
)

__version__ = "0.1.0"
