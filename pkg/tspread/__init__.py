"""
tspread

Combinatorics of t-spread monomials: Macaulay expansions, the t-spread
successor operator, shadows, the t-spread lex ideal I^tlex and the
Kruskal-Katona type feasibility test for f_t-vectors.
"""

__version__ = "0.1.0"

from tspread.errors import (
    ConfigError,
    DomainError,
    FormatError,
    InfeasibleError,
    SizeGuardError,
    TSpreadError,
)
from tspread.expansion import (
    MacaulayExpansion,
    binom,
    classic_successor,
    count_tspread,
    macaulay_expand,
    segment_boundary,
    successor_case,
    t_successor,
    t_successor_closed_form,
)
from tspread.ideal import (
    FtVector,
    TlexResult,
    TlexStep,
    TlexTrace,
    TSpreadIdeal,
    d_max,
    ft_vector,
    graded_part,
    ideal_from_lex_sizes,
    is_lex_ideal,
    is_strongly_stable_ideal,
    minimalize,
    strongly_stable_closure,
    tlex,
)
from tspread.kk import (
    BoundRow,
    FeasibilityReport,
    Violation,
    enumerate_feasible,
    kk_check,
    kk_witness,
)
from tspread.lexset import (
    LexSegment,
    MaxIndexProfile,
    complement_count,
    exchange_graph,
    exchange_images,
    is_lex_set,
    is_strongly_stable_set,
    lex_segment_of,
    materialize,
    max_index_profile,
    monomial_from_complement_count,
    shadow,
    shadow_size_by_formula,
)
from tspread.monomial import (
    Monomial,
    MonomialSet,
    divides,
    enumerate_tspread,
    is_t_spread,
    iter_tspread,
    lex_compare,
)
