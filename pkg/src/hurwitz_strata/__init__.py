"""Exact genus-0 Hurwitz stratum degrees, double Hurwitz numbers and the
identities behind them, with a permutation-factorization oracle."""
from .errors import ConsistencyError, DomainError, ParseError, ResourceError
from .exactnum import Fraction, binomial, factorial, ipow, multinomial
from .hurwitz import (
    CoveringSpec,
    HurwitzResult,
    aut_of_list,
    closed_hurwitz,
    corollary_caustic,
    corollary_maxwell,
    degree_to_hurwitz,
    elsv_reference,
    simple_count,
)
from .moduli import (
    deg_ppsi,
    deg_pzeta,
    delta00_closed,
    delta00_split_sum,
    psi_integral,
    segre_degree,
)
from .oracle import ClassTuple, character_table, hurwitz_oracle, product_count, transitive_count
from .partitions import Partition, aut_order, enumerate_partitions, ordered_splits, parse, prod_weight
from .polys import SparsePoly
from .strata import (
    PRINTED_CAUSTIC,
    PRINTED_MAXWELL,
    RECONCILED_CAUSTIC,
    StratumKind,
    UniversalCoefficients,
    caustic_degree,
    kl_codim2,
    maxwell_degree,
    universal_degree,
    xi0sq_implied,
)

__version__ = "0.1.0"
