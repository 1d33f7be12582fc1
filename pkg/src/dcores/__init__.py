"""Simultaneous core partitions with d-distinct parts."""
from .beta_search import (
    EnumerationQuery,
    EnumerationResult,
    derive_bound,
    enumerate_bruteforce,
    enumerate_general,
    enumerate_query,
    enumerate_s_splusr,
    enumerate_ss1,
    run_query,
)
from .errors import CoordinateError, EngineDisagreement, ParameterError, UnboundedError
from .formulas import (
    anderson_count,
    conjectured_count,
    count_ss1,
    largest_size_ss1,
    maximal_partitions_ss1,
    num_largest_ss1,
    straub_count,
)
from .gf import IntPolynomial, RationalGF, gf_equal, gf_from_recurrence, series_coefficients
from .partition_core import (
    BetaSet,
    CoreSpec,
    Partition,
    beta_set,
    hook_length,
    is_core,
    is_core_via_beta,
    is_d_distinct,
    is_twin_free,
    partition_from_beta_set,
    size_from_beta_set,
)

__version__ = "0.1.0"
