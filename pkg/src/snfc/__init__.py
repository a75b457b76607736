"""Secure computation of sums over networks: capacity bounds, code construction,
and verification with exact finite-field arithmetic."""

from .bounds import (
    BoundReport,
    ExactCapacity,
    exact_capacity,
    lower_bound,
    omega,
    primary_wiretap_sets,
    upper_bound,
    upper_bound_oracle,
    zero_capacity,
)
from .codes import (
    LiftedCode,
    MulticastCode,
    SecureCode,
    SumCode,
    build_reversed_multicast,
    choose_mixing_matrix,
    code_to_dict,
    construct,
    global_vectors,
    lift_extension,
    load_code,
    load_code_file,
    save_code,
    secure_code,
    secure_vectors,
    sum_code_from_multicast,
)
from .cuts import (
    CutReport,
    c_min,
    c_min_bar,
    is_primary,
    min_cut,
    min_cut_edge_target,
    primary_min_cut,
    residual,
)
from .gf import Field, Matrix, companion_expand, intersects_trivially, make_field, parse_field
from .network import (
    Edge,
    Network,
    is_cut_set,
    make_network,
    network_from_dict,
    parse_network,
    reach_sets,
    reduce_linear_to_sum,
    reverse,
    unreverse,
)
from .verify import (
    VerifyReport,
    check_computability,
    check_security_exhaustive,
    check_security_rank,
    verify,
)

__all__ = [
    "BoundReport",
    "CutReport",
    "Edge",
    "ExactCapacity",
    "Field",
    "LiftedCode",
    "Matrix",
    "MulticastCode",
    "Network",
    "SecureCode",
    "SumCode",
    "VerifyReport",
    "build_reversed_multicast",
    "c_min",
    "c_min_bar",
    "check_computability",
    "check_security_exhaustive",
    "check_security_rank",
    "choose_mixing_matrix",
    "code_to_dict",
    "companion_expand",
    "construct",
    "exact_capacity",
    "global_vectors",
    "intersects_trivially",
    "is_cut_set",
    "is_primary",
    "lift_extension",
    "load_code",
    "load_code_file",
    "lower_bound",
    "make_field",
    "make_network",
    "min_cut",
    "min_cut_edge_target",
    "network_from_dict",
    "omega",
    "parse_field",
    "parse_network",
    "primary_min_cut",
    "primary_wiretap_sets",
    "reach_sets",
    "reduce_linear_to_sum",
    "residual",
    "reverse",
    "save_code",
    "secure_code",
    "secure_vectors",
    "sum_code_from_multicast",
    "unreverse",
    "upper_bound",
    "upper_bound_oracle",
    "verify",
    "zero_capacity",
]

__version__ = "0.1.0"
