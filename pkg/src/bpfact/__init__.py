"""Smallest and largest block-palindrome factorizations of words."""

from bpfact.enumeration import (
    LimitEstimate,
    estimate_E_limit,
    estimate_P_limit,
    expected_width,
    ib_count,
    ib_table,
    max_smallest_width,
    max_width_witness,
    unbordered_count,
    unique_border_count,
    unique_border_count_t,
    unique_border_probability,
)
from bpfact.factorization import (
    BPFactorization,
    EmptyWordError,
    all_bpfs,
    characterization_holds,
    coincide,
    largest_bpf,
    reconstruct,
    smallest_bpf,
    validate,
)
from bpfact.words import (
    border_array,
    borders,
    has_unique_border,
    is_palindrome,
    is_unbordered,
    longest_nonoverlapping_border,
    shortest_border,
)

__version__ = "0.1.0"
