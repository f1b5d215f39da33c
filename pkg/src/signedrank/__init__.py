"""Rank/unrank codecs between naturals and signed permutation groups via i-inversions."""

from .errors import DomainError, FormatError, NumberSystemOverflow, SignedRankError
from .family import GroupFamily
from .numsys import (
    DigitString, NumberSystem, RadixSequence, builtin_system, decode_digits, encode_natural,
    format_digit_string, increment_digits, parse_digit_string, validate_system, weights_from_radices,
)
from .perm import (
    SignedPermutation, apply_signed, compose, enumerate_family, format_window, identity, invert,
    is_member, parse_window, random_element,
)
from .inversions import (
    Root, act_on_root, inv, inv_i_fast, inv_i_oracle, inv_oracle, inv_vector, is_negative_root,
    positive_roots, r_value, restricted_roots,
)
from .codec import digits_of, encode_rank, insert_into_chain, rank, unrank, unrank_digits

__version__ = "0.1.0"
