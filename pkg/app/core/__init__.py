"""
Core functionality for the V-Order Toolkit.

This package contains the string algorithms: alphabets and words, V-form
decomposition, the V-order comparators and streams, V-word factorization,
lex-extension suffix arrays and the V-order Burrows-Wheeler transform.
"""

from .errors import EmptyString, IndexOutOfRange, InvalidAlphabet, SegmentMismatch, UnknownSymbol, VOrderError
from .words import Alphabet, Order, Word, bind, digits
from .vform import VForm, reassemble, vform
from .vcompare import (
    COMPARATORS,
    PrefixStream,
    SuffixStream,
    WorkCounter,
    compare_input_sensitive,
    compare_sort_key,
    compare_star_oracle,
    compare_streams,
    compare_vform,
    prefix_stream_push,
    star_delete,
    star_path,
    subsequence_precedes,
    suffix_stream_push,
    vorder_key,
)
from .vfactor import Factorization, FactorCase, VFactorizer, factorize, is_hybrid_lyndon, is_vword, vf_case
from .vsuffix import (
    BwtResult,
    Comparison,
    SuffixArray,
    bwt_direct,
    bwt_from_sa,
    bwt_incremental,
    bwt_rotations,
    compatibility_check,
    lexext_compare,
    merge_sorted_suffixes,
    suffix_array_lexext,
    suffix_array_vorder,
)
from .toolkit import VOrderToolkit

__all__ = [
    "Alphabet", "BwtResult", "COMPARATORS", "Comparison", "EmptyString", "FactorCase", "Factorization",
    "IndexOutOfRange", "InvalidAlphabet", "Order", "PrefixStream", "SegmentMismatch", "SuffixArray",
    "SuffixStream", "UnknownSymbol", "VFactorizer", "VForm", "VOrderError", "VOrderToolkit", "Word",
    "WorkCounter", "bind", "bwt_direct", "bwt_from_sa", "bwt_incremental", "bwt_rotations",
    "compare_input_sensitive", "compare_sort_key", "compare_star_oracle", "compare_streams", "compare_vform",
    "compatibility_check", "digits", "factorize", "is_hybrid_lyndon", "is_vword", "lexext_compare",
    "merge_sorted_suffixes", "prefix_stream_push", "reassemble", "star_delete", "star_path",
    "subsequence_precedes", "suffix_array_lexext", "suffix_array_vorder", "suffix_stream_push", "vf_case",
    "vform", "vorder_key",
]
