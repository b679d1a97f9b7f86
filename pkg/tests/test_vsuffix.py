#!/usr/bin/env python3
"""
Test module for lex-extension suffix arrays and the V-order BWT pipeline.
"""

import sys
import os
from functools import cmp_to_key

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add parent directory to path to import app modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.core.errors import EmptyString, IndexOutOfRange, SegmentMismatch
from app.core.vsuffix import (
    Comparison,
    MergeStats,
    SuffixForms,
    bwt_characters,
    bwt_direct,
    bwt_from_sa,
    bwt_incremental,
    bwt_rotations,
    compatibility_check,
    lexext_compare,
    lexext_key,
    merge_sorted_suffixes,
    suffix_array_lexext,
    suffix_array_vorder,
)
from app.core.words import Order, digits

small_words = st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=30).map(tuple)


def test_lexext_compare():
    """Test lex-extension order on block sequences."""
    print("Testing lex-extension comparison...")

    assert lexext_compare(digits("1"), digits("21")) is Order.LT
    assert lexext_compare(digits("212"), digits("12")) is Order.LT
    assert lexext_compare(digits("2"), digits("212")) is Order.LT
    assert lexext_compare(digits("212"), digits("212")) is Order.EQ
    print("✓ Maximal letter first, then blocks left to right, shorter prefix first")

    assert lexext_key(digits("2")) < lexext_key(digits("212")) < lexext_key(digits("12"))
    with pytest.raises(EmptyString):
        lexext_compare((), digits("1"))
    print("Lex-extension comparison tests passed!\n")


def test_suffix_arrays():
    """Test both suffix array flavours on a small string."""
    print("Testing suffix arrays...")

    x = digits("212")
    sa = suffix_array_lexext(x)
    assert sa.order == (3, 1, 2)
    assert sa.comparison is Comparison.LEXEXT
    assert sa.is_complete
    print("✓ Lex-extension array of 212 is 3 1 2")

    assert suffix_array_vorder(x).order == (3, 2, 1)
    assert suffix_array_vorder(x).comparison is Comparison.VORDER
    print("✓ V-order array runs from the shortest suffix up")

    part = suffix_array_lexext(x, 2, 3)
    assert part.order == (3, 2)
    assert (part.start, part.stop, part.length) == (2, 3, 3)
    assert not part.is_complete

    with pytest.raises(SegmentMismatch):
        suffix_array_lexext(x, 2, 4)
    with pytest.raises(EmptyString):
        suffix_array_lexext(())
    print("Suffix array tests passed!\n")


def test_merge():
    """Test merging adjacent ranges, including the maximal-letter fast path."""
    print("Testing suffix array merges...")

    x = digits("212")
    merged = merge_sorted_suffixes(suffix_array_lexext(x, 1, 1), suffix_array_lexext(x, 2, 3), x)
    assert merged == suffix_array_lexext(x)
    print("✓ Merge of 1..1 and 2..3 equals the direct array")

    stats = MergeStats()
    y = digits("31")
    forms = SuffixForms(y, stats)
    merged = merge_sorted_suffixes(suffix_array_lexext(y, 1, 1), suffix_array_lexext(y, 2, 2), y, forms=forms)
    assert merged.order == (2, 1)
    assert stats.fast_path == 1
    assert stats.merges == 1
    print("✓ A right suffix with a smaller maximal letter skips the full comparison")

    with pytest.raises(SegmentMismatch):
        merge_sorted_suffixes(suffix_array_lexext(x, 1, 1), suffix_array_lexext(x, 3, 3), x)
    with pytest.raises(SegmentMismatch):
        merge_sorted_suffixes(suffix_array_lexext(x, 1, 1), suffix_array_lexext(x, 2, 3), digits("2121"))
    print("Merge tests passed!\n")


def test_bwt():
    """Test the transform, its wraparound character and the incremental pipeline."""
    print("Testing the V-order BWT...")

    x = digits("212")
    result = bwt_direct(x)
    assert result.transformed == digits("122")
    assert result.primary_index == 2
    assert bwt_characters(x, (1,)) == digits("2")
    print("✓ Suffix 1 contributes the last letter")

    single = bwt_direct(digits("7"))
    assert single.transformed == digits("7") and single.primary_index == 1
    print("✓ A single letter transforms to itself")

    steps = []
    stats = MergeStats()
    assert bwt_incremental(x, on_progress=steps.append, stats=stats) == result
    assert [step.factor_end for step in steps] == [2, 3]
    assert steps[0].suffix_array.order == (1, 2)
    assert steps[0].partial_bwt == digits("22")
    assert steps[-1].suffix_array.order == (3, 1, 2)
    assert stats.merges == 1
    print("✓ Incremental pipeline reports each folded factor")

    assert bwt_rotations(x) == result
    with pytest.raises(SegmentMismatch):
        bwt_from_sa(x, suffix_array_lexext(x, 2, 3))
    with pytest.raises(EmptyString):
        bwt_incremental(())
    print("BWT tests passed!\n")


def test_compatibility():
    """Test compatibility under both comparisons."""
    print("Testing compatibility...")

    x = digits("212")
    assert compatibility_check(x, 1, 1, Comparison.VORDER)
    assert not compatibility_check(x, 1, 1, Comparison.LEXEXT)
    print("✓ 212 shows an interior lex-extension disagreement")

    assert compatibility_check(x, 1, 2)
    assert compatibility_check(x, 2, 2)
    print("✓ Ranges ending at the last factor always agree")

    for i, j in ((0, 1), (1, 3), (2, 1)):
        with pytest.raises(IndexOutOfRange):
            compatibility_check(x, i, j)
    print("Compatibility tests passed!\n")


@settings(max_examples=100, derandomize=True)
@given(small_words)
def test_pipeline_matches_direct(x):
    direct = bwt_direct(x)
    assert bwt_incremental(x) == direct
    assert sorted(direct.transformed) == sorted(x)
    by_compare = sorted(range(1, len(x) + 1), key=cmp_to_key(lambda i, j: lexext_compare(x[i - 1:], x[j - 1:]).value))
    assert suffix_array_lexext(x).order == tuple(by_compare)


@settings(max_examples=100, derandomize=True)
@given(small_words, st.integers(min_value=1, max_value=29))
def test_merge_at_any_split(x, split):
    if len(x) < 2:
        return
    split = 1 + (split - 1) % (len(x) - 1)
    merged = merge_sorted_suffixes(suffix_array_lexext(x, 1, split), suffix_array_lexext(x, split + 1), x)
    assert merged == suffix_array_lexext(x)


def main():
    """Run all suffix tests."""
    print("Running V-Order Suffix Tests...\n")

    test_lexext_compare()
    test_suffix_arrays()
    test_merge()
    test_bwt()
    test_compatibility()
    test_pipeline_matches_direct()
    test_merge_at_any_split()

    print("All suffix tests passed! 🎉")
    return 0


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
