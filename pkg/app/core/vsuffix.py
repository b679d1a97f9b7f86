"""
Suffix sorting and the V-order Burrows-Wheeler transform.

Suffixes of any string are already totally V-ordered by length, so the
interesting order here is lex-extension: maximal letters first, then the
V-form block sequences compared left to right with each block pair
compared in V-order. A shorter block sequence that is a prefix of a longer
one comes first, which stands in for a sentinel letter.

A suffix array always records 1-based start positions of one string x and
may cover only a contiguous range of starts; it is sorted by the full
suffixes of x, so two adjacent ranges merge into the array of their union.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import EmptyString, IndexOutOfRange, SegmentMismatch
from .vcompare import compare_vform, vorder_key
from .vfactor import VFactorizer, factorize
from .vform import VForm, vform
from .words import Order, Word

logger = logging.getLogger(__name__)


class Comparison(Enum):
    VORDER = "vorder"
    LEXEXT = "lexext"


@dataclass(frozen=True)
class SuffixArray:
    """Sorted 1-based start positions ``start..stop`` of a length-``length`` string."""

    order: Tuple[int, ...]
    comparison: Comparison
    length: int
    start: int = 1
    stop: int = 0

    def __post_init__(self):
        if self.stop == 0:
            object.__setattr__(self, "stop", self.length)

    @property
    def is_complete(self) -> bool:
        return self.start == 1 and self.stop == self.length


@dataclass(frozen=True)
class BwtResult:
    transformed: Word
    primary_index: int


@dataclass
class MergeStats:
    merges: int = 0
    comparisons: int = 0
    fast_path: int = 0


@dataclass(frozen=True)
class PipelineStep:
    """Progress report after one more factor has been folded in."""

    factor_index: int
    factor_end: int
    suffix_array: SuffixArray
    partial_bwt: Word


def _compare_forms(form_x: VForm, form_y: VForm) -> Order:
    if form_x.max_letter != form_y.max_letter:
        return Order.of(form_x.max_letter, form_y.max_letter)
    for block_x, block_y in zip(form_x.blocks, form_y.blocks):
        if block_x != block_y:
            return compare_vform(block_x, block_y)
    return Order.of(len(form_x.blocks), len(form_y.blocks))


def lexext_compare(x: Sequence[int], y: Sequence[int]) -> Order:
    """Lex-extension comparison of two nonempty words.

    Raises:
        EmptyString: If either word is empty
    """
    if not x or not y:
        raise EmptyString("lexext_compare")
    return _compare_forms(vform(x), vform(y))


def lexext_key(x: Sequence[int]) -> tuple:
    """Sort key whose native tuple order is lex-extension order."""
    form = vform(x)
    return (form.max_letter, tuple(vorder_key(block) for block in form.blocks))


class SuffixForms:
    """Lazily cached V-forms of the suffixes of one string."""

    def __init__(self, x: Sequence[int], stats: Optional[MergeStats] = None):
        self.x: Word = tuple(x)
        self.stats = stats if stats is not None else MergeStats()
        self._forms: Dict[int, VForm] = {}
        suffix_max = [0] * (len(self.x) + 1)
        running = -1
        for i in range(len(self.x) - 1, -1, -1):
            running = max(running, self.x[i])
            suffix_max[i] = running
        self.suffix_max = suffix_max

    def form(self, start: int) -> VForm:
        if start not in self._forms:
            self._forms[start] = vform(self.x[start - 1:])
        return self._forms[start]

    def compare(self, i: int, j: int) -> Order:
        """Lex-extension order of the suffixes starting at 1-based i and j."""
        self.stats.comparisons += 1
        return _compare_forms(self.form(i), self.form(j))

    def compare_across(self, left: int, right: int) -> Order:
        """Like :meth:`compare` for ``left < right``.

        The right suffix is a proper suffix of the left one, so its maximal
        letter can only be smaller or equal; smaller settles the order.
        """
        if self.suffix_max[right - 1] < self.suffix_max[left - 1]:
            self.stats.fast_path += 1
            return Order.GT
        return self.compare(left, right)


def _check_nonempty(x: Sequence[int], operation: str) -> Word:
    if not x:
        raise EmptyString(operation)
    return tuple(x)


def suffix_array_vorder(x: Sequence[int]) -> SuffixArray:
    """V-order suffix array, which is always n, n-1, ..., 1."""
    x = _check_nonempty(x, "suffix_array_vorder")
    return SuffixArray(order=tuple(range(len(x), 0, -1)), comparison=Comparison.VORDER, length=len(x))


def suffix_array_lexext(x: Sequence[int], start: int = 1, stop: Optional[int] = None,
                        forms: Optional[SuffixForms] = None) -> SuffixArray:
    """Lex-extension suffix array of x, optionally restricted to starts start..stop.

    Raises:
        EmptyString: If ``x`` is empty
        SegmentMismatch: If the start range does not lie inside x
    """
    x = _check_nonempty(x, "suffix_array_lexext")
    stop = len(x) if stop is None else stop
    if not 1 <= start <= stop <= len(x):
        raise SegmentMismatch(f"Start range {start}..{stop} outside 1..{len(x)}")
    forms = forms if forms is not None else SuffixForms(x)
    order = sorted(range(start, stop + 1), key=cmp_to_key(lambda i, j: forms.compare(i, j).value))
    return SuffixArray(order=tuple(order), comparison=Comparison.LEXEXT, length=len(x), start=start, stop=stop)


def bwt_characters(x: Sequence[int], starts: Sequence[int]) -> Word:
    """The letter preceding each suffix, wrapping to x[n] for the whole string."""
    return tuple(x[h - 2] for h in starts)


def bwt_from_sa(x: Sequence[int], sa: SuffixArray) -> BwtResult:
    """Transform read off a complete suffix array.

    Raises:
        SegmentMismatch: If the array was not built over all of x
    """
    if sa.length != len(x) or not sa.is_complete or len(sa.order) != len(x):
        raise SegmentMismatch(f"Suffix array over {sa.start}..{sa.stop} of {sa.length} letters does not cover a string of length {len(x)}")
    return BwtResult(transformed=bwt_characters(x, sa.order), primary_index=sa.order.index(1) + 1)


def merge_sorted_suffixes(left: SuffixArray, right: SuffixArray, x: Sequence[int],
                          forms: Optional[SuffixForms] = None) -> SuffixArray:
    """Merge the arrays of two adjacent start ranges into one.

    Raises:
        SegmentMismatch: If the ranges are not adjacent, belong to different
            strings, or were sorted under different comparisons
    """
    x = tuple(x)
    if left.length != len(x) or right.length != len(x):
        raise SegmentMismatch(f"Arrays over {left.length} and {right.length} letters cannot merge over {len(x)}")
    if left.stop + 1 != right.start:
        raise SegmentMismatch(f"Ranges {left.start}..{left.stop} and {right.start}..{right.stop} are not adjacent")
    if left.comparison is not Comparison.LEXEXT or right.comparison is not Comparison.LEXEXT:
        raise SegmentMismatch("Only lex-extension arrays are merged")

    forms = forms if forms is not None else SuffixForms(x)
    forms.stats.merges += 1
    merged: List[int] = []
    i = j = 0
    while i < len(left.order) and j < len(right.order):
        if forms.compare_across(left.order[i], right.order[j]) is Order.LT:
            merged.append(left.order[i])
            i += 1
        else:
            merged.append(right.order[j])
            j += 1
    merged.extend(left.order[i:])
    merged.extend(right.order[j:])
    return SuffixArray(order=tuple(merged), comparison=Comparison.LEXEXT, length=len(x),
                       start=left.start, stop=right.stop)


def bwt_direct(x: Sequence[int]) -> BwtResult:
    """Sort every suffix at once, then read the transform."""
    return bwt_from_sa(x, suffix_array_lexext(x))


class IncrementalBwt:
    """Folds factors into a running suffix array as the factorizer reports them.

    Each factor's starts are sorted on their own and merged into the array
    of everything to their left, so work starts with the first factor.
    """

    def __init__(self, x: Sequence[int], on_progress: Optional[Callable[[PipelineStep], None]] = None,
                 stats: Optional[MergeStats] = None):
        self.x = _check_nonempty(x, "bwt_incremental")
        self.on_progress = on_progress
        self.forms = SuffixForms(self.x, stats)
        self.running: Optional[SuffixArray] = None
        self.factors_seen = 0

    def fold(self, factor: Word, end: int) -> None:
        begin = end - len(factor) + 1
        segment = suffix_array_lexext(self.x, begin, end, forms=self.forms)
        if self.running is None:
            self.running = segment
        else:
            self.running = merge_sorted_suffixes(self.running, segment, self.x, forms=self.forms)
        self.factors_seen += 1
        logger.debug(f"Folded factor {self.factors_seen} ending at {end}")
        if self.on_progress is not None:
            self.on_progress(PipelineStep(self.factors_seen, end, self.running,
                                          bwt_characters(self.x, self.running.order)))

    def run(self) -> BwtResult:
        factorizer = VFactorizer(on_factor=self.fold)
        for letter in self.x:
            factorizer.push(letter)
        factorizer.finish()
        return bwt_from_sa(self.x, self.running)


def bwt_incremental(x: Sequence[int], on_progress: Optional[Callable[[PipelineStep], None]] = None,
                    stats: Optional[MergeStats] = None) -> BwtResult:
    """Factor-by-factor suffix sorting and transform.

    Raises:
        EmptyString: If ``x`` is empty
    """
    return IncrementalBwt(x, on_progress=on_progress, stats=stats).run()


def bwt_rotations(x: Sequence[int]) -> BwtResult:
    """Last column of the lex-extension sorted rotation matrix.

    Equal rotations keep their original relative order.
    """
    x = _check_nonempty(x, "bwt_rotations")
    rotated = [x[i:] + x[:i] for i in range(len(x))]
    order = sorted(range(len(x)), key=cmp_to_key(lambda i, j: lexext_compare(rotated[i], rotated[j]).value))
    return BwtResult(transformed=tuple(x[i - 1] for i in order), primary_index=order.index(0) + 1)


def compatibility_check(x: Sequence[int], i: int, j: int, comparison: Comparison = Comparison.LEXEXT) -> bool:
    """Whether suffixes of u = factors i..j order the same inside u and inside x.

    Raises:
        EmptyString: If ``x`` is empty
        IndexOutOfRange: Unless 1 <= i <= j <= number of factors
    """
    x = _check_nonempty(x, "compatibility_check")
    factorization = factorize(x)
    k = len(factorization)
    for index in (i, j):
        if not 1 <= index <= k:
            raise IndexOutOfRange(index, k)
    if i > j:
        raise IndexOutOfRange(i, j)

    compare = lexext_compare if comparison is Comparison.LEXEXT else compare_vform
    begin, end = factorization.span(i, j)
    u = x[begin - 1:end]
    for p in range(len(u)):
        for q in range(p + 1, len(u)):
            inner = compare(u[p:], u[q:])
            outer = compare(x[begin - 1 + p:], x[begin - 1 + q:])
            if inner is not outer:
                logger.debug(f"Suffixes at {begin + p} and {begin + q} order {inner} in factors {i}..{j} but {outer} in x")
                return False
    return True
