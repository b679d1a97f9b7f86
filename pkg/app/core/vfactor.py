"""
V-words and the on-line V-order factorization.

A V-word is the strict minimum, in V-order, of its conjugacy class. Any
string splits into V-words by repeatedly taking the longest V-word prefix
of what remains, the V-order counterpart of the Lyndon factorization.

A V-word longer than one letter always starts with its maximal letter, so
the factor beginning at letter c can never run past the first later letter
above c. That bound lets ``VFactorizer`` report each factor as soon as
such a letter arrives instead of waiting for the end of the input.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import EmptyString
from .vcompare import compare_vform
from .vform import vform
from .words import Order, Word

logger = logging.getLogger(__name__)

FactorCallback = Callable[[Word, int], None]


@dataclass(frozen=True)
class Factorization:
    """Factors in order, each with its 1-based rightmost position."""

    factors: Tuple[Word, ...]
    ends: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def starts(self) -> Tuple[int, ...]:
        return tuple(end - len(factor) + 1 for factor, end in zip(self.factors, self.ends))

    def span(self, i: int, j: int) -> Tuple[int, int]:
        """1-based start and end positions of factors i..j (1-based, inclusive)."""
        return self.starts[i - 1], self.ends[j - 1]


class CaseTag(Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    EQUAL = "EQUAL"


@dataclass(frozen=True)
class FactorCase:
    tag: CaseTag
    consequence: str
    joinable: bool


def rotations(w: Sequence[int]):
    w = tuple(w)
    for i in range(1, len(w)):
        yield w[i:] + w[:i]


def is_vword(w: Sequence[int]) -> bool:
    """True iff ``w`` precedes every other rotation of itself in V-order.

    Raises:
        EmptyString: If ``w`` is empty
    """
    if not w:
        raise EmptyString("is_vword")
    w = tuple(w)
    return all(compare_vform(w, rotation) is Order.LT for rotation in rotations(w))


def is_hybrid_lyndon(w: Sequence[int]) -> bool:
    """True iff ``w`` precedes every other rotation under lex-extension order."""
    from .vsuffix import lexext_compare

    if not w:
        raise EmptyString("is_hybrid_lyndon")
    w = tuple(w)
    return all(lexext_compare(w, rotation) is Order.LT for rotation in rotations(w))


def longest_vword_prefix(region: Sequence[int]) -> Word:
    region = tuple(region)
    for length in range(len(region), 1, -1):
        if is_vword(region[:length]):
            return region[:length]
    return region[:1]


class VFactorizer:
    """Incremental factorizer fed one letter at a time."""

    def __init__(self, on_factor: Optional[FactorCallback] = None):
        """Initialize the factorizer.

        Args:
            on_factor: Called with (factor, 1-based end position) as soon as a
                factor is known to be final
        """
        self.on_factor = on_factor
        self.factors: List[Word] = []
        self.ends: List[int] = []
        self._pending: List[int] = []
        self._consumed = 0

    def push(self, letter: int) -> List[Word]:
        """Feed one letter; returns the factors completed by it."""
        self._pending.append(letter)
        if letter <= self._pending[0]:
            return []
        return self._drain(final=False)

    def finish(self) -> List[Word]:
        """Flush every remaining factor."""
        return self._drain(final=True)

    def result(self) -> Factorization:
        return Factorization(factors=tuple(self.factors), ends=tuple(self.ends))

    def _drain(self, final: bool) -> List[Word]:
        emitted = []
        while self._pending:
            first = self._pending[0]
            bound = next((i for i, letter in enumerate(self._pending) if letter > first), None)
            if bound is None:
                if not final:
                    break
                bound = len(self._pending)
            factor = longest_vword_prefix(self._pending[:bound])
            del self._pending[:len(factor)]
            self._consumed += len(factor)
            self.factors.append(factor)
            self.ends.append(self._consumed)
            emitted.append(factor)
            if self.on_factor is not None:
                self.on_factor(factor, self._consumed)
        return emitted


def factorize(x: Sequence[int], on_factor: Optional[FactorCallback] = None) -> Factorization:
    """Factor ``x`` into maximal V-words, reporting each factor on-line.

    Raises:
        EmptyString: If ``x`` is empty
    """
    if not x:
        raise EmptyString("factorize")
    factorizer = VFactorizer(on_factor=on_factor)
    for letter in x:
        factorizer.push(letter)
    factorizer.finish()
    result = factorizer.result()
    logger.debug(f"Factorized string of length {len(x)} into {len(result)} factors")
    return result


def vf_case(xi: Sequence[int], xj: Sequence[int]) -> FactorCase:
    """Which comparison condition governs a pair of candidate factors.

    Diagnostic only; ``factorize`` does not consult it.
    """
    if not xi or not xj:
        raise EmptyString("vf_case")
    xi, xj = tuple(xi), tuple(xj)
    if xi == xj:
        return FactorCase(CaseTag.EQUAL, "identical factors never join", False)
    form_i, form_j = vform(xi), vform(xj)
    if form_i.max_letter != form_j.max_letter:
        return FactorCase(CaseTag.C1, "maximal letters differ: factor boundary", False)
    if form_i.count != form_j.count:
        joinable = is_hybrid_lyndon(xi + xj)
        return FactorCase(CaseTag.C2, "equal maximal letters, counts differ: join iff the concatenation is Hybrid Lyndon", joinable)
    joinable = compare_vform(xi, xj) is Order.LT
    return FactorCase(CaseTag.C3, "maximal letter and count agree: join iff the first differing block precedes", joinable)
