"""
V-order comparison.

Four independent comparators that must always agree:

* ``compare_star_oracle``: walks both star paths to their meeting point.
* ``compare_vform``: recursion on maximal letter, its count, then the first
  differing V-form block.
* ``compare_input_sensitive``: one scan for maximal letter and count, then
  letter counts over the window between the first mismatch and the next
  maximal letter.
* ``compare_sort_key``: nested-tuple keys whose native order is V-order.

Prefix and suffix streams maintain the order of two growing strings, using
the append/prepend and monotone extension rules and recomputing only when
those rules leave the outcome open.
"""

import logging
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from typing import Deque, List, Optional, Sequence, Tuple

from typing_extensions import Self

from .errors import EmptyString, SegmentMismatch
from .vform import split_blocks, vform
from .words import Order, Word

logger = logging.getLogger(__name__)


@dataclass
class WorkCounter:
    """Letters read by a comparator, split by phase."""

    scan: int = 0
    mismatch: int = 0
    window: int = 0
    decided_by: str = ""

    @property
    def inspected(self) -> int:
        """Letters read after the initial maximal-letter scan."""
        return self.mismatch + self.window


@dataclass(frozen=True)
class StarPath:
    """The chain x, x*, x**, ..., ending at the empty word."""

    states: Tuple[Word, ...]
    deleted_positions: Tuple[int, ...]

    def state_of_length(self, length: int) -> Word:
        return self.states[len(self.states) - 1 - length]


def star_position(x: Sequence[int]) -> int:
    """0-based index of the letter removed by one star step.

    This is the start of the longest nondecreasing suffix, which is the
    first letter when the whole word is nondecreasing.
    """
    h = len(x) - 1
    while h > 0 and x[h - 1] <= x[h]:
        h -= 1
    return h


def star_delete(x: Sequence[int]) -> Word:
    """Return x* (x with its star letter removed).

    Raises:
        EmptyString: If ``x`` is empty
    """
    if not x:
        raise EmptyString("star_delete")
    h = star_position(x)
    return tuple(x[:h]) + tuple(x[h + 1:])


def star_path(x: Sequence[int]) -> StarPath:
    """Every state from ``x`` down to the empty word, with 1-based deletions."""
    state: Word = tuple(x)
    states = [state]
    deleted = []
    while state:
        h = star_position(state)
        deleted.append(h + 1)
        state = state[:h] + state[h + 1:]
        states.append(state)
    return StarPath(states=tuple(states), deleted_positions=tuple(deleted))


def compare_star_oracle(x: Sequence[int], y: Sequence[int]) -> Order:
    """Reference comparator taken straight from the star-tree definition.

    Quadratic in the string length per path; meant for validation, not
    production workloads.
    """
    x, y = tuple(x), tuple(y)
    if x == y:
        return Order.EQ
    path_x, path_y = star_path(x), star_path(y)
    if len(x) < len(y) and path_y.state_of_length(len(x)) == x:
        return Order.LT
    if len(y) < len(x) and path_x.state_of_length(len(y)) == y:
        return Order.GT

    # Equal states stay equal further down, so the meeting length is the
    # largest length at which the two paths agree.
    meet = min(len(x), len(y))
    while path_x.state_of_length(meet) != path_y.state_of_length(meet):
        meet -= 1
    s = path_x.state_of_length(meet + 1)
    t = path_y.state_of_length(meet + 1)
    j = max(i for i in range(meet + 1) if s[i] != t[i])
    return Order.of(s[j], t[j])


def compare_vform(x: Sequence[int], y: Sequence[int], counter: Optional[WorkCounter] = None) -> Order:
    """Compare two words by maximal letter, then its count, then blocks.

    The first differing block pair decides; the empty block precedes any
    nonempty one. Blocks have a strictly smaller maximal letter than their
    parent, so the descent terminates.
    """
    x, y = tuple(x), tuple(y)
    while True:
        if x == y:
            return Order.EQ
        if not x:
            return Order.LT
        if not y:
            return Order.GT
        form_x, form_y = vform(x), vform(y)
        if counter is not None:
            counter.scan += len(x) + len(y)
        if form_x.max_letter != form_y.max_letter:
            return Order.of(form_x.max_letter, form_y.max_letter)
        if form_x.count != form_y.count:
            return Order.of(form_x.count, form_y.count)
        x, y = next((bx, by) for bx, by in zip(form_x.blocks, form_y.blocks) if bx != by)


def vorder_key(x: Sequence[int]) -> tuple:
    """Sort key whose native tuple order is V-order.

    The empty word maps to ``()``, which sorts before every other key.
    """
    if not x:
        return ()
    g = max(x)
    blocks = split_blocks(x, g)
    return (g, len(blocks) - 1, tuple(vorder_key(block) for block in blocks))


def compare_sort_key(x: Sequence[int], y: Sequence[int]) -> Order:
    return Order.of(vorder_key(x), vorder_key(y))


def subsequence_precedes(v: Sequence[int], x: Sequence[int]) -> bool:
    """True iff ``v`` is a proper subsequence of ``x`` (and hence v precedes x)."""
    if len(v) >= len(x):
        return False
    remaining = iter(x)
    return all(letter in remaining for letter in v)


def _max_and_count(x: Sequence[int]) -> Tuple[int, int]:
    g, count = -1, 0
    for letter in x:
        if letter > g:
            g, count = letter, 1
        elif letter == g:
            count += 1
    return g, count


def _window_counts(x: Sequence[int], h: int, g: int, counts: List[int]) -> int:
    """Fill ``counts`` for x[h..l] and return the window length.

    The window ends just before the nearest g at or right of h (or at the
    end of x). A letter alpha is counted when no larger letter precedes it
    in the window, i.e. when it lies before the leftmost occurrence of any
    letter above alpha; that is exactly when it equals the running maximum.
    """
    running = -1
    i = h
    while i < len(x) and x[i] != g:
        letter = x[i]
        if letter >= running:
            running = letter
            counts[letter] += 1
        i += 1
    return i - h


def compare_input_sensitive(x: Sequence[int], y: Sequence[int], counter: Optional[WorkCounter] = None) -> Order:
    """Input-sensitive comparison: work after the first scan depends only on
    the window from the first mismatch to the next maximal letter.
    """
    counter = counter if counter is not None else WorkCounter()

    # Maximal letter and its count for both strings.
    g_x, c_x = _max_and_count(x)
    g_y, c_y = _max_and_count(y)
    counter.scan += len(x) + len(y)
    if g_x != g_y:
        counter.decided_by = "C1"
        return Order.of(g_x, g_y)
    if c_x != c_y:
        counter.decided_by = "C2"
        return Order.of(c_x, c_y)

    # First mismatch; the shared prefix cannot matter.
    shortest = min(len(x), len(y))
    h = 0
    while h < shortest and x[h] == y[h]:
        h += 1
    counter.mismatch += 2 * min(h + 1, shortest)
    if h == shortest and len(x) == len(y):
        counter.decided_by = "equal"
        return Order.EQ

    # Per-letter counts over each window.
    g = g_x
    counts_x = [0] * (g + 1)
    counts_y = [0] * (g + 1)
    counter.window += _window_counts(x, h, g, counts_x)
    counter.window += _window_counts(y, h, g, counts_y)

    # The highest letter whose counts differ decides.
    counter.decided_by = "window"
    for alpha in range(g, -1, -1):
        if counts_x[alpha] != counts_y[alpha]:
            return Order.of(counts_x[alpha], counts_y[alpha])
    raise RuntimeError(f"Windows at mismatch {h + 1} produced identical counts")


class _OrderStream(ABC):
    """Order of two strings that grow one letter at a time on the same side."""

    def __init__(self):
        self.current_order = Order.EQ
        self.fallback_count = 0

    @classmethod
    def from_pair(cls, x: Sequence[int], y: Sequence[int]) -> Self:
        """Seed a stream with existing buffers."""
        stream = cls()
        stream._seed(x, y)
        stream.current_order = compare_vform(x, y)
        return stream

    def push(self, a: int, b: int) -> Order:
        """Extend x by ``a`` and y by ``b`` and return the new order."""
        previous = self.current_order
        self._extend(a, b)
        if a == b:
            order = previous
        elif previous is Order.EQ:
            order = Order.of(a, b)
        elif previous is Order.LT and a < b:
            order = Order.LT
        elif previous is Order.GT and a > b:
            order = Order.GT
        else:
            self.fallback_count += 1
            order = compare_vform(self.x, self.y)
            logger.debug(f"{type(self).__name__} recomputed order at length {len(self.x)}: {order}")
        self.current_order = order
        return order

    @property
    @abstractmethod
    def x(self) -> Word:
        """Current first buffer."""

    @property
    @abstractmethod
    def y(self) -> Word:
        """Current second buffer."""

    @abstractmethod
    def _seed(self, x: Sequence[int], y: Sequence[int]) -> None:
        pass

    @abstractmethod
    def _extend(self, a: int, b: int) -> None:
        pass


class PrefixStream(_OrderStream):
    """Letters are appended: xa vs yb."""

    def __init__(self):
        super().__init__()
        self.x_buffer: List[int] = []
        self.y_buffer: List[int] = []

    @property
    def x(self) -> Word:
        return tuple(self.x_buffer)

    @property
    def y(self) -> Word:
        return tuple(self.y_buffer)

    def _seed(self, x: Sequence[int], y: Sequence[int]) -> None:
        self.x_buffer = list(x)
        self.y_buffer = list(y)

    def _extend(self, a: int, b: int) -> None:
        self.x_buffer.append(a)
        self.y_buffer.append(b)


class SuffixStream(_OrderStream):
    """Letters are prepended: ax vs by."""

    def __init__(self):
        super().__init__()
        self.x_buffer: Deque[int] = deque()
        self.y_buffer: Deque[int] = deque()

    @property
    def x(self) -> Word:
        return tuple(self.x_buffer)

    @property
    def y(self) -> Word:
        return tuple(self.y_buffer)

    def _seed(self, x: Sequence[int], y: Sequence[int]) -> None:
        self.x_buffer = deque(x)
        self.y_buffer = deque(y)

    def _extend(self, a: int, b: int) -> None:
        self.x_buffer.appendleft(a)
        self.y_buffer.appendleft(b)


def prefix_stream_push(stream: PrefixStream, a: int, b: int) -> Order:
    return stream.push(a, b)


def suffix_stream_push(stream: SuffixStream, a: int, b: int) -> Order:
    return stream.push(a, b)


def compare_streams(x: Sequence[int], y: Sequence[int]) -> Order:
    """Replay two equal-length words through both stream kinds.

    Raises:
        SegmentMismatch: If the lengths differ
        RuntimeError: If the two streams end on different orders
    """
    if len(x) != len(y):
        raise SegmentMismatch(f"Streams need equal lengths, got {len(x)} and {len(y)}")
    prefix, suffix = PrefixStream(), SuffixStream()
    for a, b in zip(x, y):
        prefix.push(a, b)
    for a, b in zip(reversed(x), reversed(y)):
        suffix.push(a, b)
    if prefix.current_order is not suffix.current_order:
        raise RuntimeError(f"Prefix stream ended on {prefix.current_order}, suffix stream on {suffix.current_order}")
    return prefix.current_order


COMPARATORS = {
    "star_oracle": compare_star_oracle,
    "vform": compare_vform,
    "input_sensitive": compare_input_sensitive,
    "sort_key": compare_sort_key,
}
