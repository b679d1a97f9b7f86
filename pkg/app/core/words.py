"""
Alphabets, words and the three-way order type.

A word is an immutable tuple of letter ranks. The alphabet fixes which
external symbol each rank stands for, so ordering never depends on how
symbols happen to be encoded.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidAlphabet, UnknownSymbol

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

EMPTY: Word = ()


class Order(Enum):
    """Outcome of comparing a first string against a second."""

    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, a: Any, b: Any) -> "Order":
        """Order two natively comparable values."""
        if a < b:
            return cls.LT
        if b < a:
            return cls.GT
        return cls.EQ

    def flip(self) -> "Order":
        return Order(-self.value)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Alphabet:
    """Explicit total order on external symbols.

    The rank of a symbol is its index in ``symbols``; ranks therefore run
    over 0..sigma-1 and rank order equals list order.
    """

    symbols: Tuple[Any, ...]
    joiner: str = ""
    rank: Dict[Any, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabet(f"Alphabet symbols must be distinct: {self.symbols!r}")
        object.__setattr__(self, "rank", {symbol: i for i, symbol in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        return len(self.symbols)

    @classmethod
    def from_text(cls, lines: Iterable[str]) -> "Alphabet":
        """Characters seen in ``lines`` in code point order.

        Code point order coincides with UTF-8 byte order, so this is the
        byte alphabet restricted to the characters actually used.
        """
        seen = set()
        for line in lines:
            seen.update(line)
        return cls(tuple(sorted(seen)))

    @classmethod
    def numeric(cls, values: Iterable[int]) -> "Alphabet":
        """Distinct integer letters in numeric order."""
        return cls(tuple(sorted(set(values))), joiner=" ")

    @classmethod
    def parse(cls, spec: str, mode: str = "text") -> "Alphabet":
        """Build an alphabet from a ``--alphabet`` argument.

        Text mode takes every character of ``spec`` in the given order;
        ints mode takes whitespace-separated integers.
        """
        if mode == "ints":
            tokens = spec.split()
            try:
                values = tuple(int(token) for token in tokens)
            except ValueError:
                raise InvalidAlphabet(f"Integer mode needs an integer alphabet, got {spec!r}")
            return cls(values, joiner=" ")
        return cls(tuple(spec))

    def bind(self, raw: Sequence[Any]) -> Word:
        """Translate raw symbols into ranks.

        Raises:
            UnknownSymbol: If a symbol is missing from the alphabet
        """
        letters: List[int] = []
        for position, symbol in enumerate(raw, start=1):
            try:
                letters.append(self.rank[symbol])
            except KeyError:
                raise UnknownSymbol(position, symbol) from None
        return tuple(letters)

    def render(self, word: Sequence[int]) -> str:
        """Inverse of :meth:`bind`, joined back into display text."""
        return self.joiner.join(str(self.symbols[letter]) for letter in word)


def bind(raw: Sequence[Any], alphabet: Alphabet) -> Word:
    """Module-level form of :meth:`Alphabet.bind`."""
    return alphabet.bind(raw)


def parse_ints(line: str) -> List[int]:
    """Split an integer-mode line into its decimal letters.

    Raises:
        UnknownSymbol: For tokens that are not decimal integers >= 1
    """
    values = []
    for position, token in enumerate(line.split(), start=1):
        if not token.isdigit() or int(token) < 1:
            raise UnknownSymbol(position, token)
        values.append(int(token))
    return values


def digits(text: str, alphabet: Optional[Alphabet] = None) -> Word:
    """Bind a compact digit string such as ``32415``.

    Mostly a convenience for tests and examples written in the usual
    integer notation; the default alphabet is 1 < 2 < ... < 9.
    """
    return (alphabet or DIGITS).bind(text)


DIGITS = Alphabet(tuple("123456789"))
