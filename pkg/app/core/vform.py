"""
V-form decomposition.

Every nonempty word x factors uniquely as x0 g x1 g ... g xk where g is its
largest letter, occurring exactly k times, and no block xi contains g.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import EmptyString
from .words import Word


@dataclass(frozen=True)
class VForm:
    """Maximal letter, its multiplicity and the k+1 blocks between occurrences."""

    max_letter: int
    count: int
    blocks: Tuple[Word, ...]
    source_length: int

    def reassemble(self) -> Word:
        """Rebuild the source word from its blocks."""
        letters: List[int] = list(self.blocks[0])
        for block in self.blocks[1:]:
            letters.append(self.max_letter)
            letters.extend(block)
        return tuple(letters)


def split_blocks(x: Sequence[int], g: int) -> Tuple[Word, ...]:
    """Cut ``x`` at every occurrence of ``g``, keeping empty runs."""
    blocks = []
    start = 0
    for i, letter in enumerate(x):
        if letter == g:
            blocks.append(tuple(x[start:i]))
            start = i + 1
    blocks.append(tuple(x[start:]))
    return tuple(blocks)


def vform(x: Sequence[int]) -> VForm:
    """Decompose a nonempty word into its V-form.

    Raises:
        EmptyString: If ``x`` is empty
    """
    if not x:
        raise EmptyString("vform")
    g = max(x)
    blocks = split_blocks(x, g)
    return VForm(max_letter=g, count=len(blocks) - 1, blocks=blocks, source_length=len(x))


def reassemble(form: VForm) -> Word:
    return form.reassemble()
