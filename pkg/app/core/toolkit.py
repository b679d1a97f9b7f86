"""
Input binding and result payloads shared by the CLI and the MCP tools.

The toolkit turns raw input lines into words over one alphabet, runs an
operation and returns a JSON-ready dictionary.
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .vcompare import COMPARATORS, WorkCounter, compare_input_sensitive, compare_vform, star_path
from .vfactor import factorize
from .vform import vform
from .vsuffix import bwt_incremental, suffix_array_lexext
from .words import Alphabet, Word, parse_ints

logger = logging.getLogger(__name__)

MODES = ("text", "ints")


class VOrderToolkit:
    """Binds input lines to words and runs V-order operations on them."""

    def __init__(self, mode: str = "text", alphabet: Optional[str] = None):
        """Initialize the toolkit.

        Args:
            mode: ``text`` (one symbol per character) or ``ints``
                (whitespace-separated decimal letters >= 1)
            alphabet: Optional explicit symbol order; characters in text
                mode, whitespace-separated integers in ints mode
        """
        if mode not in MODES:
            raise ValueError(f"Unknown mode {mode!r}; expected one of {', '.join(MODES)}")
        self.mode = mode
        self.alphabet_spec = alphabet
        self.explicit_alphabet = Alphabet.parse(alphabet, mode) if alphabet is not None else None

    def bind_lines(self, lines: Sequence[str]) -> Tuple[Alphabet, List[Word]]:
        """Bind every line over one shared alphabet.

        Raises:
            UnknownSymbol: If a symbol is missing from the explicit alphabet,
                or an ints-mode token is not a decimal integer >= 1
        """
        if self.mode == "ints":
            raw = [parse_ints(line) for line in lines]
            alphabet = self.explicit_alphabet or Alphabet.numeric(v for values in raw for v in values)
        else:
            raw = list(lines)
            alphabet = self.explicit_alphabet or Alphabet.from_text(raw)
        return alphabet, [alphabet.bind(values) for values in raw]

    def compare(self, first: str, second: str) -> Dict[str, Any]:
        alphabet, (x, y) = self.bind_lines([first, second])
        verdicts = {name: str(comparator(x, y)) for name, comparator in COMPARATORS.items()}
        sensitive, recursive = WorkCounter(), WorkCounter()
        order = compare_vform(x, y, counter=recursive)
        compare_input_sensitive(x, y, counter=sensitive)
        agree = len(set(verdicts.values())) == 1
        if not agree:
            logger.error(f"Comparators disagree on {first!r} vs {second!r}: {verdicts}")
        return {
            "x": first,
            "y": second,
            "order": str(order),
            "agree": agree,
            "verdicts": verdicts,
            "work": {
                "input_sensitive": {
                    "scan": sensitive.scan,
                    "mismatch": sensitive.mismatch,
                    "window": sensitive.window,
                    "inspected": sensitive.inspected,
                    "decided_by": sensitive.decided_by,
                },
                "vform": {"scan": recursive.scan},
            },
        }

    def factor(self, line: str, on_factor: Optional[Callable[[str, int], None]] = None) -> Dict[str, Any]:
        """Factorize one line; ``on_factor`` sees each rendered factor as it is found."""
        alphabet, (x,) = self.bind_lines([line])
        callback = None
        if on_factor is not None:
            callback = lambda factor, end: on_factor(alphabet.render(factor), end)
        result = factorize(x, on_factor=callback)
        logger.info(f"Factorized string of length {len(x)} into {len(result)} factors")
        return {
            "input": line,
            "factors": [{"factor": alphabet.render(f), "end": end} for f, end in zip(result.factors, result.ends)],
        }

    def suffix_array(self, line: str) -> Dict[str, Any]:
        _, (x,) = self.bind_lines([line])
        sa = suffix_array_lexext(x)
        return {"input": line, "comparison": sa.comparison.value, "order": list(sa.order)}

    def bwt(self, line: str) -> Dict[str, Any]:
        alphabet, (x,) = self.bind_lines([line])
        result = bwt_incremental(x)
        logger.info(f"Transformed string of length {len(x)}; primary index {result.primary_index}")
        return {
            "input": line,
            "transformed": alphabet.render(result.transformed),
            "primary_index": result.primary_index,
        }

    def vform(self, line: str) -> Dict[str, Any]:
        alphabet, (x,) = self.bind_lines([line])
        form = vform(x)
        return {
            "input": line,
            "max_letter": alphabet.render([form.max_letter]),
            "count": form.count,
            "blocks": [alphabet.render(block) for block in form.blocks],
        }

    def star(self, line: str) -> Dict[str, Any]:
        alphabet, (x,) = self.bind_lines([line])
        path = star_path(x)
        return {
            "input": line,
            "states": [alphabet.render(state) for state in path.states],
            "deleted_positions": list(path.deleted_positions),
        }
