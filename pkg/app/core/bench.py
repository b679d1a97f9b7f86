"""
Workload generators and the two ``bench`` tables.

The input-sensitivity table plants a first mismatch at position p and the
next maximal letter w letters later; letters read by the input-sensitive
comparator after its first scan should follow w and ignore n.

The scaling table times the incremental transform on strings with exactly
k factors at a fixed length.
"""

import logging
import random
import time
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Sequence

from .vcompare import WorkCounter, compare_input_sensitive, compare_vform
from .vsuffix import MergeStats, bwt_incremental
from .words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SensitivityRow:
    n: int
    position: int
    window: int
    inspected: int
    vform_letters: int
    order: str


@dataclass(frozen=True)
class ScalingRow:
    k: int
    n: int
    seconds: float
    merges: int
    comparisons: int
    fast_path: int


def mismatch_pair(rng: random.Random, n: int, position: int, window: int, sigma: int = 6) -> tuple:
    """Two length-n words that agree except at 1-based ``position``.

    The maximal letter sits ``window`` letters after the mismatch and at
    the end of both words; every other letter is smaller.
    """
    if sigma < 3:
        raise ValueError(f"Need at least three letters to plant a mismatch, got {sigma}")
    if position + window >= n:
        raise ValueError(f"Mismatch at {position} with window {window} does not fit in {n} letters")
    g = sigma - 1
    x = [rng.randrange(g) for _ in range(n)]
    x[position - 1 + window] = g
    x[-1] = g
    y = list(x)
    y[position - 1] = (x[position - 1] + 1) % g
    return tuple(x), tuple(y)


def sensitivity_table(lengths: Sequence[int] = (10_000, 40_000), positions: Sequence[int] = (10, 100, 1000),
                      windows: Sequence[int] = (16, 256), seed: int = 20140801, sigma: int = 6) -> List[SensitivityRow]:
    rng = random.Random(seed)
    rows = []
    for n in lengths:
        for position in positions:
            for window in windows:
                x, y = mismatch_pair(rng, n, position, window, sigma)
                sensitive, recursive = WorkCounter(), WorkCounter()
                order = compare_input_sensitive(x, y, counter=sensitive)
                compare_vform(x, y, counter=recursive)
                rows.append(SensitivityRow(n, position, window, sensitive.inspected, recursive.scan, str(order)))
    return rows


def word_with_factors(rng: random.Random, n: int, k: int) -> Word:
    """A length-n word whose factorization has exactly k factors.

    Factor t opens with letter t+1 and continues with letters 0..t, so it
    is a V-word and the next factor's first letter caps it.
    """
    if not 1 <= k <= n:
        raise ValueError(f"Cannot build {k} factors from {n} letters")
    sizes = [n // k + (1 if t < n % k else 0) for t in range(k)]
    letters: List[int] = []
    for t, size in enumerate(sizes):
        letters.append(t + 1)
        letters.extend(rng.randint(0, t) for _ in range(size - 1))
    return tuple(letters)


def scaling_table(n: int = 400, ks: Sequence[int] = tuple(range(1, 17)), seed: int = 20140801) -> List[ScalingRow]:
    rng = random.Random(seed)
    rows = []
    for k in ks:
        x = word_with_factors(rng, n, k)
        stats = MergeStats()
        started = time.perf_counter()
        bwt_incremental(x, stats=stats)
        elapsed = time.perf_counter() - started
        rows.append(ScalingRow(k, n, round(elapsed, 4), stats.merges, stats.comparisons, stats.fast_path))
        logger.debug(f"k={k}: {elapsed:.4f}s, {stats.comparisons} comparisons")
    return rows


def format_table(rows: Sequence[Any]) -> str:
    """Right-aligned text table with one header line."""
    if not rows:
        return ""
    records = [asdict(row) for row in rows]
    headers = list(records[0])
    cells = [[str(record[h]) for h in headers] for record in records]
    widths = [max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)
    return "\n".join(lines)


def run_bench(seed: int = 20140801, sigma: int = 6, n: int = 400) -> Dict[str, List[Any]]:
    """Both tables, keyed by name."""
    return {
        "input_sensitivity": sensitivity_table(seed=seed, sigma=sigma),
        "scaling": scaling_table(n=n, seed=seed),
    }
