"""
Property suites run by ``check``.

Each suite returns a ``SuiteReport``. Gated suites fail the run on any
violation; informational suites only report what they measured. Every
random choice flows from ``CheckScope.seed``, so reports are reproducible.
"""

import itertools
import logging
import random
import string
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

from .vcompare import COMPARATORS, PrefixStream, SuffixStream, compare_streams, compare_vform, star_path, vorder_key
from .vfactor import factorize, is_vword
from .vform import split_blocks
from .vsuffix import (
    Comparison,
    bwt_direct,
    bwt_incremental,
    bwt_rotations,
    compatibility_check,
    lexext_key,
    merge_sorted_suffixes,
    suffix_array_lexext,
    suffix_array_vorder,
)
from .words import Alphabet, Order, Word, digits

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20140801
MAX_EXAMPLES = 5
DICTIONARY_CHAIN = ("sop", "top", "strop", "strophe", "catastrophe")


@dataclass(frozen=True)
class CheckScope:
    """Sizes of every enumeration and random sweep."""

    seed: int = DEFAULT_SEED
    sigma: int = 6
    max_n: int = 64
    count: int = 10_000
    exhaustive_sigma: int = 3
    exhaustive_len: int = 5
    order_len: int = 6
    factor_binary_len: int = 10
    factor_ternary_len: int = 8
    suffix_strings: int = 1_000
    pipeline_strings: int = 500
    pipeline_sigma: int = 4
    pipeline_max_n: int = 200
    split_strings: int = 500
    split_max_n: int = 50
    compat_len: int = 8

    @classmethod
    def quick(cls, seed: int = DEFAULT_SEED) -> "CheckScope":
        """A scope small enough for unit tests."""
        return cls(
            seed=seed,
            max_n=24,
            count=200,
            exhaustive_len=3,
            order_len=4,
            factor_binary_len=7,
            factor_ternary_len=5,
            suffix_strings=50,
            pipeline_strings=20,
            pipeline_max_n=40,
            split_strings=30,
            split_max_n=20,
            compat_len=5,
        )


@dataclass
class SuiteReport:
    name: str
    gated: bool = True
    cases: int = 0
    failures: int = 0
    examples: List[str] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    def record(self, ok: bool, *detail: Any) -> bool:
        """Count one case; keep the first few failures for the report."""
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(" ".join(str(part) for part in detail))
        return ok

    @property
    def passed(self) -> bool:
        return self.failures == 0 or not self.gated

    @property
    def status(self) -> str:
        if not self.gated:
            return "INFO"
        return "PASS" if self.failures == 0 else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        report = asdict(self)
        report.pop("seconds")
        report["status"] = self.status
        return report


def show(word: Sequence[int]) -> str:
    """Print a rank word in the usual 1-based digit notation."""
    if not word:
        return "ε"
    separator = "" if max(word) < 9 else " "
    return separator.join(str(letter + 1) for letter in word)


def all_words(sigma: int, max_len: int, min_len: int = 1) -> Iterator[Word]:
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(sigma), repeat=length)


def random_word(rng: random.Random, sigma: int, max_n: int, min_n: int = 0) -> Word:
    return tuple(rng.randrange(sigma) for _ in range(rng.randint(min_n, max_n)))


def mutate(rng: random.Random, x: Sequence[int], sigma: int) -> Word:
    """A near copy of x: one to three letter replacements, insertions or deletions."""
    letters = list(x)
    for _ in range(rng.randint(1, 3)):
        operation = rng.choice(("replace", "insert", "delete"))
        if operation == "delete" and len(letters) > 1:
            del letters[rng.randrange(len(letters))]
        elif operation == "insert" or not letters:
            letters.insert(rng.randint(0, len(letters)), rng.randrange(sigma))
        else:
            letters[rng.randrange(len(letters))] = rng.randrange(sigma)
    return tuple(letters)


def insert_in_block(x: Sequence[int], i: int, u: Sequence[int], before: bool = False) -> Word:
    """Insert u at the end (or start) of V-form block i of x."""
    g = max(x)
    blocks = list(split_blocks(x, g))
    blocks[i] = tuple(u) + blocks[i] if before else blocks[i] + tuple(u)
    letters: List[int] = list(blocks[0])
    for block in blocks[1:]:
        letters.append(g)
        letters.extend(block)
    return tuple(letters)


def check_goldens(scope: CheckScope) -> SuiteReport:
    report = SuiteReport("goldens")
    path = star_path(digits("32415"))
    expected = tuple(digits(s) for s in ("32415", "3245", "345", "45", "5")) + ((),)
    report.record(path.states == expected, "star path of 32415:", " > ".join(show(s) for s in path.states))
    report.record(path.deleted_positions == (4, 2, 1, 1, 1), "deleted positions", path.deleted_positions)

    pairs = [(digits(a), digits(b)) for a, b in (("45", "32415"), ("43133", "14323"), ("2442", "3441"),
                                                 ("4422", "4413"), ("441", "442"), ("21", "12"))]
    letters = Alphabet(tuple(string.ascii_lowercase))
    chain = [letters.bind(word) for word in DICTIONARY_CHAIN]
    pairs.extend(itertools.combinations(chain, 2))
    for x, y in pairs:
        for name, comparator in COMPARATORS.items():
            ok = comparator(x, y) is Order.LT and comparator(y, x) is Order.GT
            report.record(ok, name, show(x), show(y))
    report.record(sorted(reversed(chain), key=vorder_key) == chain, "dictionary chain does not sort")
    return report


def _all_agree(report: SuiteReport, x: Word, y: Word) -> None:
    verdicts = [comparator(x, y) for comparator in COMPARATORS.values()]
    report.record(len(set(verdicts)) == 1, show(x), show(y), [str(v) for v in verdicts])


def check_comparators(scope: CheckScope) -> SuiteReport:
    """Exhaustive small strings, then random pairs with near-copies mixed in."""
    report = SuiteReport("comparators")
    words = list(all_words(scope.exhaustive_sigma, scope.exhaustive_len))
    for x in words:
        for y in words:
            _all_agree(report, x, y)
    report.notes["exhaustive_words"] = len(words)

    rng = random.Random(scope.seed)
    for t in range(scope.count):
        sigma = rng.randint(1, scope.sigma)
        x = random_word(rng, sigma, scope.max_n)
        y = mutate(rng, x, sigma) if t % 2 else random_word(rng, sigma, scope.max_n)
        _all_agree(report, x, y)
    return report


def check_lemmas(scope: CheckScope) -> SuiteReport:
    """Extension, context, insertion, monotonicity and chain properties."""
    report = SuiteReport("lemmas")
    rng = random.Random(scope.seed + 1)
    for t in range(scope.count):
        sigma = rng.randint(1, scope.sigma)
        x = random_word(rng, sigma, scope.max_n, 1)
        y = mutate(rng, x, sigma) if t % 2 else random_word(rng, sigma, scope.max_n, 1)
        base = compare_vform(x, y)
        context = (show(x), show(y), base)

        lam = (rng.randrange(sigma),)
        report.record(compare_vform(x + lam, y + lam) is base, "append", *context, lam)
        report.record(compare_vform(lam + x, lam + y) is base, "prepend", *context, lam)
        u, v = random_word(rng, sigma, 8), random_word(rng, sigma, 8)
        report.record(compare_vform(u + x + v, u + y + v) is base, "context", *context, show(u), show(v))

        top = max(max(x), max(y))
        i = rng.randint(0, min(len(split_blocks(x, max(x))), len(split_blocks(y, max(y)))) - 1)
        lam = (rng.randint(0, top),)
        after = compare_vform(insert_in_block(x, i, lam), insert_in_block(y, i, lam))
        before = compare_vform(insert_in_block(x, i, lam, before=True), insert_in_block(y, i, lam, before=True))
        report.record(after is base and before is base, "insertion", *context, i, lam)
        w = tuple(rng.randint(0, top) for _ in range(rng.randint(1, 4)))
        report.record(compare_vform(insert_in_block(x, i, w), insert_in_block(y, i, w)) is base,
                      "string insertion", *context, i, show(w))

        if base is not Order.EQ:
            low, high = (x, y) if base is Order.LT else (y, x)
            lam, mu = sorted((rng.randrange(sigma), rng.randrange(sigma)))
            report.record(compare_vform((lam,) + low, (mu,) + high) is Order.LT, "monotone prepend", show(low), show(high), lam, mu)
            report.record(compare_vform(low + (lam,), high + (mu,)) is Order.LT, "monotone append", show(low), show(high), lam, mu)

        u, v, w = random_word(rng, sigma, 6, 2), random_word(rng, sigma, 6, 1), random_word(rng, sigma, 6, 1)
        links = chain_words(u, v, w, rng.randint(1, 3), rng.randint(1, 3))
        ok = all(compare_vform(a, b) is Order.LT for a, b in zip(links, links[1:]))
        report.record(ok, "chain", show(u), show(v), show(w))

    x, y, lam = digits("1323"), digits("3133"), digits("4")
    x_wide, y_wide = insert_in_block(x, 0, lam), insert_in_block(y, 0, lam)
    report.record(
        x_wide == digits("14323") and y_wide == digits("43133")
        and compare_vform(x, y) is Order.LT and compare_vform(x_wide, y_wide) is Order.GT,
        "insertion above both maximal letters should flip 1323 < 3133",
    )
    return report


def chain_words(u: Word, v: Word, w: Word, i: int, j: int) -> List[Word]:
    """1, u, u^2, ..., u^i, u^i v, ..., u^i v^j, u^i v^j w: an increasing chain."""
    links: List[Word] = [(0,)]
    links.extend(u * p for p in range(1, i + 1))
    links.extend(u * i + v * q for q in range(1, j + 1))
    links.append(u * i + v * j + w)
    return links


def check_streams(scope: CheckScope) -> SuiteReport:
    report = SuiteReport("streams")
    rng = random.Random(scope.seed + 2)
    fallbacks = 0
    for _ in range(max(1, scope.count // 20)):
        sigma = rng.randint(1, scope.sigma)
        seed_length = rng.randint(0, 4)
        seed_x, seed_y = random_word(rng, sigma, seed_length, seed_length), random_word(rng, sigma, seed_length, seed_length)
        for stream in (PrefixStream.from_pair(seed_x, seed_y), SuffixStream.from_pair(seed_x, seed_y)):
            for _ in range(rng.randint(1, scope.max_n)):
                a = rng.randrange(sigma)
                b = a if rng.random() < 0.3 else rng.randrange(sigma)
                order = stream.push(a, b)
                report.record(order is compare_vform(stream.x, stream.y), type(stream).__name__, show(stream.x), show(stream.y))
            fallbacks += stream.fallback_count
        x = random_word(rng, sigma, scope.max_n)
        y = mutate(rng, x, sigma)[:len(x)]
        y = y + x[len(y):]
        report.record(compare_streams(x, y) is compare_vform(x, y), "compare_streams", show(x), show(y))
    report.notes["fallbacks"] = fallbacks
    return report


def check_total_order(scope: CheckScope) -> SuiteReport:
    """Antisymmetry and transitivity over every binary word up to a length."""
    report = SuiteReport("total_order")
    words = list(all_words(2, scope.order_len, min_len=0))
    table = [[compare_vform(x, y) for y in words] for x in words]
    for a, x in enumerate(words):
        for b, y in enumerate(words):
            ok = table[a][b] is table[b][a].flip() and (table[a][b] is Order.EQ) == (a == b)
            report.record(ok, "antisymmetry", show(x), show(y))
    for b in range(len(words)):
        lower = [a for a in range(len(words)) if table[a][b] is Order.LT]
        upper = [c for c in range(len(words)) if table[b][c] is Order.LT]
        for a in lower:
            for c in upper:
                report.record(table[a][c] is Order.LT, "transitivity", show(words[a]), show(words[b]), show(words[c]))
    return report


def _greedy_factors(x: Word) -> List[Word]:
    """Longest V-word prefix of the whole remainder, repeatedly."""
    factors = []
    while x:
        length = next(n for n in range(len(x), 0, -1) if n == 1 or is_vword(x[:n]))
        factors.append(x[:length])
        x = x[length:]
    return factors


def check_factorization(scope: CheckScope) -> SuiteReport:
    report = SuiteReport("factorization")
    words = itertools.chain(all_words(2, scope.factor_binary_len), all_words(3, scope.factor_ternary_len))
    for x in words:
        emitted: List[Word] = []
        result = factorize(x, on_factor=lambda factor, end: emitted.append(factor))
        factors = list(result.factors)
        ok = (
            sum(factors, ()) == x
            and result.ends[-1] == len(x)
            and emitted == factors
            and all(is_vword(f) for f in factors)
            and not any(is_vword(a + b) for a, b in zip(factors, factors[1:]))
            and factors == _greedy_factors(x)
        )
        report.record(ok, show(x), [show(f) for f in factors])
    return report


def check_suffix_order(scope: CheckScope) -> SuiteReport:
    """Every suffix precedes the next longer one."""
    report = SuiteReport("suffix_order")
    rng = random.Random(scope.seed + 3)
    for _ in range(scope.suffix_strings):
        x = random_word(rng, rng.randint(1, scope.sigma), scope.max_n, 1)
        ok = all(compare_vform(x[i + 1:], x[i:]) is Order.LT for i in range(len(x)))
        by_key = tuple(sorted(range(1, len(x) + 1), key=lambda p: vorder_key(x[p - 1:])))
        report.record(ok and suffix_array_vorder(x).order == by_key, show(x))
    return report


def check_pipeline(scope: CheckScope) -> SuiteReport:
    """Incremental transform against the direct one, and merges at random splits."""
    report = SuiteReport("pipeline")
    rng = random.Random(scope.seed + 4)
    for _ in range(scope.pipeline_strings):
        x = random_word(rng, rng.randint(1, scope.pipeline_sigma), scope.pipeline_max_n, 1)
        steps = []
        incremental = bwt_incremental(x, on_progress=steps.append)
        direct = bwt_direct(x)
        ok = (
            incremental == direct
            and sorted(incremental.transformed) == sorted(x)
            and len(steps) == len(factorize(x))
            and steps[-1].partial_bwt == direct.transformed
        )
        report.record(ok, show(x))

    for _ in range(scope.split_strings):
        x = random_word(rng, rng.randint(1, scope.pipeline_sigma), scope.split_max_n, 2)
        split = rng.randint(1, len(x) - 1)
        merged = merge_sorted_suffixes(suffix_array_lexext(x, 1, split), suffix_array_lexext(x, split + 1), x)
        direct = suffix_array_lexext(x)
        by_key = tuple(sorted(range(1, len(x) + 1), key=lambda p: lexext_key(x[p - 1:])))
        report.record(merged == direct and direct.order == by_key, "split", split, show(x))
    return report


def check_compatibility(scope: CheckScope) -> SuiteReport:
    """V-order for every factor range; lex-extension for ranges ending at the last factor.

    Interior lex-extension ranges can disagree (212 factors as 21 | 2, and
    1 < 21 inside the first factor while 212 < 12 in the whole string); those
    are counted in the notes only.
    """
    report = SuiteReport("compatibility")
    interior = disagreements = 0
    for x in all_words(2, scope.compat_len):
        k = len(factorize(x))
        for i in range(1, k + 1):
            for j in range(i, k + 1):
                report.record(compatibility_check(x, i, j, Comparison.VORDER), "vorder", show(x), i, j)
                lexext = compatibility_check(x, i, j, Comparison.LEXEXT)
                if j == k:
                    report.record(lexext, "lexext", show(x), i, j)
                else:
                    interior += 1
                    disagreements += not lexext
    report.notes["lexext_interior_ranges"] = interior
    report.notes["lexext_interior_disagreements"] = disagreements
    return report


def check_rotations(scope: CheckScope) -> SuiteReport:
    """How often the rotation-matrix transform equals the suffix transform."""
    report = SuiteReport("rotation_agreement", gated=False)
    rng = random.Random(scope.seed + 5)
    for _ in range(scope.pipeline_strings):
        x = random_word(rng, rng.randint(1, scope.pipeline_sigma), scope.split_max_n, 1)
        report.record(bwt_rotations(x) == bwt_direct(x), show(x))
    return report


SUITES: Dict[str, Callable[[CheckScope], SuiteReport]] = {
    "goldens": check_goldens,
    "comparators": check_comparators,
    "lemmas": check_lemmas,
    "streams": check_streams,
    "total_order": check_total_order,
    "factorization": check_factorization,
    "suffix_order": check_suffix_order,
    "pipeline": check_pipeline,
    "compatibility": check_compatibility,
    "rotation_agreement": check_rotations,
}


def run_checks(scope: Optional[CheckScope] = None, names: Optional[Sequence[str]] = None,
               on_report: Optional[Callable[[SuiteReport], None]] = None) -> List[SuiteReport]:
    """Run the named suites (all by default) in registry order.

    Raises:
        ValueError: If a suite name is unknown
    """
    scope = scope or CheckScope()
    selected = list(names) if names else list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites: {', '.join(unknown)}")

    reports = []
    for name in selected:
        started = time.perf_counter()
        report = SUITES[name](scope)
        report.seconds = round(time.perf_counter() - started, 3)
        logger.info(f"Suite {name}: {report.status} cases={report.cases} failures={report.failures} ({report.seconds}s)")
        reports.append(report)
        if on_report is not None:
            on_report(report)
    return reports
