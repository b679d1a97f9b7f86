#!/usr/bin/env python3
"""
Test module for the property suites and benchmark workloads.

Suites run at the quick scope here; ``python -m app.cli check`` runs them
at full size.
"""

import random
import sys
import os

import pytest

# Add parent directory to path to import app modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.core.bench import format_table, mismatch_pair, scaling_table, sensitivity_table, word_with_factors
from app.core.checks import (
    SUITES,
    CheckScope,
    SuiteReport,
    all_words,
    chain_words,
    insert_in_block,
    run_checks,
    show,
)
from app.core.vcompare import compare_vform
from app.core.vfactor import factorize
from app.core.words import Order, digits


def test_quick_suites_pass():
    """Test that every gated suite passes at the quick scope."""
    print("Testing quick property run...")

    seen = []
    reports = run_checks(CheckScope.quick(), on_report=seen.append)
    assert [report.name for report in reports] == list(SUITES)
    assert seen == reports
    for report in reports:
        assert report.cases > 0, report.name
        assert report.passed, f"{report.name}: {report.examples}"
        print(f"✓ {report.status} {report.name} ({report.cases} cases)")

    rotation = next(report for report in reports if report.name == "rotation_agreement")
    assert rotation.status == "INFO"
    print("Quick property run tests passed!\n")


def test_compatibility_notes():
    """Test that interior lex-extension disagreements are counted, not gated."""
    print("Testing compatibility notes...")

    (report,) = run_checks(CheckScope.quick(), ["compatibility"])
    assert report.status == "PASS"
    assert report.notes["lexext_interior_disagreements"] >= 1
    assert report.notes["lexext_interior_ranges"] >= report.notes["lexext_interior_disagreements"]
    print("Compatibility note tests passed!\n")


def test_report_bookkeeping():
    """Test failure recording and serialization."""
    print("Testing suite reports...")

    report = SuiteReport("demo")
    assert report.record(True)
    for i in range(8):
        report.record(False, "case", i)
    assert (report.cases, report.failures) == (9, 8)
    assert report.examples[0] == "case 0"
    assert len(report.examples) == 5
    assert report.status == "FAIL" and not report.passed
    assert "seconds" not in report.to_dict()
    assert report.to_dict()["status"] == "FAIL"

    info = SuiteReport("demo", gated=False, failures=3)
    assert info.passed and info.status == "INFO"

    with pytest.raises(ValueError):
        run_checks(CheckScope.quick(), ["no_such_suite"])
    print("Suite report tests passed!\n")


def test_generators():
    """Test enumeration and construction helpers."""
    print("Testing generators...")

    assert len(list(all_words(3, 5))) == 363
    assert len(list(all_words(2, 6, min_len=0))) == 127
    assert show(digits("3241")) == "3241"
    assert show(()) == "ε"

    x, y, lam = digits("1323"), digits("3133"), digits("4")
    assert insert_in_block(x, 0, lam) == digits("14323")
    assert insert_in_block(y, 0, lam) == digits("43133")
    assert insert_in_block(y, 1, lam, before=True) == digits("34133")
    print("✓ Insertion at V-form blocks")

    links = chain_words(digits("21"), digits("3"), digits("1"), 2, 2)
    assert links[0] == digits("1") and links[-1] == digits("212133") + digits("1")
    assert all(compare_vform(a, b) is Order.LT for a, b in zip(links, links[1:]))
    print("Generator tests passed!\n")


def test_bench_workloads():
    """Test benchmark workloads and the shape of their tables."""
    print("Testing benchmark workloads...")

    rng = random.Random(1)
    x, y = mismatch_pair(rng, 500, 40, 16)
    assert len(x) == len(y) == 500
    assert [i for i in range(500) if x[i] != y[i]] == [39]
    assert max(x) == max(y) == 5
    with pytest.raises(ValueError):
        mismatch_pair(rng, 50, 40, 16)

    rows = sensitivity_table(lengths=(2000, 8000), positions=(10, 100), windows=(16, 64), seed=3)
    assert len(rows) == 8
    for row in rows:
        assert row.inspected == 2 * row.position + 2 * row.window
        assert row.vform_letters >= 2 * row.n
    print("✓ Letters after the first scan follow position and window, not n")

    for k in (1, 4, 9):
        assert len(factorize(word_with_factors(rng, 60, k))) == k
    scaling = scaling_table(n=60, ks=(1, 2, 3), seed=3)
    assert [row.k for row in scaling] == [1, 2, 3]
    assert [row.merges for row in scaling] == [0, 1, 2]

    table = format_table(scaling)
    assert table.splitlines()[0].split() == ["k", "n", "seconds", "merges", "comparisons", "fast_path"]
    assert len(table.splitlines()) == 4
    print("Benchmark workload tests passed!\n")


def main():
    """Run all check and bench tests."""
    print("Running Check Suite Tests...\n")

    test_quick_suites_pass()
    test_compatibility_notes()
    test_report_bookkeeping()
    test_generators()
    test_bench_workloads()

    print("All check suite tests passed! 🎉")
    return 0


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
