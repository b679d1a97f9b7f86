#!/usr/bin/env python3
"""
Test module for the command line front end.

Every case drives ``main`` with in-memory streams, so no subprocess is
needed.
"""

import io
import json
import sys
import os
import tempfile

import pytest

# Add parent directory to path to import app modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.cli import RunConfig, create_argument_parser, main
from app.core.errors import InvalidAlphabet


def run_cli(argv, stdin_text=""):
    """Run the CLI and return (exit code, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_compare():
    """Test plain and JSON comparison output."""
    print("Testing compare...")

    assert run_cli(["compare", "sop", "top"]) == (0, "LT\n", "")
    assert run_cli(["compare", "catastrophe", "strophe"])[1] == "GT\n"
    assert run_cli(["compare", "abc", "abc"])[1] == "EQ\n"
    print("✓ Dictionary words compare in V-order")

    assert run_cli(["compare", "--mode", "ints", "4 5", "3 2 4 1 5"])[1] == "LT\n"
    assert run_cli(["compare", "--mode", "ints", "45", "32415"])[1] == "LT\n"
    assert run_cli(["compare", "45", "32415"])[1] == "LT\n"
    print("✓ 45 precedes 32415 in both modes")

    code, out, _ = run_cli(["compare", "--json", "14323", "43133"])
    payload = json.loads(out)
    assert code == 0
    assert payload["order"] == "GT"
    assert payload["agree"] is True
    assert set(payload["verdicts"]) == {"star_oracle", "vform", "input_sensitive", "sort_key"}
    assert set(payload["verdicts"].values()) == {"GT"}
    assert payload["work"]["input_sensitive"]["decided_by"] == "window"
    print("✓ JSON carries every verdict and the work counters")

    print("Compare tests passed!\n")


def test_line_commands():
    """Test factor, sa, bwt, vform and star on stdin."""
    print("Testing line commands...")

    assert run_cli(["factor"], "212\n") == (0, "2\t21\n3\t2\n", "")
    assert run_cli(["factor"], "21\n12\n")[1] == "2\t21\n\n1\t1\n2\t2\n"
    code, out, _ = run_cli(["factor", "--json"], "212\n")
    assert json.loads(out) == {"input": "212", "factors": [{"factor": "21", "end": 2}, {"factor": "2", "end": 3}]}
    print("✓ Factors print with their rightmost positions")

    assert run_cli(["sa"], "212\n")[1] == "3 1 2\n"
    assert run_cli(["bwt"], "212\n")[1] == "122\t2\n"
    assert run_cli(["bwt"], "a\n")[1] == "a\t1\n"
    assert run_cli(["bwt", "--mode", "ints"], "2 1 2\n")[1] == "1 2 2\t2\n"
    print("✓ Suffix array and transform of 212")

    assert run_cli(["vform"], "3133\n")[1] == "3\t3\tε | 1 | ε | ε\n"
    assert run_cli(["star"], "32415\n")[1] == "32415 > 3245 > 345 > 45 > 5 > ε\n"
    print("Line command tests passed!\n")


def test_file_inputs():
    """Test reading strings from files."""
    print("Testing file inputs...")

    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "words.txt")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("212\na\n")
        code, out, _ = run_cli(["bwt", "--json", path])
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert [line["primary_index"] for line in lines] == [2, 1]

        code, _, err = run_cli(["sa", os.path.join(directory, "missing.txt")])
        assert code == 2
        assert err.startswith("error:")
    print("File input tests passed!\n")


def test_errors():
    """Test exit codes and diagnostics for bad input."""
    print("Testing error handling...")

    code, out, err = run_cli(["compare", "--alphabet", "ab", "abc", "ab"])
    assert code == 2 and out == ""
    assert "'c'" in err and "position 3" in err
    print("✓ Unknown symbols exit 2 with their position")

    assert run_cli(["compare", "--mode", "ints", "1 x", "2"])[0] == 2
    assert run_cli(["compare", "--alphabet", "aa", "a", "a"])[0] == 2
    assert run_cli(["compare", "--mode", "ints", "--alphabet", "a b", "1", "2"])[0] == 2
    assert run_cli(["factor"], "\n")[0] == 2
    assert run_cli([])[0] == 2
    assert run_cli(["compare", "only-one"])[0] == 2
    print("Error handling tests passed!\n")


def test_run_config():
    """Test configuration validation and defaults."""
    print("Testing run configuration...")

    args = create_argument_parser().parse_args(["sa", "a.txt", "b.txt"])
    config = RunConfig.from_args(args)
    assert config.inputs == ("a.txt", "b.txt")
    assert (config.mode, config.output, config.seed, config.max_n, config.sigma) == ("text", "plain", 20140801, 64, 6)

    with pytest.raises(ValueError):
        RunConfig(command="compare", inputs=("a",))
    with pytest.raises(InvalidAlphabet):
        RunConfig(command="sa", mode="ints", alphabet="a b")
    with pytest.raises(ValueError):
        RunConfig(command="check", sigma=0)
    print("Run configuration tests passed!\n")


def test_check_command():
    """Test the property run and determinism of repeated output."""
    print("Testing check command...")

    code, out, _ = run_cli(["check", "--quick", "--suite", "goldens", "--suite", "compatibility"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS goldens cases=") and lines[0].endswith(" failures=0")
    assert lines[1].startswith("PASS compatibility ")
    assert "lexext_interior_disagreements=" in lines[1]

    code, out, _ = run_cli(["check", "--quick", "--json", "--suite", "factorization"])
    report = json.loads(out)
    assert code == 0 and report["passed"] is True
    assert report["suites"][0]["status"] == "PASS"
    print("✓ Check prints one line per suite")

    first = run_cli(["bwt", "--json"], "abracadabra\n")
    second = run_cli(["bwt", "--json"], "abracadabra\n")
    assert first == second
    print("Check command tests passed!\n")


def main_runner():
    """Run all CLI tests."""
    print("Running CLI Tests...\n")

    test_compare()
    test_line_commands()
    test_file_inputs()
    test_errors()
    test_run_config()
    test_check_command()

    print("All CLI tests passed! 🎉")
    return 0


if __name__ == "__main__":
    exit_code = main_runner()
    sys.exit(exit_code)
