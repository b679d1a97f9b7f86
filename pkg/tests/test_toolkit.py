#!/usr/bin/env python3
"""
Test module for VOrderToolkit input binding and payloads.
"""

import sys
import os

import pytest

# Add parent directory to path to import app modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app.core.errors import InvalidAlphabet, UnknownSymbol
from app.core.toolkit import VOrderToolkit


def test_toolkit_initialization():
    """Test mode and alphabet options."""
    print("Testing VOrderToolkit initialization...")

    toolkit = VOrderToolkit()
    assert toolkit.mode == "text"
    assert toolkit.explicit_alphabet is None
    print("✓ Default initialization works")

    toolkit = VOrderToolkit(mode="ints", alphabet="5 1 3")
    assert toolkit.explicit_alphabet.symbols == (5, 1, 3)
    print("✓ Custom initialization works")

    with pytest.raises(ValueError):
        VOrderToolkit(mode="bytes")
    with pytest.raises(InvalidAlphabet):
        VOrderToolkit(alphabet="abca")
    print("VOrderToolkit initialization tests passed!\n")


def test_binding():
    """Test that lines share one alphabet."""
    print("Testing line binding...")

    alphabet, words = VOrderToolkit().bind_lines(["ba", "ca"])
    assert alphabet.symbols == ("a", "b", "c")
    assert words == [(1, 0), (2, 0)]

    alphabet, words = VOrderToolkit(mode="ints").bind_lines(["10 2", "7"])
    assert alphabet.symbols == (2, 7, 10)
    assert words == [(2, 0), (1,)]

    with pytest.raises(UnknownSymbol):
        VOrderToolkit(alphabet="ab").bind_lines(["abc"])
    print("Line binding tests passed!\n")


def test_explicit_alphabet_changes_order():
    """Test that an explicit order overrides code point order."""
    print("Testing explicit alphabets...")

    assert VOrderToolkit().compare("a", "b")["order"] == "LT"
    assert VOrderToolkit(alphabet="ba").compare("a", "b")["order"] == "GT"
    assert VOrderToolkit(mode="ints", alphabet="3 2 1").compare("1", "3")["order"] == "GT"
    print("Explicit alphabet tests passed!\n")


def test_payloads():
    """Test the payload of every operation."""
    print("Testing payloads...")

    toolkit = VOrderToolkit()
    compare = toolkit.compare("21", "12")
    assert compare["order"] == "LT" and compare["agree"]
    assert compare["work"]["input_sensitive"]["inspected"] == 3
    assert compare["work"]["vform"]["scan"] > 0

    emitted = []
    factor = toolkit.factor("212", on_factor=lambda text, end: emitted.append((text, end)))
    assert emitted == [("21", 2), ("2", 3)]
    assert factor["factors"] == [{"factor": "21", "end": 2}, {"factor": "2", "end": 3}]

    assert toolkit.suffix_array("212") == {"input": "212", "comparison": "lexext", "order": [3, 1, 2]}
    assert toolkit.bwt("212") == {"input": "212", "transformed": "122", "primary_index": 2}
    assert toolkit.vform("3133") == {"input": "3133", "max_letter": "3", "count": 3, "blocks": ["", "1", "", ""]}
    star = toolkit.star("32415")
    assert star["states"] == ["32415", "3245", "345", "45", "5", ""]
    assert star["deleted_positions"] == [4, 2, 1, 1, 1]

    ints = VOrderToolkit(mode="ints")
    assert ints.bwt("12 1 12") == {"input": "12 1 12", "transformed": "1 12 12", "primary_index": 2}
    print("Payload tests passed!\n")


def main():
    """Run all toolkit tests."""
    print("Running VOrderToolkit tests...\n")

    test_toolkit_initialization()
    test_binding()
    test_explicit_alphabet_changes_order()
    test_payloads()

    print("All VOrderToolkit tests passed! 🎉")
    return 0


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
