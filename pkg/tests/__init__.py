"""
Test suite for the V-Order Toolkit.

This package contains unit tests for the comparators, factorizer and
suffix sorting, plus tests for the CLI, the property suites and the
MCP protocols.
"""
