"""Exact-arithmetic toolkit for triangular alternation limit algebras.

Every report-producing function returns the same JSON document the `taf`
command line tool emits; `report()` parses one into a dict.
"""

import json

from taf._core import TafError, analyze, compare, nu, out_rank, point, verify, witness

__all__ = [
    "TafError",
    "analyze",
    "compare",
    "nu",
    "out_rank",
    "point",
    "verify",
    "witness",
    "report",
]


def report(document: str) -> dict:
    """Parse a JSON report string into a dict."""
    return json.loads(document)
