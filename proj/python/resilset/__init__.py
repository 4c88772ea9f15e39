"""Balanced defining sets under adjacent-swap perturbations.

Defining sets are dicts shaped like {"t": 2, "pairs": [{"odd": [1, 8],
"even": [3, 6]}, ...]}; swap sets are lists of [i, i + 1] pairs.
"""

import json

from . import _resilset
from ._resilset import SizeRefusal

__all__ = [
    "SizeRefusal",
    "apply_swaps",
    "construct",
    "count_swap_sets",
    "discrepancy",
    "find_optimal",
    "graphs",
    "lower_bound",
    "run_cli",
    "upper_bound",
    "validate",
    "worst_case",
]


def _dump(doc):
    return json.dumps(doc)


def construct(z):
    return json.loads(_resilset.construct(z))


def validate(sets):
    """List of violations; empty when the set is a balanced partition."""
    return json.loads(_resilset.validate(_dump(sets)))


def discrepancy(sets, swaps):
    return _resilset.discrepancy(_dump(sets), _dump(list(swaps)))


def apply_swaps(sets, swaps):
    return json.loads(_resilset.apply_swaps(_dump(sets), _dump(list(swaps))))


def worst_case(sets, strategy="bnb", workers=1, collect_maximizers=False):
    return json.loads(
        _resilset.worst_case(_dump(sets), strategy, workers, collect_maximizers)
    )


def find_optimal(t, workers=1):
    return json.loads(_resilset.find_optimal(t, workers))


def count_swap_sets(t):
    return _resilset.count_swap_sets(t)


def lower_bound(t):
    """(3t - 2) / 2 as a "p/q" string."""
    return _resilset.lower_bound(t)


def upper_bound(z):
    return _resilset.upper_bound(z)


def graphs(sets, swaps, format="json", membership="literal"):
    text = _resilset.graphs(_dump(sets), _dump(list(swaps)), format, membership)
    return json.loads(text) if format == "json" else text


def run_cli(*args):
    """Run the command-line tool in process; returns (exit_code, stdout, stderr)."""
    return _resilset.run_cli([str(a) for a in args])
