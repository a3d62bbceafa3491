"""Counts of degree 2 Del Pezzo surfaces over F_q, q odd, by Frobenius class and Picard trace."""

import json

from ._core import (
    DataError,
    InvalidInput,
    VerificationFailure,
    class_count,
    class_labels,
    existence_exceptions,
    feasibility,
    pgl3_order,
    possible_traces,
    printed_polynomial,
    published_exceptions,
    surface_point_count,
    trace_count,
    validate_data,
)
from . import _core

__all__ = [
    "DataError",
    "InvalidInput",
    "VerificationFailure",
    "class_count",
    "class_labels",
    "class_report",
    "existence_exceptions",
    "feasibility",
    "oracle_identity",
    "oracle_twisted",
    "pgl3_order",
    "possible_traces",
    "printed_polynomial",
    "published_exceptions",
    "surface_point_count",
    "trace_count",
    "validate_data",
    "verify",
]


def class_report(cache_dir=None, use_cache=True):
    """The 60 classes with sizes, traces and the letter assignment. Builds W(E7) unless cached."""
    return json.loads(_core.class_report_json(cache_dir, use_cache))


def oracle_identity(q, budget=20_000_000, jobs=1):
    return json.loads(_core.oracle_identity_json(q, budget, jobs))


def oracle_twisted(cycle_type, q, budget=20_000_000, jobs=1, cache_dir=None, use_cache=True):
    if not isinstance(cycle_type, str):
        cycle_type = ",".join(str(int(x)) for x in cycle_type)
    return json.loads(_core.oracle_twisted_json(cycle_type, q, budget, jobs, cache_dir, use_cache))


def verify(suite, cache_dir=None, use_cache=True):
    """List of check dicts for one suite: data, group, aggregation, zeros or oracle."""
    return json.loads(_core.verify_json(suite, cache_dir, use_cache))
