import os

import pytest

import delpezzo2 as dp


CACHE = os.environ.get("DP2_TEST_CACHE")


def test_class_counts():
    assert dp.class_count("1A", 9) == 240
    assert dp.class_count("7A", 3) == 756
    assert dp.class_count("-7A", 3) == 756
    assert dp.class_count("2A", 5) == 240


def test_trace_counts():
    assert dp.trace_count(-4, 5) == 15120
    for q in (3, 5, 7, 9, 11, 13, 25, 27):
        for a in dp.possible_traces():
            assert dp.trace_count(a, q) == dp.trace_count(2 - a, q)
    big = dp.trace_count(1, 999983)
    assert isinstance(big, int) and big > 2**63


def test_points():
    assert dp.surface_point_count(8, 9) == 154
    assert dp.surface_point_count(-6, 9) == 28


def test_invalid_input():
    with pytest.raises(ValueError, match="characteristic 2"):
        dp.class_count("1A", 4)
    with pytest.raises(dp.InvalidInput):
        dp.trace_count(7, 3)
    with pytest.raises(ValueError):
        dp.class_count("9Z", 3)


def test_existence():
    classes, traces = dp.existence_exceptions(7)
    assert classes == ["1A", "-1A"]
    assert traces == [-6, 8]
    assert dp.existence_exceptions(9) == ([], [])
    assert dp.published_exceptions(5) == dp.existence_exceptions(5)


def test_data():
    assert dp.validate_data()
    assert len(dp.class_labels()) == 30
    assert dp.printed_polynomial("7A") == "(q^2 - q + 1)(q + 1)q^3"


def test_oracle_identity():
    r = dp.oracle_identity(9)
    assert r["orbit_count"] == 240 and r["match"]
    assert dp.pgl3_order(3) == 5616
    assert dp.feasibility("7", 3) == 4785157


def test_class_report_and_twisted_oracle():
    report = dp.class_report(cache_dir=CACHE)
    assert len(report["classes"]) == 60
    sizes = {c["name"]: c["size"] for c in report["classes"]}
    assert sizes["1A"] == 1 and sizes["2A"] == 63 and sizes["3A"] == 672
    r = dp.oracle_twisted((3, 3, 1), 3, cache_dir=CACHE)
    assert r["class_name"] == "3C"
    assert r["orbit_count"] == 60 and r["match"]


def test_verify_suite():
    checks = dp.verify("data")
    assert checks and all(c["passed"] for c in checks)
