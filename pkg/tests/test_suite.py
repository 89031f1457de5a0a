import json

import pytest

from kreinalg.suite import (DEFAULT_COUNTS, bk_converse_battery,
                            bk_roundtrip_battery, run_property_suite)


def test_report_shape_and_determinism():
    a = run_property_suite(31, count=8)
    b = run_property_suite(31, count=8)
    assert a == b
    assert a["schema_version"] == 1
    assert a["seed"] == 31
    assert [x["name"] for x in a["batteries"]] == list(DEFAULT_COUNTS)
    json.dumps(a)          # every value must serialize


def test_count_zero_is_vacuous():
    rep = run_property_suite(1, count=0)
    assert rep["passed"]
    for b in rep["batteries"]:
        assert b["cases"] == 0 and b["failures"] == 0


def test_seed_changes_streams():
    a = run_property_suite(1, count=4)
    b = run_property_suite(2, count=4)
    assert a != b


def test_roundtrip_battery_counts_kernels():
    rep = bk_roundtrip_battery(5, count=40)
    assert rep["passed"]
    assert rep["kernel_cases"] >= rep["kernel_cases_required"]
    assert rep["worst_product_residual"] <= 1e-8


def test_converse_battery_refactorizations():
    rep = bk_converse_battery(5, count=30, refactor=5)
    assert rep["passed"]
    assert rep["refactorizations"] == 5
    assert rep["refactorization_failures"] == 0


@pytest.fixture(scope="module")
def small_report():
    return run_property_suite(77, count=12)


@pytest.mark.parametrize("name", list(DEFAULT_COUNTS))
def test_batteries_pass_small(small_report, name):
    found = {b["name"]: b for b in small_report["batteries"]}[name]
    assert found["passed"], found
