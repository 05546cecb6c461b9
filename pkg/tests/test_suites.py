import pytest

from errors import CapExceededError, ParameterRangeError
from json_codec import REPORT_SCHEMA, validate
from suites import SUITES, run_suite

CAPS = {"max_n": 4, "max_r": 4, "max_basis": 10000, "max_group_rank": 5}


def test_dimension_suite():
    report = run_suite("dimension", 2, 2)
    assert report.ok
    assert report.cases == 2


def test_short_suite_counts_cases():
    report = run_suite("short", 1, 1)
    assert report.ok
    assert report.cases == 2


@pytest.mark.parametrize("suite,n,r,options", [
    ("short", 2, 1, {}),
    ("multi", 2, 2, {"m_max": 2}),
    ("relations", 2, 1, {}),
    ("commuting", 1, 1, {}),
    ("kbinom", 2, 2, {}),
    ("triangular", 1, 2, {}),
    ("leading", 2, 1, {}),
    ("divided", 1, 2, {"jbox": 0}),
    ("long", 1, 2, {"jbox": 1, "max_half": 1}),
    ("stability", 1, 1, {"jbox": 0, "max_half": 1}),
])
def test_suites_pass(suite, n, r, options):
    report = run_suite(suite, n, r, **options)
    assert report.cases > 0
    assert report.ok, report.failed[:1]


def test_perturbed_long_suite_fails():
    report = run_suite("long", 1, 2, jbox=0, max_half=1, perturb=True)
    assert not report.ok
    assert report.failure_count == report.cases
    data = report.to_json()
    validate(data, REPORT_SCHEMA, "report")
    assert data["failure_count"] == len(data["failures"]) == report.cases
    assert data["failures"][0] == report.failed[0].to_json()
    assert set(data["failures"][0]) == {"case", "lhs", "rhs"}


def test_report_json_and_timing():
    report = run_suite("dimension", 1, 1)
    data = report.to_json()
    validate(data, REPORT_SCHEMA, "report")
    assert data["failures"] == [] and data["failure_count"] == 0
    assert "wall_time" not in data
    assert data["grid"] == {"n": 1, "r": 1}
    assert "wall_time" in report.to_json(timing=True)


def test_threads_keep_report_order():
    single = run_suite("short", 1, 2, threads=1).to_json()
    pooled = run_suite("short", 1, 2, threads=3).to_json()
    assert single == pooled


def test_stability_grid_records_r_set():
    report = run_suite("stability", 1, 1, jbox=0, max_half=1, r_set=(1, 2, 3))
    assert report.grid["r_set"] == [1, 2, 3]
    assert report.ok


def test_unknown_suite():
    assert "dimension" in SUITES
    with pytest.raises(ParameterRangeError):
        run_suite("nonsense", 1, 1)


def test_caps_are_checked():
    with pytest.raises(CapExceededError):
        run_suite("dimension", 5, 1, caps=CAPS)
    with pytest.raises(CapExceededError):
        run_suite("stability", 1, 4, caps=CAPS)


@pytest.mark.parametrize("suite,n,r,options", [
    ("dimension", 2, 3, {}),
    ("dimension", 3, 2, {}),
    ("short", 2, 2, {}),
    ("short", 2, 3, {}),
    ("multi", 2, 2, {"m_max": 3}),
    ("multi", 2, 3, {"m_max": 3}),
    ("triangular", 2, 2, {}),
    ("leading", 2, 2, {}),
    ("commuting", 1, 2, {}),
    ("commuting", 2, 2, {}),
    ("commuting", 2, 3, {}),
    ("kbinom", 3, 2, {}),
    ("divided", 1, 2, {"m_max": 3, "jbox": 0}),
    ("divided", 2, 2, {"m_max": 3, "jbox": 0}),
    ("divided", 2, 3, {"m_max": 3, "jbox": 0}),
])
def test_acceptance_grids(suite, n, r, options):
    report = run_suite(suite, n, r, caps=CAPS, **options)
    assert report.cases > 0
    assert report.ok, [c.label for c in report.failed[:3]]


@pytest.mark.parametrize("options", [
    {"jbox": -3},
    {"m_max": 0},
    {"max_half": -1},
    {"r_set": (0, 1)},
])
def test_options_out_of_range(options):
    with pytest.raises(ParameterRangeError):
        run_suite("long", 1, 2, **options)


def test_threads_out_of_range():
    with pytest.raises(ParameterRangeError):
        run_suite("dimension", 1, 1, threads=0)


@pytest.mark.parametrize("suite,expected", [
    ("dimension", {"n": 2, "r": 2}),
    ("short", {"n": 2, "r": 2}),
    ("multi", {"n": 2, "r": 2, "m_max": 2}),
    ("divided", {"n": 2, "r": 2, "jbox": 0, "m_max": 2}),
])
def test_grid_records_only_used_options(suite, expected):
    report = run_suite(suite, 2, 2, jbox=0, m_max=2, perturb=True)
    assert report.grid == expected
