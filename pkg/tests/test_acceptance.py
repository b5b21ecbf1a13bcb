"""One test per acceptance criterion; each prints its PASS/FAIL line.

The same lines are repeated in the terminal summary, so they show up in
plain `pytest -v` output without `-s`.
"""

import pytest

import acceptance as acc


def _report(result):
    print(result.report())
    return result


def test_criterion_1_closed_forms():
    r = _report(acc.closed_forms())
    assert r.passed, r.report()


def test_criterion_2_golden_type1_colouring():
    r = _report(acc.golden_type1())
    assert r.passed, r.report()


def test_criterion_3_dense_path_constructions():
    r = _report(acc.dense_path_suites())
    assert r.passed, r.report()


@pytest.fixture(scope="module")
def certificates():
    return _report(acc.pivoted_certificate()), acc.pivoted_certificate_literal(), acc.pivoted_certificate_smallest()


def test_criterion_4_stated_seven_vertex_instance(certificates):
    _, literal, _ = certificates
    assert literal.passed, literal.report()


def test_criterion_4_smallest_type2_instance(certificates):
    _, _, smallest = certificates
    assert smallest.passed, smallest.report()


def test_criterion_5_small_m_sweep():
    r = _report(acc.small_m_sweep())
    assert r.passed, r.report()


def test_criterion_6_differential_fuzzing():
    r = _report(acc.differential_fuzz())
    assert r.passed, r.report()


def test_criterion_7_reduction_integrity():
    r = _report(acc.reduction_integrity())
    assert r.passed, r.report()


def test_criterion_8_structural_properties():
    r = _report(acc.structural_suite())
    assert r.passed, r.report()
