"""Acceptance battery: one test per criterion, each printing its
pass/fail line.  Run with ``pytest tests/test_acceptance.py -s`` to see
the lines as they complete; the same checks back the CLI selftest."""

import pytest

from sclgap import acceptance


def _run(criterion):
    res = criterion()
    status = "PASS" if res.passed else "FAIL"
    print(f"\n{status} criterion {res.number} ({res.name}): {res.detail}")
    assert res.passed, res.detail


def test_criterion_1_headline_bound():
    _run(acceptance.criterion_1)


def test_criterion_2_desk_scale_gap():
    _run(acceptance.criterion_2)


def test_criterion_3_thinness_preservation():
    _run(acceptance.criterion_3)


def test_criterion_4_defect_laws():
    _run(acceptance.criterion_4)


def test_criterion_5_collapse_dynamics():
    _run(acceptance.criterion_5)


def test_criterion_6_power_splitting():
    _run(acceptance.criterion_6)


def test_criterion_7_amalgam_consistency():
    _run(acceptance.criterion_7)


def test_criterion_8_order_oracle_soundness():
    _run(acceptance.criterion_8)


def test_criterion_9_raag_theorem():
    _run(acceptance.criterion_9)


def test_criterion_10_no_exact_scl_reproduction():
    _run(acceptance.criterion_10)


def test_criterion_11_homogenization_cross_check():
    _run(acceptance.criterion_11)
