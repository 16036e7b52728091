# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""有界分类搜索测试。"""

from fractions import Fraction

import pytest

from crep.analysis.classify import (
    catalog_label_for,
    classify,
    enumerate_dominant,
    full_report,
    identify,
    true_rows,
)
from crep.analysis.powerspan import check_power_span
from crep.lie.rootsys import build_root_system, orbit_rank
from crep.reps.catalog import build_from_label

H = Fraction(1, 2)

# max_rank 4, bound 3 窗口内的全部真行
EXPECTED_WINDOW = {
    ("A", 1, (1,)),
    ("A", 1, (2,)),
    ("A", 3, (0, 1, 0)),
    ("B", 2, (1, 0)),
    ("B", 2, (0, 1)),
    ("B", 3, (1, 0, 0)),
    ("B", 4, (1, 0, 0, 0)),
    ("C", 3, (1, 0, 0)),
    ("C", 4, (1, 0, 0, 0)),
    ("D", 4, (1, 0, 0, 0)),
    ("D", 4, (0, 0, 1, 0)),
    ("D", 4, (0, 0, 0, 1)),
}


@pytest.fixture(scope="module")
def window_rows():
    return full_report(4, 3)


def test_window_true_rows(window_rows):
    found = {(row.family, row.rank, row.coeffs) for row in true_rows(window_rows)}
    assert found == EXPECTED_WINDOW
    assert len(found) == 12


def test_window_is_sorted(window_rows):
    keys = [(row.family, row.rank, row.coeffs) for row in window_rows]
    assert keys == sorted(keys)
    assert len(keys) == 3 + 15 + 63 + 255 + 15 + 63 + 255 + 63 + 255 + 255


def test_every_true_row_is_identified(window_rows):
    for row in true_rows(window_rows):
        assert row.identification is not None
        assert row.compact_form is not None


def test_a2_has_no_true_rows():
    assert true_rows(classify("A", 2, 3)) == []


def test_d4_bound_two():
    highest = {row.highest for row in true_rows(classify("D", 4, 2))}
    assert highest == {(1, 0, 0, 0), (H, H, H, H), (H, H, H, -H)}


def test_b2_bound_two():
    highest = {row.highest for row in true_rows(classify("B", 2, 2))}
    assert highest == {(1, 0), (H, H)}


def test_monotone_in_bound():
    for family, rank in (("A", 3), ("B", 2), ("C", 3)):
        smaller = {row.coeffs for row in true_rows(classify(family, rank, 1))}
        larger = {row.coeffs for row in true_rows(classify(family, rank, 2))}
        assert smaller <= larger


def test_no_a_family_rows_above_rank_three():
    assert true_rows(classify("A", 4, 2)) == []
    assert true_rows(classify("A", 5, 1)) == []


def test_true_rows_have_full_orbit_rank(window_rows):
    for row in true_rows(window_rows):
        rs = build_root_system(row.family, row.rank)
        assert orbit_rank(row.highest, rs) == row.rank


@pytest.mark.slow
def test_extended_search():
    found = {(row.family, row.rank, row.coeffs) for row in true_rows(full_report(8, 2))}
    standards = {
        (family, rank, (1,) + (0,) * (rank - 1))
        for family, low in (("B", 5), ("C", 5), ("D", 5))
        for rank in range(low, 9)
    }
    window = {key for key in EXPECTED_WINDOW if max(key[2]) <= 2}
    assert found == window | standards


@pytest.mark.parametrize("family, rank, coeffs, name, compact", [
    ("A", 1, (1,), "standard", "(su_2, C^2)"),
    ("A", 3, (0, 1, 0), "lambda2-sl4", "(su_4, Λ²C^4)"),
    ("B", 2, (0, 1), "spin-B2", "(so_5(R), S) ≃ (u_2(H), H^2)"),
    ("B", 5, (1, 0, 0, 0, 0), "standard", "(so_11(R), C^11)"),
    ("C", 3, (1, 0, 0), "standard", "(u_3(H), H^3)"),
    ("D", 6, (1, 0, 0, 0, 0, 0), "standard", "(so_12(R), C^12)"),
    ("A", 2, (1, 1), None, None),
])
def test_identify(family, rank, coeffs, name, compact):
    assert identify(family, rank, coeffs) == (name, compact)


def test_catalog_rows_pass_exact_check(window_rows):
    checked = 0
    for row in true_rows(window_rows):
        label = catalog_label_for(row)
        if label is None or label in ("soN-standard:D4", "spin8-plus", "spin8-minus", "soN-standard:B4",
                                      "sp2n-standard:C4"):
            continue
        assert check_power_span(build_from_label(label)).verdict
        checked += 1
    assert checked >= 6


def test_enumerate_dominant():
    rs = build_root_system("B", 2)
    weights = enumerate_dominant(rs, 1)
    assert weights == [(H, H), (1, 0), (Fraction(3, 2), H)]


@pytest.mark.parametrize("max_rank, bound", [(0, 1), (9, 1), (4, 0), (4, 4)])
def test_full_report_limits(max_rank, bound):
    with pytest.raises(ValueError):
        full_report(max_rank, bound)


def test_classify_rejects_zero_bound():
    with pytest.raises(ValueError):
        classify("B", 2, 0)
