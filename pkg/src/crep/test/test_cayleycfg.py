# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""Cayley 构型判定测试。"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crep.core.errors import NotDominantError, ZeroWeightError
from crep.lie.cayleycfg import cartan_cube_closure, is_cayley_configuration
from crep.lie.rootsys import (
    apply_diagram_automorphism,
    build_root_system,
    diagram_automorphisms,
    from_fundamental,
)
from crep.lie.weightlat import weight_set

H = Fraction(1, 2)


@pytest.mark.parametrize("family, rank, highest, expected", [
    ("A", 1, (H, -H), True),
    ("A", 1, (1, -1), True),
    ("A", 1, (Fraction(3, 2), Fraction(-3, 2)), False),
    ("A", 2, (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)), False),
    ("A", 3, (H, H, -H, -H), True),
    ("B", 2, (1, 0), True),
    ("B", 2, (H, H), True),
    ("B", 3, (1, 0, 0), True),
    ("B", 3, (H, H, H), False),
    ("C", 3, (1, 0, 0), True),
    ("C", 3, (1, 1, 0), False),
    ("D", 4, (1, 0, 0, 0), True),
    ("D", 4, (H, H, H, H), True),
    ("D", 4, (H, H, H, -H), True),
    ("D", 5, (H, H, H, H, H), False),
])
def test_verdicts(family, rank, highest, expected):
    rs = build_root_system(family, rank)
    report = is_cayley_configuration(highest, rs)
    assert report.verdict is expected
    assert is_cayley_configuration(highest, rs, short_circuit=True).verdict is expected


def test_true_report_fields():
    rs = build_root_system("B", 3)
    report = is_cayley_configuration((1, 0, 0), rs)
    assert report.orbit_size == 6
    assert report.orbit_rank == 3
    assert report.rank_needed == 3
    assert report.symmetric_about_origin
    assert report.support_minus_orbit == ((0, 0, 0),)
    assert report.witness is None


def test_witness_for_extra_nonzero_weight():
    rs = build_root_system("A", 1)
    report = is_cayley_configuration((Fraction(3, 2), Fraction(-3, 2)), rs)
    assert report.orbit_size == 2
    assert report.witness == (H, -H)


def test_witness_for_failed_orbit_condition():
    rs = build_root_system("A", 2)
    highest = from_fundamental((1, 1), rs)
    report = is_cayley_configuration(highest, rs)
    assert not report.verdict
    assert report.orbit_size == 6
    assert report.witness in weight_set(highest, rs)


def test_asymmetric_orbit():
    rs = build_root_system("A", 2)
    report = is_cayley_configuration(rs.fundamental_weights[0], rs)
    assert report.orbit_size == 3
    assert not report.symmetric_about_origin


def test_short_circuit_skips_support():
    rs = build_root_system("C", 3)
    report = is_cayley_configuration((1, 1, 0), rs, short_circuit=True)
    assert report.orbit_rank is None
    assert report.support_minus_orbit is None


def test_zero_weight_rejected():
    with pytest.raises(ZeroWeightError):
        is_cayley_configuration((0, 0), build_root_system("B", 2))


def test_not_dominant_rejected():
    with pytest.raises(NotDominantError):
        is_cayley_configuration((0, 1), build_root_system("B", 2))


@given(
    st.sampled_from([("A", 3), ("D", 4), ("D", 5)]),
    st.data(),
)
def test_verdict_invariant_under_diagram_automorphisms(system, data):
    rs = build_root_system(*system)
    coeffs = data.draw(st.lists(st.integers(0, 1), min_size=rs.rank, max_size=rs.rank).filter(any))
    highest = from_fundamental(coeffs, rs)
    verdict = is_cayley_configuration(highest, rs, short_circuit=True).verdict
    for perm in diagram_automorphisms(rs):
        image = apply_diagram_automorphism(highest, rs, perm)
        assert is_cayley_configuration(image, rs, short_circuit=True).verdict is verdict


class TestCubeClosure:
    def test_cross_polytope(self):
        support = {(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)}
        assert cartan_cube_closure(support, 2)

    def test_dependent_extra_weight(self):
        assert not cartan_cube_closure({(1, 0), (0, 1), (1, 1)}, 2)

    def test_origin_only(self):
        assert cartan_cube_closure({(0, 0)}, 2)

    def test_rank_exceeded(self):
        assert not cartan_cube_closure({(1, 0, 0), (0, 1, 0), (0, 0, 1)}, 2)

    def test_rank_deficient(self):
        assert not cartan_cube_closure({(1, 0), (-1, 0), (0, 0)}, 2)
        assert cartan_cube_closure({(1, -1), (-1, 1)}, 1)
