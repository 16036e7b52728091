# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""权集合、重数与权图测试。以 Weyl 维数公式为独立参照。"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crep.core.errors import NotDominantError
from crep.lie.rootsys import add, build_root_system, from_fundamental, inner, supported_systems
from crep.lie.weightlat import (
    dominant_multiplicities,
    dominant_weights,
    freudenthal_multiplicity,
    hull_coset_oracle,
    is_self_dual,
    precedes,
    require_dominant,
    support_size,
    weight_balance,
    weight_diagram,
    weight_set,
)

H = Fraction(1, 2)


def weyl_dimension(highest, rs) -> int:
    shifted = add(highest, rs.rho)
    value = Fraction(1)
    for alpha in rs.positive_roots:
        value *= inner(shifted, alpha) / inner(rs.rho, alpha)
    assert value.denominator == 1
    return int(value)


@pytest.mark.parametrize("family, rank, coeffs, dim", [
    ("A", 2, (1, 1), 8),
    ("A", 3, (0, 1, 0), 6),
    ("B", 2, (1, 0), 5),
    ("B", 2, (0, 1), 4),
    ("B", 2, (1, 1), 16),
    ("C", 3, (0, 1, 0), 14),
    ("D", 4, (0, 0, 0, 1), 8),
    ("D", 4, (0, 1, 0, 0), 28),
])
def test_known_dimensions(family, rank, coeffs, dim):
    rs = build_root_system(family, rank)
    diagram = weight_diagram(from_fundamental(coeffs, rs), rs)
    assert diagram.dimension == dim


@given(
    st.sampled_from([("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)]),
    st.data(),
)
def test_dimension_matches_weyl_formula(system, data):
    rs = build_root_system(*system)
    coeffs = data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank))
    highest = from_fundamental(coeffs, rs)
    assert weight_diagram(highest, rs).dimension == weyl_dimension(highest, rs)


def test_zero_weight_multiplicity_of_adjoints():
    a2 = build_root_system("A", 2)
    assert freudenthal_multiplicity((1, 0, -1), (0, 0, 0), a2) == 2
    d4 = build_root_system("D", 4)
    assert dominant_multiplicities((1, 1, 0, 0), d4)[(0, 0, 0, 0)] == 4


def test_multiplicity_outside_support_is_zero():
    a2 = build_root_system("A", 2)
    assert freudenthal_multiplicity((1, 0, -1), (2, -1, -1), a2) == 0


def test_dominant_weights_start_with_highest():
    rs = build_root_system("B", 2)
    weights = dominant_weights((1, 1), rs)
    assert weights[0] == (1, 1)
    assert set(weights) == {(1, 1), (1, 0), (0, 0)}


@pytest.mark.parametrize("family, rank, highest", [
    ("A", 2, (1, 0, -1)),
    ("A", 3, (H, H, -H, -H)),
    ("B", 2, (Fraction(3, 2), H)),
    ("C", 3, (1, 0, 0)),
])
def test_weight_set_matches_hull_oracle(family, rank, highest):
    rs = build_root_system(family, rank)
    assert weight_set(highest, rs) == hull_coset_oracle(highest, rs)


@pytest.mark.slow
def test_weight_set_matches_hull_oracle_b3():
    rs = build_root_system("B", 3)
    highest = from_fundamental((1, 0, 1), rs)
    assert weight_set(highest, rs) == hull_coset_oracle(highest, rs)


@pytest.mark.slow
@pytest.mark.parametrize("rs", supported_systems(4), ids=lambda rs: rs.name)
def test_window_sweep_matches_independent_checks(rs):
    for coeffs in product(range(4), repeat=rs.rank):
        highest = from_fundamental(coeffs, rs)
        diagram = weight_diagram(highest, rs)
        assert diagram.dimension == weyl_dimension(highest, rs), coeffs
        assert weight_balance(diagram) == rs.zero(), coeffs
        assert weight_set(highest, rs) == hull_coset_oracle(highest, rs), coeffs


@pytest.mark.parametrize("family, rank, coeffs", [
    ("A", 2, (2, 1)),
    ("B", 3, (1, 1, 0)),
    ("D", 4, (1, 0, 0, 1)),
])
def test_support_size_and_balance(family, rank, coeffs):
    rs = build_root_system(family, rank)
    highest = from_fundamental(coeffs, rs)
    diagram = weight_diagram(highest, rs)
    assert support_size(highest, rs) == len(weight_set(highest, rs)) == len(diagram.mult)
    assert weight_balance(diagram) == rs.zero()


def test_self_duality():
    a2 = build_root_system("A", 2)
    assert not is_self_dual(weight_diagram(a2.fundamental_weights[0], a2))
    a3 = build_root_system("A", 3)
    assert is_self_dual(weight_diagram((H, H, -H, -H), a3))
    d4 = build_root_system("D", 4)
    assert is_self_dual(weight_diagram((H, H, H, H), d4))


def test_precedes():
    rs = build_root_system("B", 2)
    assert precedes((0, 0), (1, 0), rs)
    assert precedes((1, 0), (1, 1), rs)
    assert not precedes((H, H), (1, 0), rs)
    assert not precedes((1, 1), (1, 0), rs)


class TestRequireDominant:
    def test_not_dominant(self):
        with pytest.raises(NotDominantError):
            require_dominant((0, 1), build_root_system("B", 2))

    def test_not_integral(self):
        with pytest.raises(NotDominantError):
            require_dominant((Fraction(1, 3), 0), build_root_system("B", 2))

    def test_a_type_is_canonicalised(self):
        rs = build_root_system("A", 2)
        assert require_dominant((1, 0, 0), rs) == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            require_dominant((1, 0), build_root_system("B", 3))
