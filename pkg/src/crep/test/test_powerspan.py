# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""幂张成精确判据测试，并与几何判据交叉校验。"""

import pytest
from conftest import EXACT_FALSE_LABELS, EXACT_TRUE_LABELS, EXACT_TRUE_LARGE_LABELS

from crep.core.errors import NonCommutingCartanError
from crep.core.models import MatrixRep
from crep.exact.matrix import ExactMatrix
from crep.lie.cayleycfg import is_cayley_configuration
from crep.lie.rootsys import build_root_system
from crep.analysis.powerspan import (
    check_cartan_s3,
    check_commutator_closure,
    check_odd_powers,
    check_power_span,
    residual_in_span,
)
from crep.reps.catalog import build_from_label, direct_sum


@pytest.mark.parametrize("label", EXACT_TRUE_LABELS)
def test_power_span_true(label):
    verdict = check_power_span(build_from_label(label))
    assert verdict.verdict
    assert verdict.failing_triple is None
    assert verdict.triples_checked > 0


@pytest.mark.slow
@pytest.mark.parametrize("label", EXACT_TRUE_LARGE_LABELS)
def test_power_span_true_large(label):
    assert check_power_span(build_from_label(label)).verdict


@pytest.mark.parametrize("label", EXACT_FALSE_LABELS)
def test_power_span_false_with_witness(label):
    rep = build_from_label(label)
    verdict = check_power_span(rep)
    assert not verdict.verdict
    i, j, k = verdict.failing_triple
    assert i <= k
    basis = rep.algebra_basis
    witness = basis[i] @ basis[j] @ basis[k] + basis[k] @ basis[j] @ basis[i]
    assert witness == verdict.residual_witness
    assert not residual_in_span(rep, witness)


def test_sl2_sym3_cube_of_e_plus_f():
    rep = build_from_label("sl2-sym-3")
    _, e, f = rep.algebra_basis
    u = e + f
    assert not residual_in_span(rep, u @ u @ u)


def test_unipotent_products_vanish():
    rep = build_from_label("unipotent-upper:3")
    e12, _, e23 = rep.algebra_basis
    assert (e12 @ e23 @ e12).is_zero()


def test_direct_sum_inherits_failure():
    rep = direct_sum(build_from_label("sl2-sym-1"), build_from_label("sl2-sym-3"))
    assert rep.dim_V == 6
    assert not check_power_span(rep).verdict


def test_direct_sum_of_cayley_summands():
    rep = direct_sum(build_from_label("sl2-sym-1"), build_from_label("sl2-sym-2"))
    assert rep.dim_V == 5
    assert check_power_span(rep).verdict


@pytest.mark.parametrize("left, right", [
    ("sl2-sym-1", "sl2-sym-1"),
    ("sl2-sym-1", "sl2-sym-2"),
    ("sl2-sym-1", "sl2-adjoint"),
    ("sl2-sym-2", "sl2-sym-3"),
    ("sl2-sym-3", "sl2-sym-1"),
    ("sl2-sym-4", "sl2-sym-2"),
    ("sl2-sym-3", "sl2-sym-4"),
])
def test_direct_sum_verdict_is_conjunction(left, right):
    a = build_from_label(left)
    b = build_from_label(right)
    expected = check_power_span(a).verdict and check_power_span(b).verdict
    assert check_power_span(direct_sum(a, b)).verdict is expected
    assert check_cartan_s3(direct_sum(a, b)) is expected


@pytest.mark.parametrize("label", EXACT_TRUE_LABELS + EXACT_FALSE_LABELS)
def test_cartan_criterion_agrees_on_semisimple(label):
    rep = build_from_label(label)
    if not rep.semisimple:
        pytest.skip("Cartan 判据只适用于半单代数")
    assert check_cartan_s3(rep) is check_power_span(rep).verdict


@pytest.mark.parametrize("label", EXACT_TRUE_LABELS + EXACT_FALSE_LABELS)
def test_geometric_criterion_agrees(label):
    rep = build_from_label(label)
    if rep.highest is None or rep.family is None:
        pytest.skip("没有最高权")
    rs = build_root_system(rep.family, rep.rank)
    assert is_cayley_configuration(rep.highest, rs).verdict is check_power_span(rep).verdict


@pytest.mark.parametrize("label, expected", [
    ("sl2-sym-2", True),
    ("spin-so5", True),
    ("sl2-sym-3", False),
    ("sl2-sym-4", False),
])
def test_odd_powers_sampling(label, expected):
    assert check_odd_powers(build_from_label(label), max_k=3, samples=5, seed=0) is expected


def test_odd_powers_rejects_bad_arguments():
    with pytest.raises(ValueError):
        check_odd_powers(build_from_label("sl2-sym-1"), max_k=0, samples=1, seed=0)


def test_cartan_s3_empty_cartan():
    assert check_cartan_s3(build_from_label("unipotent-upper:3"))


def _rep(basis, cartan):
    return MatrixRep(
        label="handmade",
        dim_V=basis[0].rows,
        algebra_basis=tuple(basis),
        cartan_basis=tuple(cartan),
        weight_labels=tuple(() for _ in range(basis[0].rows)),
        cartan_coords=(),
        semisimple=False,
    )


def test_non_commuting_cartan():
    x = ExactMatrix.from_rows([[0, 1], [1, 0]])
    z = ExactMatrix.from_rows([[1, 0], [0, -1]])
    with pytest.raises(NonCommutingCartanError):
        check_cartan_s3(_rep([x, z], [x, z]))


def test_non_diagonal_commuting_cartan():
    x = ExactMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        check_cartan_s3(_rep([x], [x]))


def test_not_a_subalgebra():
    e = ExactMatrix.elementary(2, 0, 1)
    f = ExactMatrix.elementary(2, 1, 0)
    rep = _rep([e, f], [])
    assert not check_commutator_closure(rep)
    with pytest.raises(ValueError):
        check_power_span(rep)
