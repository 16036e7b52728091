# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""Cayley 变换浮点影子测试。矩阵指数以 scipy.linalg.expm 为参照。"""

import numpy as np
import pytest
import scipy.linalg
from conftest import EXACT_TRUE_LABELS, PADE_SLOPE_RANGE, RESIDUAL_FALSE, RESIDUAL_TRUE

from crep.analysis.cayleynum import (
    cayley,
    combine,
    expm_series,
    fit_loglog_slope,
    log_membership_residual,
    log_series,
    op_norm,
    pade_order_probe,
    random_direction,
    residual_survey,
)
from crep.config.settings import PADE_SCALES
from crep.core.errors import CayleyDomainError, DimensionMismatchError
from crep.reps.catalog import build_from_label


def _random_matrix(seed, n=4, norm=1.0):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return a * (norm / op_norm(a))


class TestCayley:
    def test_skew_symmetric_maps_to_orthogonal(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((5, 5))
        u = a - a.T
        q = cayley(u)
        np.testing.assert_allclose(q @ q.T, np.eye(5), atol=1e-12)

    def test_singular(self):
        with pytest.raises(CayleyDomainError):
            cayley(np.eye(3))

    def test_strictly_upper_gives_unipotent(self):
        u = np.array([[0, 1.0, 2.0], [0, 0, 3.0], [0, 0, 0]])
        c = cayley(u)
        np.testing.assert_allclose(np.tril(c, -1), 0, atol=1e-14)
        np.testing.assert_allclose(np.diag(c), 1, atol=1e-14)

    def test_inverse_relation(self):
        u = _random_matrix(1, norm=0.3)
        np.testing.assert_allclose(cayley(u) @ cayley(-u), np.eye(4), atol=1e-12)

    @pytest.mark.parametrize("label", EXACT_TRUE_LABELS + ("sl2-sym-3", "sl2-sym-4"))
    def test_involution_on_catalog(self, label):
        rep = build_from_label(label)
        identity = np.eye(rep.dim_V)
        for seed in range(100):
            u = combine(random_direction(rep, seed), rep)
            u = u * (0.3 / op_norm(u))
            np.testing.assert_allclose(cayley(u) @ cayley(-u), identity, atol=1e-12)


class TestSeries:
    @pytest.mark.parametrize("seed, norm", [(0, 0.1), (1, 1.0), (2, 3.0)])
    def test_expm_matches_scipy(self, seed, norm):
        a = _random_matrix(seed, norm=norm)
        np.testing.assert_allclose(expm_series(a), scipy.linalg.expm(a), rtol=1e-11, atol=1e-12)

    def test_log_inverts_exp(self):
        x = _random_matrix(4, norm=0.2)
        np.testing.assert_allclose(log_series(scipy.linalg.expm(x)), x, atol=1e-12)

    def test_log_outside_domain(self):
        with pytest.raises(CayleyDomainError):
            log_series(3 * np.eye(2))

    def test_log_of_identity(self):
        np.testing.assert_array_equal(log_series(np.eye(3)), np.zeros((3, 3)))


class TestResidual:
    @pytest.mark.parametrize("label", EXACT_TRUE_LABELS)
    def test_true_entries_have_tiny_residual(self, label):
        summary = residual_survey(build_from_label(label), seeds=20, norm=0.2)
        assert summary.median_residual < RESIDUAL_TRUE
        assert summary.verdict

    @pytest.mark.slow
    @pytest.mark.parametrize("label", ["soN-standard:D4", "spin8-plus", "spin8-minus"])
    def test_large_true_entries(self, label):
        assert residual_survey(build_from_label(label), seeds=20, norm=0.2).median_residual < RESIDUAL_TRUE

    @pytest.mark.parametrize("label", ["sl2-sym-3", "sl2-sym-4"])
    def test_false_entries_have_large_residual(self, label):
        summary = residual_survey(build_from_label(label), seeds=20, norm=0.2)
        assert summary.median_residual > RESIDUAL_FALSE
        assert not summary.verdict

    def test_scale_is_recorded(self):
        rep = build_from_label("sl2-sym-1")
        report = log_membership_residual(random_direction(rep, 0), rep, target_norm=5.0)
        assert report.scale * report.input_norm < 1 / 3
        assert report.series_terms > 0

    def test_zero_direction(self):
        rep = build_from_label("sl2-sym-1")
        assert log_membership_residual([0.0, 0.0, 0.0], rep).residual == 0.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            combine([1.0], build_from_label("sl2-sym-1"))


class TestPade:
    @pytest.mark.parametrize("seed", range(10))
    def test_cubic_order(self, seed):
        rep = build_from_label("soN-standard:B2")
        pairs = pade_order_probe(rep, random_direction(rep, seed), PADE_SCALES)
        low, high = PADE_SLOPE_RANGE
        assert low <= fit_loglog_slope(pairs) <= high

    def test_nilpotent_cube_is_exact(self):
        rep = build_from_label("unipotent-upper:3")
        pairs = pade_order_probe(rep, [1.0, 0.5, -2.0], PADE_SCALES)
        assert all(err < 1e-14 for _, err in pairs)

    def test_zero_direction(self):
        rep = build_from_label("sl2-sym-1")
        assert pade_order_probe(rep, [0.0, 0.0, 0.0], PADE_SCALES) == [(t, 0.0) for t in PADE_SCALES]

    @pytest.mark.parametrize("scales", [(0.1, 0.2), (0.1, -0.05), (0.1, 0.1)])
    def test_bad_scales(self, scales):
        rep = build_from_label("sl2-sym-1")
        with pytest.raises(ValueError):
            pade_order_probe(rep, [1.0, 0.0, 0.0], scales)

    def test_slope_needs_two_points(self):
        with pytest.raises(ValueError):
            fit_loglog_slope([(0.1, 0.0), (0.05, 1e-3)])

    def test_slope_of_exact_power_law(self):
        pairs = [(t, 2.0 * t ** 3) for t in (0.1, 0.05, 0.025)]
        assert fit_loglog_slope(pairs) == pytest.approx(3.0)
