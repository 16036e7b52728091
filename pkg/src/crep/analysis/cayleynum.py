# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
Cayley 变换与对数级数的浮点影子。

C(u) = (I + u)(I - u)⁻¹。‖u‖ < 1/3 时 C(u) ∈ ρ(G) ⟺ log(I + u) - log(I - u) ∈ dρ(𝔤)，
这里用 Mercator 级数计算对数，再以带列主元的 QR 求到基张成的最小二乘距离。
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..config.settings import (
    DEFAULT_SEED,
    EXPM_REL_TOL,
    LOG_DOMAIN_BOUND,
    LOG_DOMAIN_SAFETY,
    RESIDUAL_FALSE_THRESHOLD,
    RESIDUAL_NORM,
    RESIDUAL_SEEDS,
    RESIDUAL_TRUE_THRESHOLD,
    SERIES_MAX_TERMS,
    SERIES_REL_TOL,
)
from ..core.errors import CayleyDomainError, DimensionMismatchError, SeriesConvergenceError
from ..core.models import MatrixRep, NumericSummary, ResidualReport

logger = logging.getLogger(__name__)

# I - u 的条件数上限
_CONDITION_LIMIT = 1.0 / (64.0 * np.finfo(float).eps)
# QR 对角元低于此相对值视为数值相关
_RANK_TOL = 1e-12


def op_norm(a: np.ndarray) -> float:
    """算子 2-范数。"""
    return float(np.linalg.norm(a, 2))


def cayley(u: np.ndarray) -> np.ndarray:
    """
    计算 (I + u)(I - u)⁻¹。

    Raises:
        CayleyDomainError: I - u 奇异或接近奇异
    """
    u = np.asarray(u, dtype=np.complex128)
    identity = np.eye(u.shape[0], dtype=np.complex128)
    m = identity - u
    condition = np.linalg.cond(m)
    if not np.isfinite(condition) or condition > _CONDITION_LIMIT:
        raise CayleyDomainError(f"I - u 奇异或病态（条件数 {condition:.3e}）")
    # (I - u)⁻¹ 与 (I + u) 可交换
    return np.linalg.solve(m, identity + u)


def _log_series(a: np.ndarray) -> Tuple[np.ndarray, int, bool]:
    a = np.asarray(a, dtype=np.complex128)
    x = a - np.eye(a.shape[0], dtype=np.complex128)
    distance = op_norm(x)
    if distance >= 1.0:
        raise CayleyDomainError(f"对数级数要求 ‖a - I‖ < 1，实际为 {distance:.6f}")
    result = np.zeros_like(x)
    power = np.eye(a.shape[0], dtype=np.complex128)
    for k in range(1, SERIES_MAX_TERMS + 1):
        power = power @ x
        term = power / k if k % 2 else -power / k
        result = result + term
        term_norm = np.linalg.norm(term)
        if term_norm == 0.0 or term_norm <= SERIES_REL_TOL * np.linalg.norm(result):
            return result, k, True
    return result, SERIES_MAX_TERMS, False


def log_series(a: np.ndarray) -> np.ndarray:
    """
    Mercator 级数 log(a) = Σ (-1)^{k+1}(a - I)^k / k。

    项范数 ≤ 1e-16·结果范数或项为 0 时停止，至多 200 项。

    Raises:
        CayleyDomainError: ‖a - I‖ ≥ 1
    """
    result, _, _ = _log_series(a)
    return result


def expm_series(a: np.ndarray) -> np.ndarray:
    """缩放平方法的 Taylor 级数矩阵指数（仅作校验用）。"""
    a = np.asarray(a, dtype=np.complex128)
    norm = op_norm(a)
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0 else 0
    scaled = a / (2 ** squarings)
    result = np.eye(a.shape[0], dtype=np.complex128)
    term = np.eye(a.shape[0], dtype=np.complex128)
    for k in range(1, SERIES_MAX_TERMS + 1):
        term = term @ scaled / k
        result = result + term
        if np.linalg.norm(term) <= EXPM_REL_TOL * np.linalg.norm(result):
            break
    for _ in range(squarings):
        result = result @ result
    return result


def basis_arrays(r: MatrixRep) -> List[np.ndarray]:
    return [b.to_numpy() for b in r.algebra_basis]


def combine(coefficients: Sequence[float], r: MatrixRep) -> np.ndarray:
    """u = Σ cᵢ·Bᵢ（浮点）。"""
    if len(coefficients) != len(r.algebra_basis):
        raise DimensionMismatchError(
            f"{r.label} 有 {len(r.algebra_basis)} 个基元，收到 {len(coefficients)} 个系数"
        )
    u = np.zeros((r.dim_V, r.dim_V), dtype=np.complex128)
    for c, b in zip(coefficients, basis_arrays(r)):
        u = u + c * b
    return u


def random_direction(r: MatrixRep, seed: int) -> np.ndarray:
    """固定种子的高斯随机系数。"""
    rng = np.random.default_rng(seed)
    return rng.standard_normal(len(r.algebra_basis))


def _span_distance(v: np.ndarray, r: MatrixRep) -> Tuple[float, Optional[str]]:
    columns = np.stack([b.reshape(-1) for b in basis_arrays(r)], axis=1)
    q, upper, _ = scipy.linalg.qr(columns, mode="economic", pivoting=True)
    diagonal = np.abs(np.diag(upper))
    warning = None
    numeric_rank = int(np.sum(diagonal > _RANK_TOL * diagonal[0])) if diagonal.size else 0
    if numeric_rank < columns.shape[1]:
        warning = f"基矩阵数值相关（数值秩 {numeric_rank} < {columns.shape[1]}）"
    elif numeric_rank and diagonal[0] / diagonal[numeric_rank - 1] > 1e10:
        warning = f"基矩阵病态（|R₀₀|/|R_rr| = {diagonal[0] / diagonal[numeric_rank - 1]:.3e}）"
    vector = v.reshape(-1)
    q_r = q[:, :numeric_rank]
    projection = q_r @ (q_r.conj().T @ vector)
    return float(np.linalg.norm(vector - projection)), warning


def log_membership_residual(
    u_coeffs: Sequence[float],
    r: MatrixRep,
    target_norm: Optional[float] = None,
) -> ResidualReport:
    """
    v = log(I + u) - log(I - u) 到 span(dρ(𝔤)) 的相对距离 ‖v - Pv‖ / ‖v‖。

    ‖u‖ 不满足 ‖u‖ < 1/3（含 0.95 安全系数）时内部缩放并记录缩放因子。

    Args:
        u_coeffs: 基系数
        r: 矩阵表示
        target_norm: 给定时先把 u 缩放到该范数

    Raises:
        SeriesConvergenceError: 对数级数在项数上限内未收敛
    """
    u = combine(u_coeffs, r)
    input_norm = op_norm(u)
    scale = 1.0
    if target_norm is not None and input_norm > 0:
        scale = target_norm / input_norm
    limit = LOG_DOMAIN_BOUND * LOG_DOMAIN_SAFETY
    if input_norm * scale > limit:
        scale = limit / input_norm
    u = u * scale

    identity = np.eye(r.dim_V, dtype=np.complex128)
    plus, plus_terms, plus_ok = _log_series(identity + u)
    minus, minus_terms, minus_ok = _log_series(identity - u)
    if not (plus_ok and minus_ok):
        raise SeriesConvergenceError(f"{r.label} 的对数级数在 {SERIES_MAX_TERMS} 项内未收敛")
    v = plus - minus
    v_norm = float(np.linalg.norm(v))
    if v_norm == 0.0:
        residual, warning = 0.0, None
    else:
        distance, warning = _span_distance(v, r)
        residual = distance / v_norm
    if warning:
        logger.warning("%s: %s", r.label, warning)
    return ResidualReport(
        input_norm=input_norm,
        residual=residual,
        series_terms=max(plus_terms, minus_terms),
        scale=scale,
        condition_warning=warning,
    )


def residual_survey(
    r: MatrixRep,
    seeds: int = RESIDUAL_SEEDS,
    norm: float = RESIDUAL_NORM,
    base_seed: int = DEFAULT_SEED,
) -> NumericSummary:
    """对 seeds 个随机方向统计残差的中位数与最大值。"""
    residuals = [
        log_membership_residual(random_direction(r, base_seed + k), r, target_norm=norm).residual
        for k in range(seeds)
    ]
    median = float(np.median(residuals))
    summary = NumericSummary(
        seeds=seeds,
        norm=norm,
        median_residual=median,
        max_residual=float(np.max(residuals)),
        verdict=median < RESIDUAL_TRUE_THRESHOLD,
    )
    logger.info("%s 残差: 中位数=%.3e, 最大值=%.3e", r.label, summary.median_residual, summary.max_residual)
    if RESIDUAL_TRUE_THRESHOLD <= median <= RESIDUAL_FALSE_THRESHOLD:
        logger.warning("%s 残差中位数 %.3e 落在判真与判假阈值之间，结论不确定", r.label, median)
    return summary


def pade_order_probe(
    r: MatrixRep,
    direction_coeffs: Sequence[float],
    scales: Sequence[float],
) -> List[Tuple[float, float]]:
    """
    err(t) = ‖C(t·u/2) - exp(t·u)‖₂，u 归一化为单位算子范数。

    C(x/2) 是 exp(x) 的 (1, 1) 型 Padé 逼近，误差为 O(t³)。
    """
    if any(t <= 0 for t in scales):
        raise ValueError("scales 必须为正")
    if any(a <= b for a, b in zip(scales, scales[1:])):
        raise ValueError("scales 必须严格递减")
    u = combine(direction_coeffs, r)
    norm = op_norm(u)
    if norm == 0.0:
        return [(float(t), 0.0) for t in scales]
    u = u / norm
    pairs = []
    for t in scales:
        error = op_norm(cayley(t * u / 2) - expm_series(t * u))
        pairs.append((float(t), error))
    return pairs


def fit_loglog_slope(pairs: Sequence[Tuple[float, float]]) -> float:
    """log err 对 log t 的最小二乘斜率。"""
    points = [(t, e) for t, e in pairs if t > 0 and e > 0]
    if len(points) < 2:
        raise ValueError("拟合斜率至少需要两个正误差点")
    t_values = np.log([t for t, _ in points])
    e_values = np.log([e for _, e in points])
    slope, _ = np.polyfit(t_values, e_values, 1)
    return float(slope)
