# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
精确线性规划可行性。

凸组合判定化为 A·λ = b, λ ≥ 0 的可行性，用 Fraction 上的两阶段单纯形第一阶段求解，
Bland 规则保证终止。
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from ..core.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def lp_feasible_convex_combination(p: Sequence, points: Sequence[Sequence]) -> bool:
    """是否存在 λ ≥ 0, Σλ = 1, Σλᵢ·pointsᵢ = p。"""
    if not points:
        raise ValueError("点集为空，无法构成凸组合")
    dim = len(p)
    if any(len(point) != dim for point in points):
        raise DimensionMismatchError("点的维数不一致")

    rows: List[List[Fraction]] = []
    for i in range(dim):
        rows.append([Fraction(point[i]) for point in points] + [Fraction(p[i])])
    rows.append([_ONE] * len(points) + [_ONE])
    return feasible_nonnegative(rows, len(points))


def feasible_nonnegative(rows: Sequence[Sequence[Fraction]], n_vars: int) -> bool:
    """
    判定 A·x = b, x ≥ 0 是否可行。

    Args:
        rows: 增广行 [A_i | b_i]
        n_vars: 结构变量个数

    Returns:
        可行时为 True
    """
    k = len(rows)
    width = n_vars + k + 1
    rhs = width - 1
    tableau: List[List[Fraction]] = []
    for i, row in enumerate(rows):
        sign = -1 if row[-1] < 0 else 1
        line = [sign * Fraction(v) for v in row[:n_vars]] + [_ZERO] * k + [sign * Fraction(row[-1])]
        line[n_vars + i] = _ONE
        tableau.append(line)
    basis = [n_vars + i for i in range(k)]

    # 目标行 z_j = -d_j；人工变量列初值为 0
    objective = [sum(tableau[i][j] for i in range(k)) for j in range(n_vars)] + [_ZERO] * k
    objective.append(sum(tableau[i][rhs] for i in range(k)))

    iterations = 0
    while True:
        entering = next((j for j in range(width - 1) if objective[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(k):
            coefficient = tableau[i][entering]
            if coefficient <= 0:
                continue
            ratio = tableau[i][rhs] / coefficient
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and basis[i] < basis[leaving])
            ):
                best_ratio = ratio
                leaving = i
        if leaving is None:
            # 第一阶段目标有下界 0，不会无界
            raise RuntimeError("单纯形第一阶段出现无界方向")
        _pivot(tableau, objective, leaving, entering)
        basis[leaving] = entering
        iterations += 1

    logger.debug("单纯形第一阶段结束: iterations=%d, w=%s", iterations, objective[rhs])
    return objective[rhs] == 0


def _pivot(tableau: List[List[Fraction]], objective: List[Fraction], r: int, c: int) -> None:
    pivot_row = tableau[r]
    inverse = 1 / pivot_row[c]
    tableau[r] = pivot_row = [v * inverse for v in pivot_row]
    for i, row in enumerate(tableau):
        if i == r:
            continue
        factor = row[c]
        if factor:
            tableau[i] = [a - factor * b for a, b in zip(row, pivot_row)]
    factor = objective[c]
    if factor:
        objective[:] = [a - factor * b for a, b in zip(objective, pivot_row)]
