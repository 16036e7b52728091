# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
幂张成性质的精确判定。

𝔲 ⊆ 𝔤𝔩(V) 对奇次幂封闭 ⟺ 对所有 a, b, c ∈ 𝔲 有 abc + cba ∈ 𝔲；
由三线性只需检查基元三元组。半单情形下等价于 Cartan 子代数对三次对称积封闭。
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from ..core.errors import NonCommutingCartanError
from ..core.models import MatrixRep, SpanVerdict
from ..exact.matrix import ExactMatrix, ExactSpan, commutator, linear_combination

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def algebra_span(r: MatrixRep) -> ExactSpan:
    """dρ(𝔤) 的精确张成（只读使用）。"""
    return ExactSpan(r.algebra_basis, length=r.dim_V * r.dim_V)


def commutator_failure(r: MatrixRep) -> Optional[Tuple[int, int]]:
    """第一个 [Bᵢ, Bⱼ] ∉ span 的基元对，封闭时为 None。"""
    span = algebra_span(r)
    basis = r.algebra_basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not span.contains(commutator(basis[i], basis[j])):
                return i, j
    return None


def check_commutator_closure(r: MatrixRep) -> bool:
    failure = commutator_failure(r)
    if failure is not None:
        logger.warning("%s 的基对换位子不封闭: %s", r.label, failure)
    return failure is None


def check_power_span(r: MatrixRep) -> SpanVerdict:
    """
    逐个检查 BᵢBⱼBₖ + BₖBⱼBᵢ ∈ span(algebra_basis)。

    三元组按 i ≤ k、j 任意的字典序遍历，失败时报告字典序最小的三元组。

    Raises:
        ValueError: algebra_basis 不是李子代数
    """
    failure = commutator_failure(r)
    if failure is not None:
        raise ValueError(f"{r.label} 的基不构成李子代数，[B{failure[0]}, B{failure[1]}] 不在张成中")

    span = algebra_span(r)
    basis = r.algebra_basis
    count = len(basis)
    pairs = [[basis[i] @ basis[j] for j in range(count)] for i in range(count)]

    checked = 0
    for i in range(count):
        for j in range(count):
            for k in range(i, count):
                product = pairs[i][j] @ basis[k] + pairs[k][j] @ basis[i]
                checked += 1
                if not span.contains(product):
                    logger.info("%s 幂张成失败: 三元组 (%d, %d, %d)", r.label, i, j, k)
                    return SpanVerdict(
                        verdict=False,
                        failing_triple=(i, j, k),
                        residual_witness=product,
                        triples_checked=checked,
                    )
    logger.info("%s 幂张成成立: 检查三元组 %d 个", r.label, checked)
    return SpanVerdict(verdict=True, triples_checked=checked)


def check_odd_powers(r: MatrixRep, max_k: int, samples: int, seed: int) -> bool:
    """
    随机抽样 u = Σ cᵢBᵢ（cᵢ ∈ {-2, …, 2}），检查 u^{2k+1} ∈ span，k ≤ max_k。

    只是必要性检查，用于与 check_power_span 交叉验证。
    """
    if max_k < 1 or samples < 1:
        raise ValueError(f"max_k 与 samples 必须为正: max_k={max_k}, samples={samples}")
    span = algebra_span(r)
    rng = np.random.default_rng(seed)
    for sample in range(samples):
        coefficients = [int(c) for c in rng.integers(-2, 3, size=len(r.algebra_basis))]
        u = linear_combination(coefficients, r.algebra_basis)
        square = u @ u
        power = u
        for k in range(1, max_k + 1):
            power = power @ square
            if not span.contains(power):
                logger.info("%s 奇次幂检查失败: 样本 %d, 幂次 %d", r.label, sample, 2 * k + 1)
                return False
    return True


def _diagonal_vectors(r: MatrixRep) -> List[tuple]:
    cartan = r.cartan_basis
    if all(h.is_diagonal() for h in cartan):
        return [h.diagonal() for h in cartan]
    for a in range(len(cartan)):
        for b in range(a + 1, len(cartan)):
            if not commutator(cartan[a], cartan[b]).is_zero():
                raise NonCommutingCartanError(f"{r.label} 的 Cartan 基元 {a}, {b} 不交换")
    raise ValueError(f"{r.label} 的 Cartan 基交换但不是对角的")


def check_cartan_s3(r: MatrixRep) -> bool:
    """对角 Cartan 基上检查 HᵢHⱼHₖ ∈ span(cartan_basis)。"""
    diagonals = _diagonal_vectors(r)
    if not diagonals:
        return True
    span = ExactSpan(diagonals)
    count = len(diagonals)
    for i in range(count):
        for j in range(i, count):
            pair = [a * b for a, b in zip(diagonals[i], diagonals[j])]
            for k in range(j, count):
                triple = [a * c for a, c in zip(pair, diagonals[k])]
                if not span.contains(triple):
                    logger.info("%s Cartan 三次积不封闭: (%d, %d, %d)", r.label, i, j, k)
                    return False
    return True


def residual_in_span(r: MatrixRep, x: ExactMatrix) -> bool:
    """x 是否在 dρ(𝔤) 中。"""
    return algebra_span(r).contains(x)
