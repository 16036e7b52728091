# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
欧氏 Clifford 代数的精确 gamma 矩阵（Jordan–Wigner 构造）。

m 个张量因子时：
    γ_{2k-1} = σz^{⊗(k-1)} ⊗ σx ⊗ I^{⊗(m-k)}
    γ_{2k}   = σz^{⊗(k-1)} ⊗ σy ⊗ I^{⊗(m-k)}
奇数个生成元时追加 γ_{2m+1} = σz^{⊗m}。于是 γ_{2k-1}γ_{2k} = i·σz^{(k)}，
Cartan 元 H_k = -i·¼[γ_{2k-1}, γ_{2k}] = ½σz^{(k)} 是对角的。
"""

import logging
from fractions import Fraction
from functools import reduce
from typing import List, Sequence

from ..exact.matrix import ExactMatrix, anticommutator, commutator
from ..exact.numbers import I, ONE

logger = logging.getLogger(__name__)

SIGMA_X = ExactMatrix.from_rows([[0, 1], [1, 0]])
SIGMA_Y = ExactMatrix.from_rows([[0, -I], [I, 0]])
SIGMA_Z = ExactMatrix.from_rows([[1, 0], [0, -1]])
IDENTITY_2 = ExactMatrix.identity(2)


def _tensor(factors: Sequence[ExactMatrix]) -> ExactMatrix:
    return reduce(lambda a, b: a.kron(b), factors)


def gamma_matrices(count: int) -> List[ExactMatrix]:
    """count 个两两反交换、平方为 I 的 2^{⌊count/2⌋} 维 gamma 矩阵。"""
    if count < 2:
        raise ValueError(f"gamma 矩阵个数至少为 2，收到 {count}")
    m = count // 2
    gammas: List[ExactMatrix] = []
    for k in range(m):
        head = [SIGMA_Z] * k
        tail = [IDENTITY_2] * (m - k - 1)
        gammas.append(_tensor(head + [SIGMA_X] + tail))
        gammas.append(_tensor(head + [SIGMA_Y] + tail))
    if count % 2:
        gammas.append(_tensor([SIGMA_Z] * m))
    return gammas


def check_clifford(gammas: Sequence[ExactMatrix]) -> bool:
    """逐对验证 {γa, γb} = 2δab·I。"""
    if not gammas:
        return True
    identity = ExactMatrix.identity(gammas[0].rows)
    for a, gamma_a in enumerate(gammas):
        for b, gamma_b in enumerate(gammas):
            expected = identity.scale(2) if a == b else ExactMatrix.zeros(identity.rows)
            if anticommutator(gamma_a, gamma_b) != expected:
                logger.debug("Clifford 关系不成立: (a, b)=(%d, %d)", a, b)
                return False
    return True


def chirality(gammas: Sequence[ExactMatrix]) -> ExactMatrix:
    """偶数个生成元时的手征算子 i^{m}·γ₁⋯γ_{2m}，平方为 I。"""
    if len(gammas) % 2:
        raise ValueError("奇数个 gamma 矩阵没有手征算子")
    product = reduce(lambda a, b: a @ b, gammas)
    phase = ONE
    for _ in range(len(gammas) // 2):
        phase = phase * I
    return product.scale(phase)


def spin_generator(gammas: Sequence[ExactMatrix], a: int, b: int) -> ExactMatrix:
    """M_ab = ¼[γa, γb]（0 起始下标）。"""
    return commutator(gammas[a], gammas[b]).scale(Fraction(1, 4))
