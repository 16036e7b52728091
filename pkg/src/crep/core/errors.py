# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""错误类型。均派生自内置异常，调用方可直接捕获 ValueError / RuntimeError。"""

from typing import Optional, Sequence, Tuple


class UnsupportedRootSystemError(ValueError):
    """不支持的 (family, rank)。"""

    def __init__(self, message: str, isomorphic_to: Optional[Tuple[str, int]] = None) -> None:
        super().__init__(message)
        self.isomorphic_to = isomorphic_to


class NotDominantError(ValueError):
    """最高权不在基本 Weyl 房内。"""


class ZeroWeightError(ValueError):
    """平凡表示（最高权为 0）不参与判定。"""


class DimensionMismatchError(ValueError):
    """矩阵或向量尺寸不一致。"""


class StructureMismatchError(ValueError):
    """两个矩阵实现的结构常数不一致。"""


class NonCommutingCartanError(ValueError):
    """Cartan 基不交换。"""


class CayleyDomainError(ValueError):
    """数值定义域之外（I - u 奇异或 ‖a - I‖ ≥ 1）。"""


class UnknownLabelError(ValueError):
    """目录中不存在的表示标签。"""

    def __init__(self, label: str, available: Sequence[str]) -> None:
        super().__init__(f"未知表示标签: {label}；可用标签: {', '.join(available)}")
        self.label = label
        self.available = tuple(available)


class SeriesConvergenceError(RuntimeError):
    """级数未收敛。"""


class OrbitTooLargeError(RuntimeError):
    """轨道超过枚举上限。"""
