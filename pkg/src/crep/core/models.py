# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""cayley-rep 数据模型。"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..exact.matrix import ExactMatrix

# L_i 基下的精确坐标（A 型为零和代表元）
Weight = Tuple[Fraction, ...]


@dataclass(frozen=True)
class WeylOrbit:
    seed: Weight
    elements: Tuple[Weight, ...]
    element_set: FrozenSet[Weight] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "element_set", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, weight: Weight) -> bool:
        return weight in self.element_set

    def __iter__(self):
        return iter(self.elements)


@dataclass
class WeightDiagram:
    highest: Weight
    mult: Dict[Weight, int]  # m(λ) = dim V_λ

    @property
    def support(self) -> FrozenSet[Weight]:
        return frozenset(self.mult)

    @property
    def dimension(self) -> int:
        return sum(self.mult.values())


@dataclass
class ConfigReport:
    family: str
    rank: int
    highest: Weight
    orbit_size: int
    orbit_rank: Optional[int]  # 短路模式下轨道条件已失败时为 None
    rank_needed: int  # dim 𝔥
    symmetric_about_origin: bool
    support_minus_orbit: Optional[Tuple[Weight, ...]]  # 短路模式下为 None
    verdict: bool
    witness: Optional[Weight] = None
    support_up_to_weyl: bool = False  # True 时 support_minus_orbit 只列支配代表元


@dataclass(frozen=True)
class MatrixRep:
    label: str
    dim_V: int
    algebra_basis: Tuple[ExactMatrix, ...]
    cartan_basis: Tuple[ExactMatrix, ...]
    weight_labels: Tuple[Weight, ...]  # 每个对角位置一个权
    cartan_coords: Tuple[Weight, ...]  # 每个 Cartan 基元对应的 𝔥 向量，权在其上取值为内积
    family: Optional[str] = None
    rank: Optional[int] = None
    highest: Optional[Weight] = None  # 不可约时的最高权
    semisimple: bool = True
    description: str = ""


@dataclass
class SpanVerdict:
    verdict: bool
    failing_triple: Optional[Tuple[int, int, int]] = None
    residual_witness: Optional[ExactMatrix] = None
    triples_checked: int = 0


@dataclass
class ResidualReport:
    input_norm: float
    residual: float
    series_terms: int
    scale: float = 1.0  # 为满足 ‖u‖ < 1/3 所做的内部缩放
    condition_warning: Optional[str] = None


@dataclass
class NumericSummary:
    seeds: int
    norm: float
    median_residual: float
    max_residual: float
    verdict: bool


@dataclass
class ClassificationRow:
    family: str
    rank: int
    coeffs: Tuple[int, ...]  # 基本权系数
    highest: Weight
    verdict: bool
    identification: Optional[str] = None
    compact_form: Optional[str] = None  # 紧实形式下的 (𝔤, V) 名称


@dataclass
class ApplicabilityReport:
    label: Optional[str]
    family: Optional[str]
    rank: Optional[int]
    highest: Optional[Weight]
    geometric: Optional[ConfigReport] = None
    exact: Optional[SpanVerdict] = None
    cartan: Optional[bool] = None
    odd_powers: Optional[bool] = None
    numeric: Optional[NumericSummary] = None
    final_verdict: bool = False
    agreement: bool = True
    criteria: List[str] = field(default_factory=list)
