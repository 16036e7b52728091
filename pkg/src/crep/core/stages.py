# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""适用性判定管道的阶段。每个阶段读写同一个 ApplicabilityContext。"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from ..analysis.cayleynum import residual_survey
from ..analysis.powerspan import check_cartan_s3, check_odd_powers, check_power_span
from ..config.settings import (
    DEFAULT_SEED,
    ODD_POWER_MAX_K,
    ODD_POWER_SAMPLES,
    RESIDUAL_NORM,
    RESIDUAL_SEEDS,
)
from ..lie.cayleycfg import is_cayley_configuration
from ..lie.rootsys import build_root_system
from .models import ApplicabilityReport, MatrixRep

logger = logging.getLogger(__name__)


@dataclass
class ApplicabilityContext:
    report: ApplicabilityReport
    rep: Optional[MatrixRep] = None
    seed: int = DEFAULT_SEED


class Stage(ABC):
    """管道阶段基类。"""

    name: str = ""
    title: str = ""

    @abstractmethod
    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        """执行当前阶段并返回更新后的上下文。"""
        raise NotImplementedError

    def applies(self, data: ApplicabilityContext) -> bool:
        return data.rep is not None


class GeometricStage(Stage):
    name = "geometric"
    title = "权图几何条件"

    def applies(self, data: ApplicabilityContext) -> bool:
        report = data.report
        return report.family is not None and report.rank is not None and report.highest is not None

    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        report = data.report
        rs = build_root_system(report.family, report.rank)
        report.geometric = is_cayley_configuration(report.highest, rs)
        logger.info(f"Cayley 构型: {report.geometric.verdict}")
        return data


class TripleProductStage(Stage):
    name = "triple"
    title = "三元积幂张成"

    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        data.report.exact = check_power_span(data.rep)
        logger.info(f"幂张成: {data.report.exact.verdict}")
        return data


class CartanStage(Stage):
    name = "cartan"
    title = "Cartan 三次积"

    def applies(self, data: ApplicabilityContext) -> bool:
        # 只对半单代数与幂张成等价
        return data.rep is not None and data.rep.semisimple

    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        data.report.cartan = check_cartan_s3(data.rep)
        logger.info(f"Cartan S³ 封闭: {data.report.cartan}")
        return data


class OddPowerStage(Stage):
    name = "odd"
    title = "随机奇次幂"

    def __init__(self, max_k: int = ODD_POWER_MAX_K, samples: int = ODD_POWER_SAMPLES) -> None:
        self.max_k = max_k
        self.samples = samples

    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        data.report.odd_powers = check_odd_powers(data.rep, self.max_k, self.samples, data.seed)
        logger.info(f"奇次幂抽样: {data.report.odd_powers}")
        return data


class NumericStage(Stage):
    name = "numeric"
    title = "对数级数残差"

    def __init__(self, seeds: int = RESIDUAL_SEEDS, norm: float = RESIDUAL_NORM) -> None:
        self.seeds = seeds
        self.norm = norm

    def run(self, data: ApplicabilityContext) -> ApplicabilityContext:
        data.report.numeric = residual_survey(data.rep, seeds=self.seeds, norm=self.norm, base_seed=data.seed)
        return data
