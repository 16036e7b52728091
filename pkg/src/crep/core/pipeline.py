# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
适用性判定管道编排器。

依次执行几何条件、三元积、Cartan 三次积、奇次幂抽样与数值残差，
汇总为一个 ApplicabilityReport。
"""

import logging
from typing import Dict, List, Optional, Sequence

from ..config.settings import DEFAULT_SEED
from ..reps.catalog import build_from_label
from .models import ApplicabilityReport, Weight
from .stages import (
    ApplicabilityContext,
    CartanStage,
    GeometricStage,
    NumericStage,
    OddPowerStage,
    Stage,
    TripleProductStage,
)

logger = logging.getLogger(__name__)

ALL_CRITERIA = ("geometric", "triple", "cartan", "odd", "numeric")
DEFAULT_CRITERIA = ("geometric", "triple", "cartan")


class ApplicabilityPipeline:
    """编排 Cayley 变换适用性判定。"""

    def __init__(
        self,
        criteria: Sequence[str] = DEFAULT_CRITERIA,
        seed: int = DEFAULT_SEED,
        stages: Optional[Sequence[Stage]] = None,
    ) -> None:
        """
        初始化管道。

        Args:
            criteria: 要执行的判据名，取自 ALL_CRITERIA
            seed: 随机探测的种子
            stages: 自定义阶段实例（测试用）
        """
        unknown = [c for c in criteria if c not in ALL_CRITERIA]
        if unknown:
            raise ValueError(f"未知判据: {', '.join(unknown)}；可用判据: {', '.join(ALL_CRITERIA)}")
        self.seed = seed
        available: Dict[str, Stage] = {
            stage.name: stage
            for stage in (
                stages
                or (GeometricStage(), TripleProductStage(), CartanStage(), OddPowerStage(), NumericStage())
            )
        }
        # 按固定顺序执行，与传入顺序无关
        self.stages: List[Stage] = [available[name] for name in ALL_CRITERIA if name in criteria and name in available]

    def run(self, label: str) -> ApplicabilityReport:
        """对目录中的矩阵表示执行全部所选判据。"""
        rep = build_from_label(label)
        report = ApplicabilityReport(
            label=rep.label,
            family=rep.family,
            rank=rep.rank,
            highest=rep.highest,
        )
        return self._execute(ApplicabilityContext(report=report, rep=rep, seed=self.seed))

    def run_weight(self, family: str, rank: int, highest: Weight) -> ApplicabilityReport:
        """只有最高权、没有矩阵实现时，仅执行几何条件。"""
        report = ApplicabilityReport(label=None, family=family, rank=rank, highest=tuple(highest))
        return self._execute(ApplicabilityContext(report=report, seed=self.seed))

    def _execute(self, data: ApplicabilityContext) -> ApplicabilityReport:
        report = data.report
        logger.info("=" * 60)
        logger.info(f"开始判定: {report.label or f'{report.family}{report.rank} {report.highest}'}")
        logger.info("=" * 60)

        for index, stage in enumerate(self.stages, start=1):
            if not stage.applies(data):
                logger.debug(f"跳过阶段 {stage.name}")
                continue
            logger.info("")
            logger.info(f"[阶段{index}] {stage.title}")
            data = stage.run(data)
            report.criteria.append(stage.name)

        verdicts = self._verdicts(report)
        if report.exact is not None:
            report.final_verdict = report.exact.verdict
        elif report.geometric is not None:
            report.final_verdict = report.geometric.verdict
        elif verdicts:
            report.final_verdict = verdicts[0]
        report.agreement = len(set(verdicts)) <= 1
        if not report.agreement:
            logger.warning(f"判据不一致: {dict(zip(report.criteria, verdicts))}")
        logger.info(f"最终结论: {report.final_verdict}（判据一致: {report.agreement}）")
        return report

    @staticmethod
    def _verdicts(report: ApplicabilityReport) -> List[bool]:
        values = {
            "geometric": report.geometric.verdict if report.geometric else None,
            "triple": report.exact.verdict if report.exact else None,
            "cartan": report.cartan,
            "odd": report.odd_powers,
            "numeric": report.numeric.verdict if report.numeric else None,
        }
        return [values[name] for name in report.criteria if values[name] is not None]
