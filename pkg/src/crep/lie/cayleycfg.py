# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
Cayley 构型判定。

最高权 ω 的权图需满足：轨道 𝒪_ω 大小为 2n、秩为 n、关于原点对称，
且权集合除 𝒪_ω 外至多只有原点。
"""

import logging
from itertools import islice
from typing import Iterable, List, Optional

from ..config.settings import ORBIT_LIMIT
from ..core.errors import ZeroWeightError
from ..core.models import ConfigReport, Weight
from ..exact.matrix import ExactSpan
from .rootsys import (
    RootSystemData,
    dominant_representative,
    is_zero,
    iter_weyl_orbit,
    negate,
    orbit_rank,
    orbit_size,
)
from .weightlat import dominant_weights, require_dominant

logger = logging.getLogger(__name__)


def _first_cube_violation(weights: Iterable[Weight]) -> Optional[Weight]:
    """贪心维护独立族 {ωᵢ}，返回第一个既不是 ±ωᵢ 又与之线性相关的非零权。"""
    span = ExactSpan()
    members = set()
    for weight in weights:
        if is_zero(weight) or weight in members or negate(weight) in members:
            continue
        if not span.add(list(weight)):
            return weight
        members.add(weight)
    return None


def cartan_cube_closure(support: Iterable[Weight], rank_needed: int) -> bool:
    """
    是否存在线性无关的 ω₁…ωₙ ⊆ support 使 support ∖ {0} ⊆ {±ω₁, …, ±ωₙ}。

    只含原点时视为成立；否则非零权须恰好张成 n 维。
    """
    ordered = sorted(support, reverse=True)
    if _first_cube_violation(ordered) is not None:
        return False
    nonzero = [list(weight) for weight in ordered if not is_zero(weight)]
    if not nonzero:
        return True
    return ExactSpan(nonzero).dim == rank_needed


def is_cayley_configuration(
    highest,
    rs: RootSystemData,
    short_circuit: bool = False,
) -> ConfigReport:
    """
    判定最高权为 highest 的不可约表示是否具有 Cayley 构型。

    Args:
        highest: 支配的非零最高权（L 坐标）
        rs: 根系
        short_circuit: 轨道条件已失败时跳过轨道秩与支撑计算（批量搜索用）

    Returns:
        ConfigReport，verdict 为假时 witness 给出一个违反条件的权

    Raises:
        ZeroWeightError: 平凡表示
        NotDominantError: highest 不是支配整权
    """
    omega = require_dominant(highest, rs)
    if is_zero(omega):
        raise ZeroWeightError("平凡表示不参与判定（dρ 不是忠实的）")

    n = rs.rank
    size = orbit_size(omega, rs)
    symmetric = dominant_representative(negate(omega), rs) == omega
    orbit_ok = size == 2 * n

    rank_value: Optional[int] = None
    if orbit_ok or not short_circuit:
        rank_value = orbit_rank(omega, rs)
    geometric_ok = orbit_ok and symmetric and rank_value == n

    support_minus_orbit = None
    up_to_weyl = False
    extras: List[Weight] = []
    if geometric_ok or not short_circuit:
        extras = [mu for mu in dominant_weights(omega, rs) if mu != omega]
        total = sum(orbit_size(mu, rs) for mu in extras)
        if total <= ORBIT_LIMIT:
            collected = set()
            for mu in extras:
                collected.update(iter_weyl_orbit(mu, rs))
            support_minus_orbit = tuple(sorted(collected, reverse=True))
        else:
            support_minus_orbit = tuple(extras)
            up_to_weyl = True

    nonzero_extras = [mu for mu in extras if not is_zero(mu)]
    verdict = geometric_ok and not nonzero_extras

    witness = None
    if not verdict:
        if geometric_ok:
            # 轨道外最高的非零支配权
            witness = nonzero_extras[0]
        else:
            prefix = islice(iter_weyl_orbit(omega, rs), 2 * n + 1)
            witness = _first_cube_violation(prefix) or omega

    report = ConfigReport(
        family=rs.family,
        rank=n,
        highest=omega,
        orbit_size=size,
        orbit_rank=rank_value,
        rank_needed=n,
        symmetric_about_origin=symmetric,
        support_minus_orbit=support_minus_orbit,
        verdict=verdict,
        witness=witness,
        support_up_to_weyl=up_to_weyl,
    )
    logger.debug(
        "Cayley 构型 %s %s: |𝒪|=%d, rank=%s, 对称=%s, verdict=%s",
        rs.name,
        omega,
        size,
        rank_value,
        symmetric,
        verdict,
    )
    return report
