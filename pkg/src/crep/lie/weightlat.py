# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
不可约最高权表示的权集合与权图。

主算法为支配序饱和：从最高权出发反复减去正根，只保留支配权，再用 Weyl 群展开。
凸包 ∩ 陪集的暴力枚举保留为独立的交叉校验。
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Set, Tuple

from ..core.errors import NotDominantError
from ..core.models import Weight, WeightDiagram
from ..exact.lp import lp_feasible_convex_combination
from .rootsys import (
    RootSystemData,
    add,
    dominant_representative,
    fundamental_coefficients,
    height,
    in_root_lattice,
    inner,
    is_integral_weight,
    iter_weyl_orbit,
    negate,
    orbit_size,
    root_coordinates,
    sub,
    weyl_orbit,
)

logger = logging.getLogger(__name__)


def require_dominant(highest, rs: RootSystemData) -> Weight:
    """规范化并校验最高权；不在 C ∩ Λ 中时抛出 NotDominantError。"""
    weight = rs.make_weight(highest)
    if not is_integral_weight(weight, rs):
        raise NotDominantError(f"{weight} 不在 {rs.name} 的权格中")
    if any(c < 0 for c in fundamental_coefficients(weight, rs)):
        raise NotDominantError(
            f"{weight} 不是 {rs.name} 的支配权，请先调用 dominant_representative 得到 "
            f"{dominant_representative(weight, rs)}"
        )
    return weight


def precedes(mu: Weight, highest: Weight, rs: RootSystemData) -> bool:
    """支配序 μ ≼ ω：ω - μ 为单根的非负整系数组合。"""
    coords = root_coordinates(sub(highest, mu), rs)
    return coords is not None and all(
        Fraction(c).denominator == 1 and c >= 0 for c in coords
    )


@lru_cache(maxsize=256)
def _dominant_layer(highest: Weight, rs: RootSystemData) -> Tuple[Weight, ...]:
    found: Set[Weight] = {highest}
    frontier: List[Weight] = [highest]
    while frontier:
        next_frontier: List[Weight] = []
        for mu in frontier:
            for alpha in rs.positive_roots:
                nu = sub(mu, alpha)
                if nu in found:
                    continue
                if all(c >= 0 for c in fundamental_coefficients(nu, rs)):
                    found.add(nu)
                    next_frontier.append(nu)
        frontier = next_frontier
    # 按与最高权的高度差排序，Freudenthal 递推依赖此顺序
    return tuple(sorted(found, key=lambda mu: (height(sub(highest, mu), rs), [-x for x in mu])))


def dominant_weights(highest, rs: RootSystemData) -> Tuple[Weight, ...]:
    """权集合中的全部支配权，按 height(ω - μ) 升序。"""
    return _dominant_layer(require_dominant(highest, rs), rs)


def weight_set(highest, rs: RootSystemData) -> FrozenSet[Weight]:
    """Conv(𝒲ω) ∩ (ω + ℤΦ)，由支配权的 Weyl 轨道并得到。"""
    weights: Set[Weight] = set()
    for mu in dominant_weights(highest, rs):
        weights.update(iter_weyl_orbit(mu, rs))
    return frozenset(weights)


def support_size(highest, rs: RootSystemData) -> int:
    """权集合大小，不展开轨道。"""
    return sum(orbit_size(mu, rs) for mu in dominant_weights(highest, rs))


def hull_coset_oracle(highest, rs: RootSystemData) -> FrozenSet[Weight]:
    """
    暴力枚举 ω + ℤΦ 在轨道包围盒内的格点，逐个做凸组合 LP 判定。

    只用于交叉校验 weight_set，规模随秩指数增长。
    """
    omega = require_dominant(highest, rs)
    orbit = weyl_orbit(omega, rs).elements
    ranges = []
    for i in range(rs.dim):
        lo = min(point[i] for point in orbit)
        hi = max(point[i] for point in orbit)
        # 坐标与 ω_i 相差整数
        start = omega[i] - int(omega[i] - lo)
        values = []
        x = start
        while x <= hi:
            values.append(x)
            x += 1
        ranges.append(values)

    result: Set[Weight] = set()
    checked = 0
    for point in product(*ranges):
        if rs.family == "A" and sum(point, Fraction(0)) != 0:
            continue
        if not in_root_lattice(sub(point, omega), rs):
            continue
        checked += 1
        if lp_feasible_convex_combination(point, orbit):
            result.add(tuple(point))
    logger.debug("凸包陪集枚举 %s %s: LP 次数=%d, 命中=%d", rs.name, omega, checked, len(result))
    return frozenset(result)


def _freudenthal(highest: Weight, rs: RootSystemData) -> Dict[Weight, int]:
    dominants = _dominant_layer(highest, rs)
    known = set(dominants)
    mult: Dict[Weight, int] = {highest: 1}
    shifted = add(highest, rs.rho)
    top = inner(shifted, shifted)

    for mu in dominants[1:]:
        total = Fraction(0)
        for alpha in rs.positive_roots:
            step = add(mu, alpha)
            while True:
                key = dominant_representative(step, rs)
                if key not in known:
                    break  # α-串不间断，走出权集合后不会再回来
                total += mult[key] * inner(step, alpha)
                step = add(step, alpha)
        mu_shifted = add(mu, rs.rho)
        denominator = top - inner(mu_shifted, mu_shifted)
        if denominator == 0:
            raise RuntimeError(f"Freudenthal 分母为 0: highest={highest}, μ={mu}")
        value = 2 * total / denominator
        if value.denominator != 1:
            raise RuntimeError(f"Freudenthal 重数非整数: μ={mu}, m={value}")
        mult[mu] = int(value)
    return mult


@lru_cache(maxsize=256)
def _dominant_multiplicities(highest: Weight, rs: RootSystemData) -> Tuple[Tuple[Weight, int], ...]:
    return tuple(_freudenthal(highest, rs).items())


def dominant_multiplicities(highest, rs: RootSystemData) -> Dict[Weight, int]:
    """支配权 → 重数。"""
    return dict(_dominant_multiplicities(require_dominant(highest, rs), rs))


def freudenthal_multiplicity(highest, target, rs: RootSystemData) -> int:
    """dim V_target；target 不在权集合中时为 0。"""
    omega = require_dominant(highest, rs)
    if len(target) != rs.dim:
        return 0
    key = dominant_representative(rs.make_weight(target), rs)
    return dict(_dominant_multiplicities(omega, rs)).get(key, 0)


def weight_diagram(highest, rs: RootSystemData) -> WeightDiagram:
    """完整权图 (V, m)。"""
    omega = require_dominant(highest, rs)
    mult: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(omega, rs):
        for weight in iter_weyl_orbit(mu, rs):
            mult[weight] = m
    logger.debug("权图 %s %s: |支撑|=%d, dim=%d", rs.name, omega, len(mult), sum(mult.values()))
    return WeightDiagram(highest=omega, mult=mult)


def weight_balance(diagram: WeightDiagram) -> Weight:
    """Σ m(λ)·λ；对任意有限维表示为 0。"""
    dim = len(diagram.highest)
    total = [Fraction(0)] * dim
    for weight, m in diagram.mult.items():
        for i, x in enumerate(weight):
            total[i] += m * x
    return tuple(total)


def is_self_dual(diagram: WeightDiagram) -> bool:
    """支撑关于原点对称（V ≃ V*）。"""
    support = diagram.support
    return all(negate(w) in support for w in support)
