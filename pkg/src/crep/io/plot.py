# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""秩 ≤ 2 权图的 SVG 散点图。"""

import logging
from pathlib import Path
from typing import List, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from ..core.models import WeightDiagram  # noqa: E402
from ..lie.rootsys import RootSystemData  # noqa: E402

logger = logging.getLogger(__name__)

# A₂ 零和坐标投影到平面的正交基
_A2_BASIS = ((0.7071067811865476, -0.7071067811865476, 0.0), (0.4082482904638631, 0.4082482904638631, -0.8164965809277261))


def planar_points(diagram: WeightDiagram, rs: RootSystemData) -> List[Tuple[float, float, int]]:
    """把权投影到平面，返回 (x, y, 重数)，按权降序。"""
    if rs.rank > 2:
        raise ValueError(f"只能绘制秩 ≤ 2 的权图，{rs.name} 的秩为 {rs.rank}")
    points = []
    for weight, mult in sorted(diagram.mult.items(), reverse=True):
        values = [float(x) for x in weight]
        if rs.family == "A" and rs.rank == 2:
            x = sum(a * b for a, b in zip(_A2_BASIS[0], values))
            y = sum(a * b for a, b in zip(_A2_BASIS[1], values))
        elif rs.family == "A":
            x, y = values[0] - values[1], 0.0
        else:
            x, y = values[0], values[1]
        points.append((x, y, mult))
    return points


def write_diagram_svg(diagram: WeightDiagram, rs: RootSystemData, out: Path) -> Path:
    """
    写出权图 SVG；每个点带重数标签，点的 gid 为 weight-k。

    Returns:
        写出的文件路径
    """
    points = planar_points(diagram, rs)
    fig, ax = plt.subplots(figsize=(4, 4))
    try:
        for k, (x, y, mult) in enumerate(points):
            marker = ax.scatter([x], [y], s=40 + 30 * (mult - 1), color="tab:blue", zorder=3)
            marker.set_gid(f"weight-{k}")
            ax.annotate(str(mult), (x, y), textcoords="offset points", xytext=(5, 5), fontsize=9)
        ax.axhline(0, color="0.8", linewidth=0.8)
        ax.axvline(0, color="0.8", linewidth=0.8)
        ax.set_aspect("equal")
        ax.set_title(f"{rs.name}: λ = ({', '.join(str(x) for x in diagram.highest)})")
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out, format="svg")
    finally:
        plt.close(fig)
    logger.info(f"权图已写入 {out}（{len(points)} 个点）")
    return out
