# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
有界搜索：在基本权系数 ≤ bound 的支配权中找出全部 Cayley 构型。
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..config.settings import MAX_SEARCH_BOUND, MAX_SEARCH_RANK, THREADS
from ..core.models import ClassificationRow, Weight
from ..lie.cayleycfg import is_cayley_configuration
from ..lie.rootsys import RootSystemData, build_root_system, from_fundamental, supported_systems

logger = logging.getLogger(__name__)

# (family, rank) → 基本权系数 → 规范名；B/C/D 的标准表示在 identify 中按 ω₁ 判断
_KNOWN: Dict[Tuple[str, int], Dict[Tuple[int, ...], str]] = {
    ("A", 1): {(1,): "standard", (2,): "adjoint-of-A1"},
    ("A", 3): {(0, 1, 0): "lambda2-sl4"},
    ("B", 2): {(0, 1): "spin-B2"},
    ("D", 4): {(0, 0, 0, 1): "spin8-plus", (0, 0, 1, 0): "spin8-minus"},
}

# 紧实形式下的 (𝔤, V)
_COMPACT = {
    ("A", 1, "standard"): "(su_2, C^2)",
    ("A", 1, "adjoint-of-A1"): "(su_2, sl_2(C))",
    ("A", 3, "lambda2-sl4"): "(su_4, Λ²C^4)",
    ("B", 2, "spin-B2"): "(so_5(R), S) ≃ (u_2(H), H^2)",
    ("D", 4, "spin8-plus"): "(so_8(R), S+)",
    ("D", 4, "spin8-minus"): "(so_8(R), S-)",
}

# 规范名 → 目录标签
_CATALOG = {
    ("A", 1, "standard"): "sl2-sym-1",
    ("A", 1, "adjoint-of-A1"): "sl2-adjoint",
    ("A", 3, "lambda2-sl4"): "sl4-lambda2",
    ("B", 2, "spin-B2"): "spin-so5",
    ("D", 4, "spin8-plus"): "spin8-plus",
    ("D", 4, "spin8-minus"): "spin8-minus",
}


def identify(family: str, rank: int, coeffs: Tuple[int, ...]) -> Tuple[Optional[str], Optional[str]]:
    """按最高权查表，返回 (规范名, 紧实形式名)；不在已知列表中时为 (None, None)。"""
    coeffs = tuple(int(c) for c in coeffs)
    name = _KNOWN.get((family, rank), {}).get(coeffs)
    if name is None and family in ("B", "C", "D") and coeffs == (1,) + (0,) * (rank - 1):
        name = "standard"
    if name is None:
        return None, None
    compact = _COMPACT.get((family, rank, name))
    if compact is None:
        n = rank
        compact = {
            "B": f"(so_{2 * n + 1}(R), C^{2 * n + 1})",
            "C": f"(u_{n}(H), H^{n})",
            "D": f"(so_{2 * n}(R), C^{2 * n})",
        }[family]
    return name, compact


def catalog_label_for(row: ClassificationRow) -> Optional[str]:
    """有显式矩阵实现的真行对应的目录标签。"""
    if not row.verdict or row.identification is None:
        return None
    label = _CATALOG.get((row.family, row.rank, row.identification))
    if label is None and row.identification == "standard":
        prefix = "sp2n" if row.family == "C" else "soN"
        label = f"{prefix}-standard:{row.family}{row.rank}"
    return label


def enumerate_dominant(rs: RootSystemData, bound: int) -> List[Weight]:
    """基本权系数取值 [0, bound] 的全部非零支配权，按系数元组字典序。"""
    if bound < 1:
        raise ValueError(f"bound 必须 ≥ 1，收到 {bound}")
    return [
        from_fundamental(coeffs, rs)
        for coeffs in product(range(bound + 1), repeat=rs.rank)
        if any(coeffs)
    ]


def _evaluate(task: Tuple[str, int, Tuple[int, ...]]) -> ClassificationRow:
    family, rank, coeffs = task
    rs = build_root_system(family, rank)
    highest = from_fundamental(coeffs, rs)
    report = is_cayley_configuration(highest, rs, short_circuit=True)
    identification, compact = identify(family, rank, coeffs) if report.verdict else (None, None)
    if report.verdict and identification is None:
        logger.warning("%s%d 系数 %s 为 Cayley 构型但不在已知列表中", family, rank, coeffs)
    return ClassificationRow(
        family=family,
        rank=rank,
        coeffs=coeffs,
        highest=highest,
        verdict=report.verdict,
        identification=identification,
        compact_form=compact,
    )


def _run_tasks(tasks: List[Tuple[str, int, Tuple[int, ...]]]) -> List[ClassificationRow]:
    if THREADS > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=THREADS) as executor:
            rows = list(executor.map(_evaluate, tasks, chunksize=16))
    else:
        rows = [_evaluate(task) for task in tasks]
    return sorted(rows, key=lambda row: (row.family, row.rank, row.coeffs))


def classify(family: str, rank: int, bound: int) -> List[ClassificationRow]:
    """对 (family, rank) 的候选最高权逐一判定 Cayley 构型。"""
    rs = build_root_system(family.upper(), rank)
    if bound < 1:
        raise ValueError(f"bound 必须 ≥ 1，收到 {bound}")
    tasks = [
        (rs.family, rs.rank, coeffs)
        for coeffs in product(range(bound + 1), repeat=rs.rank)
        if any(coeffs)
    ]
    rows = _run_tasks(tasks)
    logger.info("%s bound=%d: 候选 %d 个, 真行 %d 个", rs.name, bound, len(rows), sum(r.verdict for r in rows))
    return rows


def full_report(max_rank: int, bound: int) -> List[ClassificationRow]:
    """所有受支持 (family, rank ≤ max_rank) 的分类表，按 family → rank → 系数排序。"""
    if max_rank > MAX_SEARCH_RANK or max_rank < 1:
        raise ValueError(f"max_rank 必须在 [1, {MAX_SEARCH_RANK}] 内，收到 {max_rank}")
    if bound > MAX_SEARCH_BOUND or bound < 1:
        raise ValueError(f"bound 必须在 [1, {MAX_SEARCH_BOUND}] 内，收到 {bound}")
    logger.info("=" * 60)
    logger.info("开始有界分类: max_rank=%d, bound=%d", max_rank, bound)
    logger.info("=" * 60)
    tasks = []
    for rs in supported_systems(max_rank):
        tasks.extend(
            (rs.family, rs.rank, coeffs)
            for coeffs in product(range(bound + 1), repeat=rs.rank)
            if any(coeffs)
        )
    rows = _run_tasks(tasks)
    logger.info("分类完成: 候选 %d 个, 真行 %d 个", len(rows), sum(r.verdict for r in rows))
    return rows


def true_rows(rows: List[ClassificationRow]) -> List[ClassificationRow]:
    return [row for row in rows if row.verdict]

