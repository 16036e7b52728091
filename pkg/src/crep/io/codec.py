# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
JSON 编解码。

有理数写成 "a/b" 字符串，高斯有理数写成 "a/b+c/d*i"，权为分数字符串数组。
"""

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import numpy as np

from .. import __version__
from ..core.models import MatrixRep, Weight, WeightDiagram
from ..exact.matrix import ExactMatrix
from ..exact.numbers import GaussRat


def fraction_to_str(value) -> str:
    return str(Fraction(value))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"无法解析有理数: {text!r}") from exc


def parse_weight(text: str) -> Weight:
    """解析 "1/2,1/2,-1/2" 形式的权。"""
    parts = [p for p in text.replace(" ", "").split(",")]
    if not text.strip() or any(not p for p in parts):
        raise ValueError(f"权字符串格式错误: {text!r}")
    return tuple(parse_fraction(p) for p in parts)


def parse_coeffs(text: str) -> List[int]:
    """解析 "1,0,2" 形式的基本权系数。"""
    try:
        values = [int(p) for p in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise ValueError(f"系数字符串格式错误: {text!r}") from exc
    if any(v < 0 for v in values):
        raise ValueError(f"基本权系数必须非负: {text!r}")
    return values


def weight_to_json(weight: Sequence) -> List[str]:
    return [fraction_to_str(x) for x in weight]


def weight_from_json(data: Sequence[str]) -> Weight:
    return tuple(parse_fraction(x) for x in data)


def matrix_to_json(matrix: ExactMatrix) -> List[List[str]]:
    return [[str(e) for e in matrix.row(i)] for i in range(matrix.rows)]


def matrix_from_json(rows: Sequence[Sequence[str]]) -> ExactMatrix:
    return ExactMatrix.from_rows([[GaussRat.parse(e) for e in row] for row in rows])


def diagram_to_json(diagram: WeightDiagram) -> Dict[str, Any]:
    entries = [
        {"weight": weight_to_json(w), "mult": m}
        for w, m in sorted(diagram.mult.items(), reverse=True)
    ]
    return {"highest": weight_to_json(diagram.highest), "entries": entries}


def diagram_from_json(data: Dict[str, Any]) -> WeightDiagram:
    return WeightDiagram(
        highest=weight_from_json(data["highest"]),
        mult={weight_from_json(e["weight"]): int(e["mult"]) for e in data["entries"]},
    )


def rep_to_json(rep: MatrixRep) -> Dict[str, Any]:
    return {
        "label": rep.label,
        "description": rep.description,
        "dim_V": rep.dim_V,
        "family": rep.family,
        "rank": rep.rank,
        "highest": weight_to_json(rep.highest) if rep.highest is not None else None,
        "algebra_dim": len(rep.algebra_basis),
        "algebra_basis": [matrix_to_json(m) for m in rep.algebra_basis],
        "cartan_basis": [matrix_to_json(m) for m in rep.cartan_basis],
        "weight_labels": [weight_to_json(w) for w in rep.weight_labels],
    }


def to_jsonable(value: Any) -> Any:
    """把报告数据类递归转换为 JSON 兼容对象。"""
    if isinstance(value, (Fraction, GaussRat)):
        return str(value)
    if isinstance(value, ExactMatrix):
        return matrix_to_json(value)
    if isinstance(value, WeightDiagram):
        return diagram_to_json(value)
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, np.generic):
        return value.item()
    return value


def envelope(command: str, report: Any, criteria: Sequence[str] = ()) -> Dict[str, Any]:
    """所有 JSON 输出共用的外层结构，带版本号与实际执行的判据。"""
    return {
        "version": __version__,
        "command": command,
        "criteria": list(criteria),
        "report": to_jsonable(report),
    }


def dumps(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)
