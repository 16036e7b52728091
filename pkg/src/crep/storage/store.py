# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""报告与分类表的文件存储工具。"""

import csv
import json
from pathlib import Path
from typing import Any, Iterable, List

from ..core.models import ClassificationRow
from ..io.codec import to_jsonable

CSV_COLUMNS = ("family", "rank", "coeffs", "verdict", "identification")


def classification_csv_rows(rows: Iterable[ClassificationRow]) -> List[List[str]]:
    return [
        [
            row.family,
            str(row.rank),
            " ".join(str(c) for c in row.coeffs),
            "true" if row.verdict else "false",
            row.identification or "",
        ]
        for row in rows
    ]


class JsonStore:
    """将判定报告持久化为 JSON / CSV 文件。"""

    def __init__(self, output_dir: Path) -> None:
        self.output_dir = output_dir
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def write_classification(self, rows: Iterable[ClassificationRow]) -> List[Path]:
        rows = list(rows)
        json_path = self._write_json("classification.json", rows)
        csv_path = self.output_dir / "classification.csv"
        with csv_path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            writer.writerows(classification_csv_rows(rows))
        return [json_path, csv_path]

    def _write_json(self, filename: str, payload: Any) -> Path:
        path = self.output_dir / filename
        with path.open("w", encoding="utf-8") as fh:
            json.dump(to_jsonable(payload), fh, ensure_ascii=False, indent=2, sort_keys=True)
        return path
