# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
精确稠密线性代数。

ExactMatrix 以行优先元组保存高斯有理数元素；ExactSpan 以稀疏行维护
约化行阶梯形，用于秩、线性方程求解与张成成员判定。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DimensionMismatchError
from .numbers import ZERO, GaussRat, as_gauss

SparseRow = Dict[int, object]


def _field(value):
    """整数提升为 Fraction，其余原样返回（Fraction / GaussRat）。"""
    if type(value) is int:
        return Fraction(value)
    return value


class ExactMatrix:
    """高斯有理数矩阵，不可变。"""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Sequence) -> None:
        if rows <= 0 or cols <= 0:
            raise ValueError(f"矩阵尺寸必须为正: {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"元素个数 {len(entries)} 与尺寸 {rows}x{cols} 不符"
            )
        self.rows = rows
        self.cols = cols
        self.entries: Tuple[GaussRat, ...] = tuple(as_gauss(e) for e in entries)
        self._hash: Optional[int] = None

    # ---- 构造 ----
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise ValueError("空矩阵")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("各行长度不一致")
        return cls(len(rows), width, [e for row in rows for e in row])

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        entries = [ZERO] * (n * n)
        for i in range(n):
            entries[i * n + i] = GaussRat(1)
        return cls(n, n, entries)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, value=1) -> "ExactMatrix":
        """E_ij（0 起始下标），元素为 value。"""
        entries = [ZERO] * (n * n)
        entries[i * n + j] = as_gauss(value)
        return cls(n, n, entries)

    @classmethod
    def diagonal_matrix(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        entries = [ZERO] * (n * n)
        for i, value in enumerate(values):
            entries[i * n + i] = as_gauss(value)
        return cls(n, n, entries)

    # ---- 访问 ----
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> GaussRat:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[GaussRat, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_vectors(self) -> List[Tuple[GaussRat, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def diagonal(self) -> Tuple[GaussRat, ...]:
        n = min(self.rows, self.cols)
        return tuple(self.entries[i * self.cols + i] for i in range(n))

    def to_numpy(self) -> np.ndarray:
        data = np.array([complex(e) for e in self.entries], dtype=np.complex128)
        return data.reshape(self.rows, self.cols)

    # ---- 谓词 ----
    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        cols = self.cols
        return all(not e for k, e in enumerate(self.entries) if k // cols != k % cols)

    def trace(self) -> GaussRat:
        return sum(self.diagonal(), ZERO)

    # ---- 运算 ----
    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"尺寸不一致: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, factor) -> "ExactMatrix":
        factor = as_gauss(factor)
        return ExactMatrix(self.rows, self.cols, [factor * a if a else ZERO for a in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"无法相乘: {self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out: List[GaussRat] = [ZERO] * (n * p)
        # 跳过零元素；目录中的矩阵大多稀疏
        for i in range(n):
            row_base = i * m
            out_base = i * p
            for k in range(m):
                aik = a[row_base + k]
                if not aik:
                    continue
                b_base = k * p
                for j in range(p):
                    bkj = b[b_base + j]
                    if bkj:
                        out[out_base + j] = out[out_base + j] + aik * bkj
        return ExactMatrix(n, p, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [e.conjugate() for e in self.entries])

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        rows, cols = self.rows * other.rows, self.cols * other.cols
        entries = [ZERO] * (rows * cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other[k, l]
                        if b:
                            entries[(i * other.rows + k) * cols + j * other.cols + l] = a * b
        return ExactMatrix(rows, cols, entries)

    def submatrix(self, indices: Sequence[int]) -> "ExactMatrix":
        """取行列下标同为 indices 的主子矩阵。"""
        return ExactMatrix(
            len(indices),
            len(indices),
            [self[i, j] for i in indices for j in indices],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


def anticommutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b + b @ a


def block_diagonal(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    n = a.rows + b.rows
    entries = [ZERO] * (n * n)
    for i in range(a.rows):
        for j in range(a.cols):
            entries[i * n + j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            entries[(a.rows + i) * n + a.cols + j] = b[i, j]
    return ExactMatrix(n, n, entries)


def linear_combination(coefficients: Sequence, basis: Sequence[ExactMatrix]) -> ExactMatrix:
    if not basis:
        raise ValueError("空基")
    result = ExactMatrix.zeros(basis[0].rows, basis[0].cols)
    for coefficient, matrix in zip(coefficients, basis):
        if coefficient:
            result = result + matrix.scale(coefficient)
    return result


class ExactSpan:
    """
    精确张成空间。

    行以稀疏字典存储并保持约化行阶梯形：每行主元处为 1，且其它行在该主元列为 0。
    同时记录每行在原始输入向量上的组合系数，用于返回成员判定的系数。
    """

    def __init__(self, vectors: Iterable = (), length: Optional[int] = None) -> None:
        self.length = length
        self._pivots: List[int] = []
        self._rows: List[SparseRow] = []
        self._combos: List[SparseRow] = []
        self._count = 0
        for vector in vectors:
            self.add(vector)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _sparse(self, vector) -> SparseRow:
        if isinstance(vector, ExactMatrix):
            vector = vector.entries
        if isinstance(vector, dict):
            return {k: _field(v) for k, v in vector.items() if v}
        if self.length is None:
            self.length = len(vector)
        elif len(vector) != self.length:
            raise DimensionMismatchError(f"向量长度 {len(vector)} 与张成空间长度 {self.length} 不符")
        return {k: _field(v) for k, v in enumerate(vector) if v}

    def _reduce(self, vector: SparseRow) -> Tuple[SparseRow, SparseRow]:
        residual = dict(vector)
        combo: SparseRow = {}
        for pivot, row, row_combo in zip(self._pivots, self._rows, self._combos):
            c = residual.get(pivot)
            if not c:
                continue
            for k, v in row.items():
                value = residual.get(k, 0) - c * v
                if value:
                    residual[k] = value
                else:
                    residual.pop(k, None)
            for k, v in row_combo.items():
                value = combo.get(k, 0) + c * v
                if value:
                    combo[k] = value
                else:
                    combo.pop(k, None)
        return residual, combo

    def add(self, vector) -> bool:
        """加入一个向量；线性无关时返回 True。"""
        index = self._count
        self._count += 1
        residual, combo = self._reduce(self._sparse(vector))
        if not residual:
            return False
        # residual = v - Σ c_j row_j，对应组合系数 e_index - combo
        new_combo: SparseRow = {k: -v for k, v in combo.items()}
        new_combo[index] = new_combo.get(index, 0) + 1
        pivot = min(residual)
        inverse = 1 / residual[pivot]
        new_row = {k: v * inverse for k, v in residual.items()}
        new_combo = {k: v * inverse for k, v in new_combo.items() if v}
        # 保持约化形：从已有行中消去新主元列
        for idx, row in enumerate(self._rows):
            c = row.get(pivot)
            if not c:
                continue
            for k, v in new_row.items():
                value = row.get(k, 0) - c * v
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
            row_combo = self._combos[idx]
            for k, v in new_combo.items():
                value = row_combo.get(k, 0) - c * v
                if value:
                    row_combo[k] = value
                else:
                    row_combo.pop(k, None)
        self._pivots.append(pivot)
        self._rows.append(new_row)
        self._combos.append(new_combo)
        return True

    def contains(self, vector) -> bool:
        residual, _ = self._reduce(self._sparse(vector))
        return not residual

    def residual(self, vector) -> SparseRow:
        residual, _ = self._reduce(self._sparse(vector))
        return residual

    def coefficients(self, vector) -> Optional[List]:
        """若 vector 在张成中，返回其在原始输入向量上的系数，否则返回 None。"""
        residual, combo = self._reduce(self._sparse(vector))
        if residual:
            return None
        return [combo.get(k, Fraction(0)) for k in range(self._count)]


@dataclass(frozen=True)
class SpanMembership:
    member: bool
    coefficients: Optional[Tuple[GaussRat, ...]] = None


def rank(m: ExactMatrix) -> int:
    """高斯有理数域上的精确秩。"""
    return ExactSpan(m.row_vectors()).dim


def rational_rank(vectors: Sequence[Sequence]) -> int:
    """有理向量组的秩。"""
    if not vectors:
        return 0
    return ExactSpan(vectors).dim


def span_membership(x: ExactMatrix, basis: Sequence[ExactMatrix]) -> SpanMembership:
    """判定 x 是否为 basis 的精确线性组合，并返回系数。"""
    for matrix in basis:
        if matrix.shape != x.shape:
            raise DimensionMismatchError(f"尺寸不一致: {matrix.shape} vs {x.shape}")
    span = ExactSpan(basis, length=x.rows * x.cols)
    coefficients = span.coefficients(x)
    if coefficients is None:
        return SpanMembership(member=False)
    return SpanMembership(member=True, coefficients=tuple(as_gauss(c) for c in coefficients))


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[List]:
    """求解 matrix · x = rhs；无解时返回 None，多解时返回其中一个。"""
    if not matrix:
        raise ValueError("空系数矩阵")
    if len(matrix) != len(rhs):
        raise DimensionMismatchError("方程个数与右端项长度不一致")
    columns = [[row[j] for row in matrix] for j in range(len(matrix[0]))]
    span = ExactSpan(columns, length=len(matrix))
    return span.coefficients(list(rhs))
