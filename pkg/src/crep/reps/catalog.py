# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
显式矩阵实现 dρ: 𝔤 → 𝔤𝔩(V) 目录。

所有元素为高斯有理数，Cartan 基均为对角矩阵，weight_labels[j] 为第 j 个对角位置的权。
分裂形式的二次型取反对角矩阵，使 Cartan 子代数恰好落在对角线上。
"""

import logging
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..core.errors import NonCommutingCartanError, StructureMismatchError, UnknownLabelError
from ..core.models import MatrixRep, Weight
from ..exact.matrix import ExactMatrix, ExactSpan, block_diagonal, commutator, solve
from ..exact.numbers import GaussRat, I
from ..lie.rootsys import build_root_system, canonical_weight, inner
from .clifford import chirality, gamma_matrices, spin_generator

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)


def _unit(dim: int, i: int) -> Weight:
    return tuple(Fraction(1 if k == i else 0) for k in range(dim))


def _zero(dim: int) -> Weight:
    return tuple(Fraction(0) for _ in range(dim))


def build_sl2_symmetric_power(d: int, label: Optional[str] = None) -> MatrixRep:
    """
    S^d ℂ²：基 [H, E, F]，H = diag(d, d-2, …, -d)。

    权以 A₁ 零和坐标表示：H 的特征值 d-2k 对应 ((d-2k)/2, -(d-2k)/2)。
    """
    if d < 1:
        raise ValueError(f"对称幂次数必须 ≥ 1，收到 {d}")
    size = d + 1
    h = ExactMatrix.diagonal_matrix([d - 2 * k for k in range(size)])
    e_entries = [0] * (size * size)
    f_entries = [0] * (size * size)
    for k in range(1, size):
        e_entries[(k - 1) * size + k] = k
    for k in range(size - 1):
        f_entries[(k + 1) * size + k] = d - k
    e = ExactMatrix(size, size, e_entries)
    f = ExactMatrix(size, size, f_entries)
    weights = tuple(
        (Fraction(d - 2 * k, 2), Fraction(-(d - 2 * k), 2)) for k in range(size)
    )
    return MatrixRep(
        label=label or f"sl2-sym-{d}",
        dim_V=size,
        algebra_basis=(h, e, f),
        cartan_basis=(h,),
        weight_labels=weights,
        cartan_coords=((Fraction(1), Fraction(-1)),),
        family="A",
        rank=1,
        highest=weights[0],
        description=f"𝔰𝔩₂ 的 {d} 次对称幂 S^{d}ℂ²",
    )


def _orthogonal_basis(size: int) -> Tuple[List[ExactMatrix], Dict[int, ExactMatrix]]:
    """J 为反对角全 1 时 𝔰𝔬(J) 的基；返回 (基, 第 a 个 Cartan 元)。"""
    basis: List[ExactMatrix] = []
    cartan: Dict[int, ExactMatrix] = {}
    for a in range(size):
        for b in range(a + 1, size):
            a_mirror = size - 1 - a
            b_mirror = size - 1 - b
            x = ExactMatrix.elementary(size, a_mirror, b) - ExactMatrix.elementary(size, b_mirror, a)
            if b == a_mirror:
                x = -x  # 规范为 E_aa - E_a'a'
                cartan[a] = x
            basis.append(x)
    return basis, cartan


def _symplectic_basis(size: int) -> Tuple[List[ExactMatrix], Dict[int, ExactMatrix]]:
    """Ω[i][N-1-i] = ±1（前半为 +1）时 𝔰𝔭(Ω) 的基 X = Ωᵀ·S，S 对称。"""
    n = size // 2
    omega_t = ExactMatrix.zeros(size)
    for i in range(size):
        sign = 1 if i < n else -1
        omega_t = omega_t + ExactMatrix.elementary(size, size - 1 - i, i, sign)
    basis: List[ExactMatrix] = []
    cartan: Dict[int, ExactMatrix] = {}
    for a in range(size):
        for b in range(a, size):
            s = ExactMatrix.elementary(size, a, b)
            if a != b:
                s = s + ExactMatrix.elementary(size, b, a)
            x = omega_t @ s
            if x.is_diagonal():
                if x[a, a] != 1:
                    x = -x
                cartan[a] = x
            basis.append(x)
    return basis, cartan


def build_quadratic_standard(family: str, rank: int) -> MatrixRep:
    """B/C/D 型的标准表示（分裂形式）。"""
    family = family.upper()
    if family not in ("B", "C", "D"):
        raise ValueError(f"二次型标准表示只支持 B/C/D，收到 {family}")
    rs = build_root_system(family, rank)
    n = rs.rank
    size = 2 * n + 1 if family == "B" else 2 * n
    if family == "C":
        basis, cartan = _symplectic_basis(size)
    else:
        basis, cartan = _orthogonal_basis(size)

    weights: List[Weight] = []
    for slot in range(size):
        if slot < n:
            weights.append(_unit(n, slot))
        elif family == "B" and slot == n:
            weights.append(_zero(n))
        else:
            weights.append(tuple(-x for x in _unit(n, size - 1 - slot)))

    prefix = "sp2n" if family == "C" else "soN"
    return MatrixRep(
        label=f"{prefix}-standard:{family}{n}",
        dim_V=size,
        algebra_basis=tuple(basis),
        cartan_basis=tuple(cartan[k] for k in range(n)),
        weight_labels=tuple(weights),
        cartan_coords=tuple(_unit(n, k) for k in range(n)),
        family=family,
        rank=n,
        highest=_unit(n, 0),
        description=f"{rs.name} 的标准表示 ℂ^{size}",
    )


_WEDGE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _wedge_image(a: int, b: int) -> ExactMatrix:
    """E_ab 在 Λ²ℂ⁴ 上的作用：X(e_i∧e_j) = Xe_i∧e_j + e_i∧Xe_j。"""
    index = {pair: k for k, pair in enumerate(_WEDGE_PAIRS)}
    entries = [0] * 36

    def put(p: int, q: int, column: int) -> None:
        if p == q:
            return
        row, sign = (index[(p, q)], 1) if p < q else (index[(q, p)], -1)
        entries[row * 6 + column] += sign

    for column, (i, j) in enumerate(_WEDGE_PAIRS):
        if b == i:
            put(a, j, column)
        if b == j:
            put(i, a, column)
    return ExactMatrix(6, 6, entries)


def build_sl4_lambda2() -> MatrixRep:
    """𝔰𝔩₄ 在 Λ²ℂ⁴ 上的表示（≃ 𝔰𝔬₆ 标准表示）。"""
    cartan = [_wedge_image(i, i) - _wedge_image(i + 1, i + 1) for i in range(3)]
    off_diagonal = [_wedge_image(i, j) for i in range(4) for j in range(4) if i != j]
    weights = tuple(
        canonical_weight([1 if k in pair else 0 for k in range(4)], "A") for pair in _WEDGE_PAIRS
    )
    coords = tuple(
        tuple(Fraction(1 if k == i else -1 if k == i + 1 else 0) for k in range(4)) for i in range(3)
    )
    return MatrixRep(
        label="sl4-lambda2",
        dim_V=6,
        algebra_basis=tuple(cartan + off_diagonal),
        cartan_basis=tuple(cartan),
        weight_labels=weights,
        cartan_coords=coords,
        family="A",
        rank=3,
        highest=weights[0],
        description="𝔰𝔩₄ 在 Λ²ℂ⁴ 上的表示",
    )


def _spin_weights(m: int, slots: Sequence[int]) -> Tuple[Weight, ...]:
    # 第 k 个张量因子对应二进制的第 m-1-k 位（kron 顺序）
    return tuple(
        tuple(_HALF if not (s >> (m - 1 - k)) & 1 else -_HALF for k in range(m)) for s in slots
    )


def build_spin(family: str, rank: int, chirality_sign: Optional[int] = None) -> MatrixRep:
    """
    旋量表示：生成元 M_ab = ¼[γa, γb]，其中 M_{2k-1,2k} 替换为 H_k = -i·M_{2k-1,2k}。

    只支持 (B, 2) 与 (D, 4, ±1)；D₄ 取手征算子 γ₁⋯γ₈（乘 i⁴）的 ±1 特征块。
    """
    family = family.upper()
    if (family, rank) == ("B", 2):
        if chirality_sign is not None:
            raise ValueError("B₂ 旋量表示没有手征")
        label = "spin-so5"
    elif (family, rank) == ("D", 4) and chirality_sign in (1, -1):
        label = "spin8-plus" if chirality_sign == 1 else "spin8-minus"
    else:
        raise ValueError(
            f"旋量表示只支持 (B, 2) 与 (D, 4, ±1)，收到 ({family}, {rank}, {chirality_sign})"
        )

    m = rank
    count = 2 * m + 1 if family == "B" else 2 * m
    gammas = gamma_matrices(count)
    size = 2 ** m

    generators: List[ExactMatrix] = []
    cartan: List[ExactMatrix] = []
    for a in range(count):
        for b in range(a + 1, count):
            generator = spin_generator(gammas, a, b)
            if a % 2 == 0 and b == a + 1:
                generator = generator.scale(-I)
                cartan.append(generator)
            generators.append(generator)

    slots = list(range(size))
    if chirality_sign is not None:
        gamma_chiral = chirality(gammas)
        slots = [s for s in range(size) if gamma_chiral[s, s] == chirality_sign]
        generators = [g.submatrix(slots) for g in generators]
        cartan = [h.submatrix(slots) for h in cartan]

    weights = _spin_weights(m, slots)
    highest = max(weights)
    return MatrixRep(
        label=label,
        dim_V=len(slots),
        algebra_basis=tuple(generators),
        cartan_basis=tuple(cartan),
        weight_labels=weights,
        cartan_coords=tuple(_unit(m, k) for k in range(m)),
        family=family,
        rank=rank,
        highest=highest,
        description=f"{family}{rank} 的旋量表示",
    )


def build_diagonal_group_algebra(n: int) -> MatrixRep:
    """n 阶对角矩阵代数（交换、非半单）。"""
    if n < 2:
        raise ValueError(f"n 必须 ≥ 2，收到 {n}")
    basis = tuple(ExactMatrix.elementary(n, i, i) for i in range(n))
    units = tuple(_unit(n, i) for i in range(n))
    return MatrixRep(
        label=f"gl-diagonal:{n}",
        dim_V=n,
        algebra_basis=basis,
        cartan_basis=basis,
        weight_labels=units,
        cartan_coords=units,
        semisimple=False,
        description=f"{n} 阶可逆对角矩阵群的李代数",
    )


def build_unipotent_upper(n: int) -> MatrixRep:
    """n 阶严格上三角矩阵代数 𝔯ₙ（幂零，Cartan 为 0）。"""
    if n < 2:
        raise ValueError(f"n 必须 ≥ 2，收到 {n}")
    basis = tuple(ExactMatrix.elementary(n, i, j) for i in range(n) for j in range(i + 1, n))
    return MatrixRep(
        label=f"unipotent-upper:{n}",
        dim_V=n,
        algebra_basis=basis,
        cartan_basis=(),
        weight_labels=tuple(() for _ in range(n)),
        cartan_coords=(),
        semisimple=False,
        description=f"{n} 阶严格上三角矩阵代数",
    )


def structure_constants(basis: Sequence[ExactMatrix]) -> List[List[Optional[list]]]:
    """[Bᵢ, Bⱼ] 在基下的坐标；不在张成中时为 None。"""
    span = ExactSpan(basis)
    return [
        [span.coefficients(commutator(basis[i], basis[j])) for j in range(len(basis))]
        for i in range(len(basis))
    ]


def _pad(weight: Weight, before: int, after: int) -> Weight:
    return (Fraction(0),) * before + tuple(weight) + (Fraction(0),) * after


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """
    乘积群 G_a × G_b 在 V_a ⊕ V_b 上的块对角实现。

    李代数为 𝔤_a ⊕ 𝔤_b，基为 {diag(x, 0)} ∪ {diag(0, y)}；𝔥 同样拼接，
    权坐标各自补零后拼接。

    Raises:
        StructureMismatchError: 两者的结构常数或 Cartan 坐标不一致
    """
    if len(a.algebra_basis) != len(b.algebra_basis) or len(a.cartan_basis) != len(b.cartan_basis):
        raise StructureMismatchError(f"{a.label} 与 {b.label} 的基长度不一致")
    if a.cartan_coords != b.cartan_coords:
        raise StructureMismatchError(f"{a.label} 与 {b.label} 的 Cartan 坐标不一致")
    if structure_constants(a.algebra_basis) != structure_constants(b.algebra_basis):
        raise StructureMismatchError(f"{a.label} 与 {b.label} 的结构常数不一致")
    zero_a = ExactMatrix.zeros(a.dim_V, a.dim_V)
    zero_b = ExactMatrix.zeros(b.dim_V, b.dim_V)
    dim_a = len(a.weight_labels[0])
    dim_b = len(b.weight_labels[0])
    return MatrixRep(
        label=f"{a.label}+{b.label}",
        dim_V=a.dim_V + b.dim_V,
        algebra_basis=tuple(block_diagonal(x, zero_b) for x in a.algebra_basis)
        + tuple(block_diagonal(zero_a, y) for y in b.algebra_basis),
        cartan_basis=tuple(block_diagonal(h, zero_b) for h in a.cartan_basis)
        + tuple(block_diagonal(zero_a, h) for h in b.cartan_basis),
        weight_labels=tuple(_pad(w, 0, dim_b) for w in a.weight_labels)
        + tuple(_pad(w, dim_a, 0) for w in b.weight_labels),
        cartan_coords=tuple(_pad(c, 0, dim_b) for c in a.cartan_coords)
        + tuple(_pad(c, dim_a, 0) for c in b.cartan_coords),
        highest=None,
        semisimple=a.semisimple and b.semisimple,
        description=f"{a.label} ⊕ {b.label}",
    )


def weights_of_rep(r: MatrixRep) -> Counter:
    """
    从对角 Cartan 读出各位置的权（多重集）。

    第 j 个位置的权 w 满足 ⟨w, cartan_coords[c]⟩ = H_c[j][j]；A 型额外要求零和。

    Raises:
        ValueError: Cartan 基不是对角矩阵
    """
    if not r.cartan_basis:
        return Counter(r.weight_labels)
    for c, h in enumerate(r.cartan_basis):
        if not h.is_diagonal():
            raise ValueError(f"{r.label} 的第 {c} 个 Cartan 基元不是对角矩阵")
    rows = [list(coords) for coords in r.cartan_coords]
    dim = len(rows[0])
    if r.family == "A":
        rows.append([Fraction(1)] * dim)
    weights: Counter = Counter()
    for j in range(r.dim_V):
        rhs = [h[j, j] for h in r.cartan_basis]
        if r.family == "A":
            rhs.append(GaussRat(0))
        if any(not value.is_real() for value in rhs):
            raise ValueError(f"{r.label} 第 {j} 个对角位置的 Cartan 值不是实数")
        solution = solve(rows, [value.re for value in rhs])
        if solution is None:
            raise ValueError(f"{r.label} 第 {j} 个对角位置无法解出权")
        weights[tuple(Fraction(x) for x in solution)] += 1
    return weights


def validate_matrix_rep(r: MatrixRep) -> None:
    """
    校验换位子封闭、Cartan 对角交换、对角值与 weight_labels 一致。

    Raises:
        ValueError: 任一条件不成立
    """
    from ..analysis.powerspan import commutator_failure

    failure = commutator_failure(r)
    if failure is not None:
        raise ValueError(f"{r.label} 换位子不封闭: {failure}")
    for a, h in enumerate(r.cartan_basis):
        if not h.is_diagonal():
            raise ValueError(f"{r.label} 的第 {a} 个 Cartan 基元不是对角矩阵")
        for b in range(a + 1, len(r.cartan_basis)):
            if not commutator(h, r.cartan_basis[b]).is_zero():
                raise NonCommutingCartanError(f"{r.label} 的 Cartan 基元 {a}, {b} 不交换")
    if len(r.weight_labels) != r.dim_V:
        raise ValueError(f"{r.label} 的权标签个数 {len(r.weight_labels)} 与维数 {r.dim_V} 不符")
    for c, (h, coords) in enumerate(zip(r.cartan_basis, r.cartan_coords)):
        for j, weight in enumerate(r.weight_labels):
            if h[j, j] != inner(weight, coords):
                raise ValueError(f"{r.label} 位置 {j} 的权 {weight} 与 Cartan 基元 {c} 的对角值不符")
    logger.debug("%s 校验通过", r.label)


# 固定标签 → 构造函数
_FIXED_BUILDERS: Dict[str, Callable[[], MatrixRep]] = {
    "sl2-adjoint": lambda: build_sl2_symmetric_power(2, label="sl2-adjoint"),
    "sl4-lambda2": build_sl4_lambda2,
    "spin-so5": lambda: build_spin("B", 2),
    "spin8-plus": lambda: build_spin("D", 4, 1),
    "spin8-minus": lambda: build_spin("D", 4, -1),
}

_CATALOG_LABELS = (
    "sl2-sym-1",
    "sl2-sym-2",
    "sl2-sym-3",
    "sl2-sym-4",
    "sl2-adjoint",
    "soN-standard:B2",
    "soN-standard:B3",
    "soN-standard:D4",
    "sp2n-standard:C3",
    "sl4-lambda2",
    "spin-so5",
    "spin8-plus",
    "spin8-minus",
    "gl-diagonal:2",
    "unipotent-upper:3",
)

_PATTERNS = (
    (re.compile(r"^sl2-sym-(\d+)$"), lambda m: build_sl2_symmetric_power(int(m.group(1)))),
    (
        re.compile(r"^(?:soN|sp2n)-standard:([BCD])(\d+)$"),
        lambda m: build_quadratic_standard(m.group(1), int(m.group(2))),
    ),
    (re.compile(r"^gl-diagonal(?::(\d+))?$"), lambda m: build_diagonal_group_algebra(int(m.group(1) or 2))),
    (re.compile(r"^unipotent-upper(?::(\d+))?$"), lambda m: build_unipotent_upper(int(m.group(1) or 3))),
)


def available_labels() -> Tuple[str, ...]:
    return _CATALOG_LABELS


@lru_cache(maxsize=64)
def build_from_label(label: str) -> MatrixRep:
    """
    按标签构造目录条目。

    除固定标签外接受 sl2-sym-<d>、soN-standard:<B|D><n>、sp2n-standard:C<n>、
    gl-diagonal[:n]、unipotent-upper[:n]，以及用 "+" 连接两个同构代数的直和。

    Raises:
        UnknownLabelError: 标签无法识别
    """
    label = label.strip()
    if "+" in label:
        left, right = label.split("+", 1)
        return direct_sum(build_from_label(left), build_from_label(right))
    builder = _FIXED_BUILDERS.get(label)
    if builder is not None:
        return builder()
    for pattern, build in _PATTERNS:
        match = pattern.match(label)
        if match:
            return build(match)
    raise UnknownLabelError(label, _CATALOG_LABELS)
