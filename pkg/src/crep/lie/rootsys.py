# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
经典根系 A/B/C/D 与 Weyl 群作用。

坐标约定：L_i 在环境坐标中正交规范。Aₙ 在 ℝⁿ⁺¹ 的零和超平面中工作，
权以零和代表元存储。单根顺序为 L_j - L_{j+1}（j = 1..n-1）之后接特殊单根
（A: L_n - L_{n+1}; B: L_n; C: 2L_n; D: L_{n-1} + L_n），基本权顺序与之对应。
"""

import logging
import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.errors import OrbitTooLargeError, UnsupportedRootSystemError
from ..core.models import Weight, WeylOrbit
from ..exact.matrix import ExactSpan, rational_rank

logger = logging.getLogger(__name__)

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

# 小秩同构（𝔰𝔩₂ ≃ 𝔰𝔬₃ ≃ 𝔰𝔭₂, 𝔰𝔬₅ ≃ 𝔰𝔭₄, 𝔰𝔩₄ ≃ 𝔰𝔬₆）
ISOMORPHIC_SYSTEMS = {
    ("B", 1): ("A", 1),
    ("C", 1): ("A", 1),
    ("C", 2): ("B", 2),
    ("D", 3): ("A", 3),
}

_H = Fraction(1, 2)

# 源类型 L 坐标到目标类型 L 坐标的线性映射，第 j 列为 L_j 的像；单根映到单根
_WEIGHT_MAPS = {
    ("B", 1): ((Fraction(1),), (Fraction(-1),)),
    ("C", 1): ((_H,), (-_H,)),
    ("C", 2): ((_H, _H), (_H, -_H)),
    ("D", 3): ((_H, _H, -_H), (_H, -_H, _H), (-_H, _H, _H), (-_H, -_H, -_H)),
}

# 不再是单李代数
_NOT_SIMPLE = {("D", 1): "𝔰𝔬₂ 是交换的", ("D", 2): "𝔰𝔬₄ ≃ 𝔰𝔩₂ × 𝔰𝔩₂ 不是单的"}


def inner(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def pairing(w: Sequence[Fraction], root: Sequence[Fraction]) -> Fraction:
    """⟨w, α∨⟩ = 2(w, α)/(α, α)。"""
    return 2 * inner(w, root) / inner(root, root)


def negate(w: Weight) -> Weight:
    return tuple(-x for x in w)


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, w: Weight) -> Weight:
    return tuple(c * x for x in w)


def is_zero(w: Weight) -> bool:
    return not any(w)


def canonical_weight(coords: Sequence, family: str) -> Weight:
    """转为 Fraction 元组；A 型减去坐标均值得到零和代表元。"""
    values = tuple(Fraction(x) for x in coords)
    if family == "A":
        mean = sum(values, Fraction(0)) / len(values)
        if mean:
            values = tuple(x - mean for x in values)
    return values


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """一个经典根系的数据。"""

    family: str
    rank: int
    dim: int  # 环境维数
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    fundamental_weights: Tuple[Weight, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystemData) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def key(self) -> Tuple[str, int]:
        return self.family, self.rank

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def simple_roots_int(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in root) for root in self.simple_roots)

    @cached_property
    def simple_norms_int(self) -> Tuple[int, ...]:
        return tuple(sum(x * x for x in root) for root in self.simple_roots_int)

    @cached_property
    def simple_span(self) -> ExactSpan:
        return ExactSpan(self.simple_roots)

    @cached_property
    def rho(self) -> Weight:
        total = tuple(Fraction(0) for _ in range(self.dim))
        for root in self.positive_roots:
            total = add(total, root)
        return scale(_H, total)

    @cached_property
    def roots(self) -> Tuple[Weight, ...]:
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    def make_weight(self, coords: Sequence) -> Weight:
        if len(coords) != self.dim:
            raise ValueError(f"{self.name} 的权需要 {self.dim} 个坐标，收到 {len(coords)} 个")
        return canonical_weight(coords, self.family)

    def zero(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.dim))


def _unit(dim: int, i: int, value=1) -> List[Fraction]:
    vector = [Fraction(0)] * dim
    vector[i] = Fraction(value)
    return vector


def _pm(dim: int, j: int, k: int, sign: int) -> Weight:
    vector = _unit(dim, j)
    vector[k] += sign
    return tuple(vector)


def _partial_sum(dim: int, count: int, value=Fraction(1)) -> List[Fraction]:
    return [value if i < count else Fraction(0) for i in range(dim)]


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystemData:
    """
    构造经典根系。

    Raises:
        UnsupportedRootSystemError: (family, rank) 不在支持范围内；若存在同构的受支持根系则在信息中给出
    """
    family = family.upper()
    if family not in FAMILIES:
        raise UnsupportedRootSystemError(f"不支持的类型: {family}（仅支持 A/B/C/D）")
    if rank < MIN_RANK[family]:
        key = (family, rank)
        target = ISOMORPHIC_SYSTEMS.get(key)
        if target:
            raise UnsupportedRootSystemError(
                f"{family}{rank} 不在支持范围内，请使用同构的 {target[0]}{target[1]}",
                isomorphic_to=target,
            )
        reason = _NOT_SIMPLE.get(key, f"{family} 型要求 rank ≥ {MIN_RANK[family]}")
        raise UnsupportedRootSystemError(f"不支持 {family}{rank}: {reason}")

    n = rank
    dim = n + 1 if family == "A" else n
    positive: List[Weight] = []
    simple: List[Weight] = [_pm(dim, j, j + 1, -1) for j in range(n - 1)]

    if family == "A":
        positive = [_pm(dim, j, k, -1) for j in range(dim) for k in range(j + 1, dim)]
        simple.append(_pm(dim, n - 1, n, -1))
    else:
        if family == "B":
            positive.extend(tuple(_unit(dim, i)) for i in range(n))
            simple.append(tuple(_unit(dim, n - 1)))
        elif family == "C":
            positive.extend(tuple(_unit(dim, i, 2)) for i in range(n))
            simple.append(tuple(_unit(dim, n - 1, 2)))
        else:
            simple.append(_pm(dim, n - 2, n - 1, 1))
        for j in range(n):
            for k in range(j + 1, n):
                positive.append(_pm(dim, j, k, -1))
                positive.append(_pm(dim, j, k, 1))

    fundamental: List[Weight] = []
    for i in range(1, n + 1):
        if family == "A":
            fundamental.append(canonical_weight(_partial_sum(dim, i), "A"))
        elif family == "B" and i == n:
            fundamental.append(tuple(_partial_sum(dim, n, _H)))
        elif family == "D" and i == n - 1:
            weight = _partial_sum(dim, n, _H)
            weight[n - 1] = -_H
            fundamental.append(tuple(weight))
        elif family == "D" and i == n:
            fundamental.append(tuple(_partial_sum(dim, n, _H)))
        else:
            fundamental.append(tuple(_partial_sum(dim, i)))

    rs = RootSystemData(
        family=family,
        rank=n,
        dim=dim,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(fundamental),
    )
    for i, omega in enumerate(rs.fundamental_weights):
        for j, alpha in enumerate(rs.simple_roots):
            if pairing(omega, alpha) != (1 if i == j else 0):
                raise RuntimeError(f"{rs.name} 基本权与单余根不对偶: ω{i + 1}, α{j + 1}")
    logger.debug("构造根系 %s: |Φ⁺|=%d", rs.name, len(rs.positive_roots))
    return rs


@dataclass(frozen=True)
class ResolvedSystem:
    """经小秩同构重定向后的根系，附带权坐标映射。"""

    source: Tuple[str, int]
    system: RootSystemData
    weight_map: Optional[Tuple[Tuple[Fraction, ...], ...]] = None

    @property
    def redirected(self) -> bool:
        return self.weight_map is not None

    @property
    def source_dim(self) -> int:
        if self.weight_map is None:
            return self.system.dim
        return len(self.weight_map[0])

    def translate(self, coords: Sequence) -> Weight:
        """将源类型的 L 坐标映到目标根系的权。"""
        values = [Fraction(x) for x in coords]
        if self.weight_map is None:
            return self.system.make_weight(values)
        if len(values) != self.source_dim:
            raise ValueError(
                f"{self.source[0]}{self.source[1]} 的权需要 {self.source_dim} 个坐标，收到 {len(values)} 个"
            )
        image = [inner(row, values) for row in self.weight_map]
        return self.system.make_weight(image)


def resolve_root_system(family: str, rank: int) -> ResolvedSystem:
    """接受小秩同构输入并重定向到受支持的根系。"""
    family = family.upper()
    key = (family, rank)
    target = ISOMORPHIC_SYSTEMS.get(key)
    if target is None:
        return ResolvedSystem(source=key, system=build_root_system(family, rank))
    logger.info("%s%d 经小秩同构重定向到 %s%d", family, rank, target[0], target[1])
    return ResolvedSystem(
        source=key,
        system=build_root_system(*target),
        weight_map=_WEIGHT_MAPS[key],
    )


def supported_systems(max_rank: int) -> List[RootSystemData]:
    """按 family → rank 顺序列出 rank ≤ max_rank 的受支持根系。"""
    return [
        build_root_system(family, rank)
        for family in FAMILIES
        for rank in range(MIN_RANK[family], max_rank + 1)
    ]


def weyl_group_order(rs: RootSystemData) -> int:
    n = rs.rank
    if rs.family == "A":
        return math.factorial(n + 1)
    if rs.family in ("B", "C"):
        return 2 ** n * math.factorial(n)
    return 2 ** (n - 1) * math.factorial(n)


def reflect(w: Weight, root: Weight) -> Weight:
    """s_α(w) = w - ⟨w, α∨⟩α。"""
    if is_zero(root):
        raise ValueError("零向量不能作为反射根")
    c = pairing(w, root)
    if not c:
        return tuple(w)
    return tuple(x - c * a for x, a in zip(w, root))


def fundamental_coefficients(w: Weight, rs: RootSystemData) -> Tuple[Fraction, ...]:
    """⟨w, αᵢ∨⟩，即 w 在基本权基下的坐标。"""
    return tuple(pairing(w, alpha) for alpha in rs.simple_roots)


def from_fundamental(coeffs: Sequence, rs: RootSystemData) -> Weight:
    if len(coeffs) != rs.rank:
        raise ValueError(f"{rs.name} 需要 {rs.rank} 个基本权系数，收到 {len(coeffs)} 个")
    total = rs.zero()
    for c, omega in zip(coeffs, rs.fundamental_weights):
        if c:
            total = add(total, scale(Fraction(c), omega))
    return total


def in_chamber(w: Weight, rs: RootSystemData) -> bool:
    """是否在闭基本 Weyl 房 C 内。"""
    return all(c >= 0 for c in fundamental_coefficients(w, rs))


def is_integral_weight(w: Weight, rs: RootSystemData) -> bool:
    """是否属于权格 Λ（A 型另要求零和）。"""
    if len(w) != rs.dim:
        return False
    if rs.family == "A" and sum(w, Fraction(0)) != 0:
        return False
    return all(c.denominator == 1 for c in fundamental_coefficients(w, rs))


def root_coordinates(w: Weight, rs: RootSystemData) -> Optional[List[Fraction]]:
    """w 在单根基下的坐标；不在其张成中时返回 None。"""
    return rs.simple_span.coefficients(list(w))


def in_root_lattice(w: Weight, rs: RootSystemData) -> bool:
    coords = root_coordinates(w, rs)
    return coords is not None and all(Fraction(c).denominator == 1 for c in coords)


def height(w: Weight, rs: RootSystemData) -> Fraction:
    coords = root_coordinates(w, rs)
    if coords is None:
        raise ValueError(f"{w} 不在 {rs.name} 的根张成中")
    return sum((Fraction(c) for c in coords), Fraction(0))


def dominant_representative(w: Weight, rs: RootSystemData) -> Weight:
    """轨道中唯一落在闭基本房内的元素。"""
    if rs.family == "A":
        return tuple(sorted(w, reverse=True))
    magnitudes = sorted((abs(x) for x in w), reverse=True)
    if rs.family == "D" and magnitudes[-1] != 0:
        negatives = sum(1 for x in w if x < 0)
        if negatives % 2:
            magnitudes[-1] = -magnitudes[-1]
    return tuple(magnitudes)


def _scaled(w: Weight) -> Tuple[Tuple[int, ...], int]:
    denominator = 1
    for x in w:
        denominator = math.lcm(denominator, Fraction(x).denominator)
    return tuple(int(x * denominator) for x in w), denominator


def iter_weyl_orbit(w: Weight, rs: RootSystemData) -> Iterator[Weight]:
    """
    按单反射做广度优先遍历，逐个产出轨道元素（首个为 w 本身）。

    坐标放大为整数后计算；这些类型的单反射保持 ℤ^dim，故整除精确。
    """
    start, denominator = _scaled(w)
    roots = rs.simple_roots_int
    norms = rs.simple_norms_int
    seen = {start}
    queue = deque([start])
    yield tuple(Fraction(x, denominator) for x in start)
    while queue:
        v = queue.popleft()
        for alpha, norm in zip(roots, norms):
            c = 2 * sum(x * a for x, a in zip(v, alpha)) // norm
            if not c:
                continue
            image = tuple(x - c * a for x, a in zip(v, alpha))
            if image not in seen:
                seen.add(image)
                queue.append(image)
                yield tuple(Fraction(x, denominator) for x in image)


def weyl_orbit(w: Weight, rs: RootSystemData, limit: Optional[int] = None) -> WeylOrbit:
    """𝒪_w = {s(w): s ∈ 𝒲}；元素按字典序降序排列。"""
    seed = tuple(Fraction(x) for x in w)
    elements: List[Weight] = []
    for element in iter_weyl_orbit(seed, rs):
        elements.append(element)
        if limit is not None and len(elements) > limit:
            raise OrbitTooLargeError(f"{rs.name} 中 {seed} 的轨道超过上限 {limit}")
    return WeylOrbit(seed=seed, elements=tuple(sorted(elements, reverse=True)))


def orbit_size(w: Weight, rs: RootSystemData) -> int:
    """通过计数支配代表元的（带符号）置换精确给出轨道大小，不做枚举。"""
    dominant = dominant_representative(w, rs)
    if rs.family == "A":
        count = math.factorial(len(dominant))
        for multiplicity in Counter(dominant).values():
            count //= math.factorial(multiplicity)
        return count
    magnitudes = [abs(x) for x in dominant]
    count = math.factorial(rs.rank)
    for multiplicity in Counter(magnitudes).values():
        count //= math.factorial(multiplicity)
    nonzero = sum(1 for x in magnitudes if x)
    count *= 2 ** nonzero
    if rs.family == "D" and nonzero == rs.rank:
        count //= 2
    return count


def orbit_rank(w: Weight, rs: RootSystemData) -> int:
    """轨道张成的秩；沿轨道遍历直到秩达到 rank 为止。"""
    span = ExactSpan()
    for element in iter_weyl_orbit(w, rs):
        span.add(list(element))
        if span.dim == rs.rank:
            break
    return span.dim


def weights_rank(weights: Sequence[Weight]) -> int:
    return rational_rank([list(w) for w in weights])


def _compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(q)))


def diagram_automorphisms(rs: RootSystemData) -> List[Tuple[int, ...]]:
    """
    Dynkin 图的非平凡自同构（作用于单根下标）。

    Aₙ (n ≥ 2): 反转；Dₙ: 交换两个尾端节点；D₄: 额外的三重性，合成整个 𝔖₃。
    """
    n = rs.rank
    identity = tuple(range(n))
    generators: List[Tuple[int, ...]] = []
    if rs.family == "A" and n >= 2:
        generators.append(tuple(reversed(identity)))
    elif rs.family == "D":
        swap = list(identity)
        swap[n - 2], swap[n - 1] = n - 1, n - 2
        generators.append(tuple(swap))
        if n == 4:
            generators.append((2, 1, 3, 0))
    group = {identity}
    frontier = [identity]
    while frontier:
        element = frontier.pop()
        for g in generators:
            product = _compose(g, element)
            if product not in group:
                group.add(product)
                frontier.append(product)
    return sorted(group - {identity})


def apply_diagram_automorphism(w: Weight, rs: RootSystemData, perm: Sequence[int]) -> Weight:
    """按 perm 置换基本权系数：第 i 个系数移到第 perm[i] 位。"""
    coeffs = fundamental_coefficients(w, rs)
    permuted = [Fraction(0)] * rs.rank
    for i, c in enumerate(coeffs):
        permuted[perm[i]] = c
    return from_fundamental(permuted, rs)
