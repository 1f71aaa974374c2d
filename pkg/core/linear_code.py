"""
Z_m 上的线性码

码总是以 Howell 规范形保存，相等性就是表示相等。
提供对偶、和、交、包含、成员判定、hull、LCD 判定、参数计算
（含两阶段最小距离搜索）以及循环码构造。
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import Poly, ZZ, symbols

from .errors import DimensionError, HypothesisError, RingMismatchError
from .linalg import HowellForm, Matrix, Row, det, howell_form, is_frr, right_kernel
from .ring import RingElem, RingSpec, is_unit

# 最小距离搜索的默认上限
DEFAULT_ENUM_CAP = 2 ** 24
DEFAULT_WEIGHT_CAP = 3


@dataclass(frozen=True)
class LinearCode:
    """
    R^n 的子模，gens 为规范生成矩阵

    cardinality 由 Howell 主元算出：∏ m / d_k。
    """
    ring: RingSpec
    length: int
    gens: HowellForm
    cardinality: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.gens.matrix.cols != self.length:
            raise DimensionError(f"generators have {self.gens.matrix.cols} columns, code length is {self.length}")
        size = 1
        for d in self.gens.pivots:
            size *= self.ring.modulus // d
        object.__setattr__(self, 'cardinality', size)

    @property
    def generator_matrix(self) -> Matrix:
        return self.gens.matrix

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self.gens.rows

    @property
    def is_zero(self) -> bool:
        return not self.gens.rows

    @property
    def is_free(self) -> bool:
        return all(d == 1 for d in self.gens.pivots)

    @property
    def rank(self) -> Optional[int]:
        """自由码的秩；非自由码返回 None"""
        return len(self.gens.rows) if self.is_free else None

    def __str__(self) -> str:
        return f"code of length {self.length} over {self.ring} with {self.cardinality} codewords"


def code_from_matrix(M: Matrix) -> LinearCode:
    return LinearCode(M.ring, M.cols, howell_form(M))


def code_from_generators(ring: RingSpec, n: int, rows: Sequence[Sequence]) -> LinearCode:
    """
    由生成行构造规范码

    Args:
        ring: 环
        n: 码长
        rows: 生成行（整数或 RingElem）

    Returns:
        LinearCode，与生成行的顺序和冗余无关

    Example:
        >>> C1 = code_from_generators(ring_new(30), 2, [(15, 0), (0, 15)])
        >>> C1.cardinality
        4
    """
    if n < 1:
        raise DimensionError(f"code length must be >= 1, got {n}")
    return code_from_matrix(Matrix.from_rows(ring, rows, cols=n))


def full_space(ring: RingSpec, n: int) -> LinearCode:
    return code_from_matrix(Matrix.identity(ring, n))


def zero_code(ring: RingSpec, n: int) -> LinearCode:
    return code_from_matrix(Matrix.zeros(ring, 0, n))


def _check_compatible(C: LinearCode, D: LinearCode):
    if C.ring != D.ring:
        raise RingMismatchError(f"codes over {C.ring} and {D.ring}")
    if C.length != D.length:
        raise DimensionError(f"codes of length {C.length} and {D.length}")


def dual(C: LinearCode) -> LinearCode:
    """欧氏对偶：生成矩阵的右核"""
    return code_from_matrix(right_kernel(C.generator_matrix))


def code_sum(C: LinearCode, D: LinearCode) -> LinearCode:
    _check_compatible(C, D)
    return code_from_generators(C.ring, C.length, C.rows + D.rows)


def intersect(C: LinearCode, D: LinearCode) -> LinearCode:
    """C ∩ D = (C^⊥ + D^⊥)^⊥（Z_m 上双对偶成立）"""
    _check_compatible(C, D)
    return dual(code_sum(dual(C), dual(D)))


def equals(C: LinearCode, D: LinearCode) -> bool:
    _check_compatible(C, D)
    return C == D


def member(C: LinearCode, x: Sequence) -> bool:
    vec = [v.value if isinstance(v, RingElem) else int(v) for v in x]
    if len(vec) != C.length:
        raise DimensionError(f"vector of length {len(vec)} tested against a code of length {C.length}")
    return C.gens.contains(vec)


def contains_code(C: LinearCode, D: LinearCode) -> bool:
    """D ⊆ C"""
    _check_compatible(C, D)
    return all(C.gens.contains(row) for row in D.rows)


def hull(C: LinearCode) -> LinearCode:
    return intersect(C, dual(C))


def is_lcd(C: LinearCode) -> bool:
    return hull(C).is_zero


def is_lcd_free_test(G: Matrix) -> bool:
    """自由码的 LCD 判定：det(GGᵗ) 是单位；G 必须满行秩"""
    if not is_frr(G):
        raise HypothesisError("LCD determinant test needs a generator matrix of full row rank")
    return is_unit(det(G @ G.transpose()))


def scale_code(r: RingElem, C: LinearCode) -> LinearCode:
    """r·C = {r x : x ∈ C}"""
    if isinstance(r, RingElem) and r.ring != C.ring:
        raise RingMismatchError(f"scalar from {r.ring} applied to a code over {C.ring}")
    value = r.value if isinstance(r, RingElem) else int(r)
    return code_from_matrix(C.generator_matrix.scaled(value))


def iter_codewords(C: LinearCode) -> Iterator[Row]:
    """
    不重复地枚举全部码字

    Howell 形下每个码字唯一写成 Σ c_k g_k，0 <= c_k < m / d_k。
    """
    m = C.ring.modulus
    rows = C.rows
    ranges = [range(m // d) for d in C.gens.pivots]
    for coeffs in product(*ranges):
        word = [0] * C.length
        for c, row in zip(coeffs, rows):
            if c:
                word = [(a + c * b) % m for a, b in zip(word, row)]
        yield tuple(word)


def weight(x: Sequence[int]) -> int:
    return sum(1 for v in x if v)


@dataclass(frozen=True)
class Distance:
    """最小距离：lo == hi 时精确；否则是受重量上限约束的区间"""
    lo: int
    hi: int
    witness: Optional[Row] = None
    weight_cap: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"d in [{self.lo}, {self.hi}] (weight search capped at {self.weight_cap})"


def _min_distance_by_enumeration(C: LinearCode) -> Distance:
    best, witness = None, None
    for word in iter_codewords(C):
        w = weight(word)
        if w and (best is None or w < best):
            best, witness = w, word
            if best == 1:
                break
    return Distance(best, best, witness)


def _min_distance_by_weight(C: LinearCode, weight_cap: int) -> Distance:
    """
    按支撑集逐层搜索低重量码字

    x ∈ C 当且仅当 H xᵗ = 0（H 生成 C^⊥）；支撑在 S 上的码字就是 H 的 S 列子矩阵的右核。
    低重量层已排除时，本层找到的非零核向量重量恰为 w。
    """
    H = dual(C).generator_matrix
    n = C.length
    for w in range(1, min(weight_cap, n) + 1):
        for support in combinations(range(n), w):
            K = right_kernel(H.submatrix(range(H.rows), support))
            if K.rows == 0:
                continue
            word = [0] * n
            for pos, v in zip(support, K.row(0)):
                word[pos] = v
            return Distance(w, w, tuple(word), weight_cap)
    return Distance(weight_cap + 1, n, None, weight_cap)


def min_distance(C: LinearCode, enum_cap: int = DEFAULT_ENUM_CAP,
                 weight_cap: int = DEFAULT_WEIGHT_CAP) -> Optional[Distance]:
    """
    两阶段最小距离

    码字数不超过 enum_cap 时完全枚举；否则搜索重量 <= weight_cap 的码字，
    未找到时返回区间 [weight_cap+1, n]。零码没有最小距离，返回 None。
    """
    if enum_cap < 1 or weight_cap < 1:
        raise HypothesisError(f"enum_cap and weight_cap must be >= 1, got {enum_cap} and {weight_cap}")
    if C.is_zero:
        return None
    if C.cardinality <= enum_cap:
        return _min_distance_by_enumeration(C)
    return _min_distance_by_weight(C, weight_cap)


@dataclass(frozen=True)
class CodeParams:
    """码参数 (n, |C|, d)；rank 仅对自由码给出"""
    length: int
    cardinality: int
    min_distance: Optional[Distance]
    rank: Optional[int] = None
    modulus: Optional[int] = None
    chain: bool = False

    @property
    def cardinality_text(self) -> str:
        """链环上的自由码写成 m^k，其余写十进制"""
        if self.chain and self.rank:
            return f"{self.modulus}^{self.rank}"
        return str(self.cardinality)

    @property
    def distance_text(self) -> str:
        return "absent" if self.min_distance is None else str(self.min_distance)

    def __str__(self) -> str:
        return f"({self.length}, {self.cardinality_text}, {self.distance_text})"


def params(C: LinearCode, enum_cap: int = DEFAULT_ENUM_CAP,
           weight_cap: int = DEFAULT_WEIGHT_CAP) -> CodeParams:
    return CodeParams(
        length=C.length,
        cardinality=C.cardinality,
        min_distance=min_distance(C, enum_cap, weight_cap),
        rank=C.rank,
        modulus=C.ring.modulus,
        chain=C.ring.is_chain,
    )


_X = symbols('x')


def cyclic_code(ring: RingSpec, n: int, f: Sequence[int]) -> LinearCode:
    """
    由 x^n - 1 的首一因子 f 生成的循环码

    Args:
        ring: 环
        n: 码长
        f: 升幂系数 c0, c1, ..., 1

    Returns:
        由 f, xf, ..., x^{n-t-1} f 生成的秩 n-t 自由码

    Example:
        >>> cyclic_code(ring_new(25), 12, [1, 1]).rank
        11
    """
    m = ring.modulus
    coeffs = [int(c) % m for c in f]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    t = len(coeffs) - 1
    if coeffs[-1] != 1:
        raise HypothesisError("generator polynomial must be monic")
    if not 0 <= t < n:
        raise HypothesisError(f"generator polynomial degree {t} must be below the length {n}")

    divisor = Poly(list(reversed(coeffs)), _X, domain=ZZ)
    dividend = Poly(_X ** n - 1, _X, domain=ZZ)
    _, remainder = dividend.div(divisor, auto=False)
    if any(int(c) % m for c in remainder.all_coeffs()):
        raise HypothesisError(f"polynomial does not divide x^{n} - 1 over {ring}")

    rows: List[List[int]] = []
    for shift in range(n - t):
        row = [0] * n
        row[shift:shift + t + 1] = coeffs
        rows.append(row)
    return code_from_generators(ring, n, rows)


def cyclic_shift(x: Sequence[int]) -> Tuple[int, ...]:
    return (x[-1],) + tuple(x[:-1])
