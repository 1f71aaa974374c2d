"""
Z_m 上的精确线性代数

Howell 规范形是唯一的规范表示：行空间相等、成员判定、核与求解都经由它完成。
另外提供行列式（Bareiss 无除法消元）以及定理所需的各种矩阵谓词：
非奇异、满行秩（FRR）、右逆、按列非奇异（NSC）、AAᵗ 形状分类、
s₁ 分块正交性质和模 γ 约化。
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy

from .errors import DimensionError, HypothesisError, RingMismatchError
from .ring import RingElem, RingSpec, is_unit, unit_normalizer, xgcd

Row = Tuple[int, ...]

# NSC 判定的列数上限（组合爆炸）
NSC_MAX_COLS = 16


@dataclass(frozen=True)
class Matrix:
    """Z_m 上的稠密 rows×cols 矩阵，entries 为按行存放的规范剩余"""
    ring: RingSpec
    rows: int
    cols: int
    entries: Tuple[Row, ...]

    def __post_init__(self):
        m = self.ring.modulus
        entries = tuple(tuple(int(v) % m for v in row) for row in self.entries)
        if len(entries) != self.rows:
            raise DimensionError(f"expected {self.rows} rows, got {len(entries)}")
        for row in entries:
            if len(row) != self.cols:
                raise DimensionError(f"expected rows of length {self.cols}, got {len(row)}")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence], cols: Optional[int] = None) -> 'Matrix':
        """由行列表构造；空行列表时需给出 cols"""
        plain = [tuple(_plain(v, ring) for v in row) for row in rows]
        if cols is None:
            if not plain:
                raise DimensionError("column count required for a matrix without rows")
            cols = len(plain[0])
        return cls(ring, len(plain), cols, tuple(plain))

    @classmethod
    def identity(cls, ring: RingSpec, size: int) -> 'Matrix':
        return cls(ring, size, size, tuple(
            tuple(1 if i == j else 0 for j in range(size)) for i in range(size)
        ))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> 'Matrix':
        return cls(ring, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def elem(self, i: int, j: int) -> RingElem:
        return RingElem(self.entries[i][j], self.ring)

    def row(self, i: int) -> Row:
        return self.entries[i]

    def column(self, j: int) -> Row:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> 'Matrix':
        return Matrix(self.ring, self.cols, self.rows, tuple(
            self.column(j) for j in range(self.cols)
        ))

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> 'Matrix':
        row_idx, col_idx = list(row_idx), list(col_idx)
        return Matrix(self.ring, len(row_idx), len(col_idx), tuple(
            tuple(self.entries[i][j] for j in col_idx) for i in row_idx
        ))

    def scaled(self, factor: int) -> 'Matrix':
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(factor * v for v in row) for row in self.entries
        ))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot multiply matrices over {self.ring} and {other.ring}")
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        m = self.ring.modulus
        other_cols = [other.column(j) for j in range(other.cols)]
        return Matrix(self.ring, self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % m for col in other_cols)
            for row in self.entries
        ))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_diagonal(self) -> bool:
        return self.is_upper_triangular() and self.is_lower_triangular()

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def _plain(value, ring: RingSpec) -> int:
    if isinstance(value, RingElem):
        if value.ring != ring:
            raise RingMismatchError(f"entry from {value.ring} placed in a matrix over {ring}")
        return value.value
    return int(value)


@dataclass(frozen=True)
class HowellForm:
    """
    Howell 规范形（已去掉零行）

    pivot_cols 严格递增；每个主元是 m 的因子；主元上方的元素已模该主元约化；
    且满足 Howell 性质：张成空间中前 j 列为零的元素都在主元列 >= j 的行的张成里。
    """
    matrix: Matrix
    pivot_cols: Tuple[int, ...]

    @property
    def ring(self) -> RingSpec:
        return self.matrix.ring

    @property
    def rows(self) -> Tuple[Row, ...]:
        return self.matrix.entries

    @property
    def pivots(self) -> Tuple[int, ...]:
        """每行主元的值（都整除 m）"""
        return tuple(row[c] for row, c in zip(self.matrix.entries, self.pivot_cols))

    def reduce(self, vec: Sequence[int]) -> Tuple[Row, Row]:
        """
        用 Howell 行约化向量

        Returns:
            (余项, 系数)；余项为零当且仅当 vec 在行空间中
        """
        m = self.ring.modulus
        rem = [int(v) % m for v in vec]
        coeffs = [0] * len(self.rows)
        for k, (row, col) in enumerate(zip(self.rows, self.pivot_cols)):
            if rem[col] == 0:
                continue
            d = row[col]
            if rem[col] % d:
                break
            q = rem[col] // d
            coeffs[k] = q
            rem = [(a - q * b) % m for a, b in zip(rem, row)]
        return tuple(rem), tuple(coeffs)

    def contains(self, vec: Sequence[int]) -> bool:
        rem, _ = self.reduce(vec)
        return not any(rem)


def _howell_rows(rows: Sequence[Sequence[int]], ncols: int, m: int) -> Tuple[List[List[int]], List[int]]:
    """对整数行做 Howell 消元，返回 (非零行, 主元列)"""
    work = [[int(v) % m for v in row] for row in rows]
    pivot_cols: List[int] = []
    r = 0
    for j in range(ncols):
        if r >= len(work):
            break
        # 用 2x2 幺模变换把第 j 列 r 行以下的元素并入第 r 行
        for i in range(r + 1, len(work)):
            b = work[i][j]
            if b == 0:
                continue
            a = work[r][j]
            g, s, t = xgcd(a, b)
            u, v = -b // g, a // g
            top, bottom = work[r], work[i]
            work[r] = [(s * x + t * y) % m for x, y in zip(top, bottom)]
            work[i] = [(u * x + v * y) % m for x, y in zip(top, bottom)]
        a = work[r][j]
        if a == 0:
            continue

        c = unit_normalizer(a, m)
        if c != 1:
            work[r] = [(c * x) % m for x in work[r]]
        d = work[r][j]

        for i in range(r):
            q = work[i][j] // d
            if q:
                work[i] = [(x - q * y) % m for x, y in zip(work[i], work[r])]

        # 零化子行：(m/d) * 该行，第 j 列为零，留给后续列继续消元
        if d != 1:
            extra = [((m // d) * x) % m for x in work[r]]
            if any(extra):
                work.append(extra)

        pivot_cols.append(j)
        r += 1
    return work[:r], pivot_cols


def howell_form(M: Matrix) -> HowellForm:
    """计算 Howell 规范形；幂等，且行空间相同的矩阵得到相同结果"""
    rows, pivot_cols = _howell_rows(M.entries, M.cols, M.ring.modulus)
    return HowellForm(Matrix(M.ring, len(rows), M.cols, tuple(tuple(r) for r in rows)), tuple(pivot_cols))


def right_kernel(M: Matrix) -> Matrix:
    """
    右核 {y : M yᵗ = 0} 的生成矩阵

    对 [Mᵗ | I_n] 做 Howell 消元，前 M.rows 列为零的行的后半部分张成核；
    Howell 性质保证完备。
    """
    s, n = M.rows, M.cols
    augmented = [
        list(M.column(i)) + [1 if k == i else 0 for k in range(n)]
        for i in range(n)
    ]
    rows, pivot_cols = _howell_rows(augmented, s + n, M.ring.modulus)
    kernel = [tuple(row[s:]) for row, col in zip(rows, pivot_cols) if col >= s]
    return Matrix(M.ring, len(kernel), n, tuple(kernel))


def solve_left(M: Matrix, b: Sequence[int]) -> Optional[Row]:
    """
    求 x 使 x·M = b，无解返回 None

    对 [M | I_s] 做 Howell 消元，每行保持 (x·M, x) 的形式。
    """
    b = [_plain(v, M.ring) for v in b]
    if len(b) != M.cols:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {M.cols}")
    s, n, m = M.rows, M.cols, M.ring.modulus
    augmented = [
        list(M.entries[i]) + [1 if k == i else 0 for k in range(s)]
        for i in range(s)
    ]
    rows, pivot_cols = _howell_rows(augmented, n + s, m)

    rem = [v % m for v in b]
    x = [0] * s
    for row, col in zip(rows, pivot_cols):
        if col >= n:
            break
        if rem[col] == 0:
            continue
        d = row[col]
        if rem[col] % d:
            return None
        q = rem[col] // d
        rem = [(a - q * c) % m for a, c in zip(rem, row[:n])]
        x = [(a + q * c) % m for a, c in zip(x, row[n:])]
    if any(rem):
        return None
    return tuple(x)


def det(M: Matrix) -> RingElem:
    """行列式：在整数上做 Bareiss 无除法消元，最后模 m"""
    if not M.is_square:
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return RingElem(1, M.ring)
    value = sympy.Matrix(M.rows, M.cols, [v for row in M.entries for v in row]).det(method="bareiss")
    return RingElem(int(value), M.ring)


def is_nonsingular(M: Matrix) -> bool:
    """方阵非奇异：行列式是单位"""
    return is_unit(det(M))


def is_frr(M: Matrix) -> bool:
    """满行秩：左核 {x : x·M = 0} 只有零向量"""
    return right_kernel(M.transpose()).rows == 0


def right_inverse(M: Matrix) -> Optional[Matrix]:
    """
    右逆 B（M·B = I_s），不存在时返回 None

    逐列在 Mᵗ 上求解 x·Mᵗ = e_j。
    """
    s, l = M.rows, M.cols
    Mt = M.transpose()
    columns = []
    for j in range(s):
        e_j = [1 if k == j else 0 for k in range(s)]
        x = solve_left(Mt, e_j)
        if x is None:
            return None
        columns.append(x)
    return Matrix(M.ring, l, s, tuple(
        tuple(columns[j][i] for j in range(s)) for i in range(l)
    ))


def inverse(M: Matrix) -> Matrix:
    """非奇异方阵的双边逆"""
    if not M.is_square:
        raise DimensionError(f"inverse of a non-square {M.rows}x{M.cols} matrix")
    B = right_inverse(M)
    if B is None:
        raise HypothesisError("matrix is singular over " + str(M.ring))
    return B


def is_nsc(M: Matrix) -> bool:
    """
    按列非奇异（NSC）：对每个 t，A_t（前 t 行）的每个 t×t 子矩阵都非奇异

    要求 rows <= cols <= NSC_MAX_COLS。
    """
    s, l = M.rows, M.cols
    if s > l:
        raise DimensionError(f"NSC needs rows <= cols, got {s}x{l}")
    if l > NSC_MAX_COLS:
        raise DimensionError(f"NSC check is capped at {NSC_MAX_COLS} columns, got {l}")
    for t in range(1, s + 1):
        for cols in combinations(range(l), t):
            if not is_nonsingular(M.submatrix(range(t), cols)):
                return False
    return True


@dataclass(frozen=True)
class AAtClass:
    """aat_classify 的结果：kind 取 diagonal_units / antidiagonal_units / other"""
    kind: str
    values: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == 'other':
            return 'other'
        return f"{self.kind}({', '.join(str(v) for v in self.values)})"


def gram(M: Matrix) -> Matrix:
    return M @ M.transpose()


def aat_classify(M: Matrix) -> AAtClass:
    """计算 AAᵗ 并判断是否为单位对角阵或单位反对角阵"""
    P = gram(M)
    s = P.rows
    ring = M.ring
    if P.is_diagonal():
        diag = tuple(P.entries[i][i] for i in range(s))
        if all(is_unit(RingElem(v, ring)) for v in diag):
            return AAtClass('diagonal_units', diag)
    off_anti = all(P.entries[i][j] == 0 for i in range(s) for j in range(s) if j != s - 1 - i)
    if off_anti:
        anti = tuple(P.entries[i][s - 1 - i] for i in range(s))
        if all(is_unit(RingElem(v, ring)) for v in anti):
            return AAtClass('antidiagonal_units', anti)
    return AAtClass('other')


def partition_blocks(M: Matrix, s1: int) -> Optional[Tuple[Matrix, Matrix]]:
    """上 s1 行与下 s-s1 行两两正交时返回分块 (A1, A2)，否则 None"""
    if not 1 <= s1 <= M.rows - 1:
        raise DimensionError(f"s1 must lie in [1, {M.rows - 1}], got {s1}")
    A1 = M.submatrix(range(s1), range(M.cols))
    A2 = M.submatrix(range(s1, M.rows), range(M.cols))
    if (A1 @ A2.transpose()).is_zero():
        return A1, A2
    return None


def reduce_matrix_mod_gamma(M: Matrix) -> Matrix:
    """逐元素约化到剩余域"""
    chain = M.ring.require_chain()
    return Matrix(M.ring.residue_field, M.rows, M.cols, tuple(
        tuple(v % chain.p for v in row) for row in M.entries
    ))
