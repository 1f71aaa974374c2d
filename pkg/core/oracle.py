"""
暴力参考实现

全部按定义枚举，不经过 Howell 形，用于在小规模上校验快速算法。
枚举顺序为字典序；规模超过 cap 时抛 OracleCapExceeded。
"""

from itertools import product
from typing import FrozenSet, Iterator, Optional, Sequence

from .errors import DimensionError, OracleCapExceeded
from .linalg import Matrix, Row

# 默认枚举上限（向量个数）
DEFAULT_ORACLE_CAP = 10 ** 6


def _require(size: int, cap: int, what: str):
    if size > cap:
        raise OracleCapExceeded(f"{what} needs {size} vectors, cap is {cap}")


def all_vectors(modulus: int, n: int) -> Iterator[Row]:
    """R^n 的全部向量，字典序"""
    return product(range(modulus), repeat=n)


def _dot(x: Sequence[int], y: Sequence[int], m: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % m


def brute_span(gens: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """生成元全部 R-线性组合的集合（逐个生成元做加法闭包）"""
    m, n, k = gens.ring.modulus, gens.cols, gens.rows
    _require(min(m ** k, m ** n), cap, "span enumeration")
    words = {(0,) * n}
    for g in gens.entries:
        words = {
            tuple((a + c * b) % m for a, b in zip(word, g))
            for word in words for c in range(m)
        }
    return frozenset(words)


def brute_dual(gens: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """与所有生成元正交的向量"""
    m, n = gens.ring.modulus, gens.cols
    _require(m ** n, cap, "dual enumeration")
    return frozenset(
        y for y in all_vectors(m, n)
        if all(_dot(g, y, m) == 0 for g in gens.entries)
    )


def brute_hull(gens: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    return brute_span(gens, cap) & brute_dual(gens, cap)


def brute_min_distance(gens: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> Optional[int]:
    """非零码字的最小重量；零码返回 None"""
    weights = [sum(1 for v in word if v) for word in brute_span(gens, cap)]
    nonzero = [w for w in weights if w]
    return min(nonzero) if nonzero else None


def brute_kernel(M: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """{y : M yᵗ = 0}"""
    m, n = M.ring.modulus, M.cols
    _require(m ** n, cap, "kernel enumeration")
    return frozenset(
        y for y in all_vectors(m, n)
        if all(_dot(row, y, m) == 0 for row in M.entries)
    )


def brute_left_solve(M: Matrix, b: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> Optional[Row]:
    """字典序最小的 x，使 x·M = b；无解返回 None"""
    m, s = M.ring.modulus, M.rows
    if len(b) != M.cols:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {M.cols}")
    _require(m ** s, cap, "left solve enumeration")
    target = tuple(int(v) % m for v in b)
    columns = [M.column(j) for j in range(M.cols)]
    for x in all_vectors(m, s):
        if tuple(_dot(x, col, m) for col in columns) == target:
            return x
    return None


def brute_quotient(gens: Matrix, i: int, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """{x : γⁱ x ∈ C}"""
    chain = gens.ring.require_chain()
    m, n = gens.ring.modulus, gens.cols
    _require(m ** n, cap, "quotient enumeration")
    g = pow(chain.gamma, i, m)
    span = brute_span(gens, cap)
    return frozenset(
        x for x in all_vectors(m, n)
        if tuple((g * v) % m for v in x) in span
    )


def brute_torsion(gens: Matrix, i: int, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """T_i(C) 作为 F_p 上的向量集合"""
    p = gens.ring.require_chain().p
    return frozenset(tuple(v % p for v in x) for x in brute_quotient(gens, i, cap))


def brute_mpc(gens_list: Sequence[Matrix], A: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> FrozenSet[Row]:
    """按定义枚举 (c₁ … c_s)A 的全部码字（按列展开）"""
    m = A.ring.modulus
    spans = [sorted(brute_span(g, cap)) for g in gens_list]
    size = 1
    for words in spans:
        size *= len(words)
    _require(size, cap, "matrix-product enumeration")
    result = set()
    for choice in product(*spans):
        columns = []
        for j in range(A.cols):
            col = [0] * len(choice[0])
            for i, c in enumerate(choice):
                a = A.entries[i][j]
                if a:
                    col = [(x + a * y) % m for x, y in zip(col, c)]
            columns.extend(col)
        result.add(tuple(columns))
    return frozenset(result)
