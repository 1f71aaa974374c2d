"""
经典算例

Z_30 上的对角 AAᵗ 例子、Z_25 上长度 12 的循环码例子、
Z_4 上 [8,4,2] 码的挠码例子以及特征 2 下的 Turyn 构造。
spec 文件、verify 套件和测试共用这些数据。
"""

from typing import Dict, List, Tuple

from .linalg import Matrix
from .linear_code import LinearCode, code_from_generators, cyclic_code
from .matrix_product import turyn_matrix
from .ring import ring_new

# x^12 - 1 在 Z_25 上的不可约分解，升幂系数
Z25_FACTORS: Dict[str, Tuple[int, ...]] = {
    'x+1': (1, 1),
    'x-1': (24, 1),
    'x+7': (7, 1),
    'x-7': (18, 1),
    'x^2+x+1': (1, 1, 1),
    'x^2+7x-1': (24, 7, 1),
    'x^2-7x-1': (24, 18, 1),
    'x^2-x+1': (1, 24, 1),
}

# 自反多项式生成的循环码是 LCD；x+7 与 x-7、x^2+7x-1 与 x^2-7x-1 互为反多项式
Z25_LCD_FACTORS = ('x+1', 'x-1', 'x^2+x+1', 'x^2-x+1')

Z4_GENERATORS: List[Tuple[int, ...]] = [
    (1, 0, 0, 0, 0, 1, 2, 1),
    (0, 1, 0, 0, 1, 2, 3, 1),
    (0, 0, 1, 0, 0, 0, 3, 2),
    (0, 0, 0, 1, 2, 3, 1, 1),
]

Z4_REDUCED_GENERATORS: List[Tuple[int, ...]] = [
    (1, 0, 0, 0, 0, 1, 0, 1),
    (0, 1, 0, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 1, 1, 1),
]


def z30_codes() -> Tuple[LinearCode, LinearCode]:
    """C1 = 15Z_30 × 15Z_30, C2 = 10Z_30 × 10Z_30"""
    ring = ring_new(30)
    return (
        code_from_generators(ring, 2, [(15, 0), (0, 15)]),
        code_from_generators(ring, 2, [(10, 0), (0, 10)]),
    )


def z30_matrix() -> Matrix:
    """AAᵗ = I"""
    return Matrix.from_rows(ring_new(30), [(6, 5), (5, 6)])


def z25_matrix(u: int = 7) -> Matrix:
    """A = ((1, u), (u, 1))，u² = -1 时 AAᵗ = adiag(2u, 2u)"""
    return Matrix.from_rows(ring_new(25), [(1, u), (u, 1)])


def z25_cyclic_codes() -> Dict[str, LinearCode]:
    ring = ring_new(25)
    return {name: cyclic_code(ring, 12, f) for name, f in Z25_FACTORS.items()}


def z4_code() -> LinearCode:
    return code_from_generators(ring_new(4), 8, Z4_GENERATORS)


def f2_invertible_matrices() -> List[Matrix]:
    """GL_2(F_2) 的全部 6 个矩阵"""
    ring = ring_new(2)
    candidates = [
        ((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)),
        ((1, 0), (1, 1)), ((1, 1), (1, 0)), ((0, 1), (1, 1)),
    ]
    return [Matrix.from_rows(ring, rows) for rows in candidates]


def turyn_codes() -> Tuple[LinearCode, LinearCode, Matrix]:
    """两个二元 LCD 码（重复码与偶重码，长度 3）和 Turyn 矩阵"""
    ring = ring_new(2)
    repetition = code_from_generators(ring, 3, [(1, 1, 1)])
    even = code_from_generators(ring, 3, [(1, 1, 0), (0, 1, 1)])
    return repetition, even, turyn_matrix(ring)
