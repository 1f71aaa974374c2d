"""
链环 Z_{p^e} 上码的挠码

(C : γⁱ) = {x : γⁱ x ∈ C}，T_i(C) 是它模 γ 的约化（F_p 上的码）。
另含 Tor 恒等式检查和由挠码构造剩余域上 LCD 矩阵积码的四种方式。
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .code_lattice import equality_classes, is_ascending_chain
from .errors import HypothesisError, RingMismatchError, TheoremViolation
from .linalg import Matrix, aat_classify, is_nonsingular, is_nsc, right_kernel
from .linear_code import (
    DEFAULT_ENUM_CAP, DEFAULT_WEIGHT_CAP, LinearCode, code_from_generators, contains_code,
    dual, hull, is_lcd,
)
from .matrix_product import MatrixProductSpec, MpcDistanceBounds, mpc_build, mpc_distance_bounds


def _check_index(C: LinearCode, i: int) -> int:
    chain = C.ring.require_chain()
    if not 0 <= i <= chain.e - 1:
        raise HypothesisError(f"torsion index {i} outside [0, {chain.e - 1}] for {C.ring}")
    return chain.e


def quotient_by_gamma_power(C: LinearCode, i: int) -> LinearCode:
    """
    子模商码 (C : γⁱ)

    (x, y) 满足 γⁱ x = y G 当且仅当它在 [[γⁱ I_n], [-G]] 的左核里；
    左核投影到前 n 个坐标即为所求。
    """
    _check_index(C, i)
    ring, n = C.ring, C.length
    g = pow(ring.chain.gamma, i, ring.modulus)
    stacked = [[g if j == k else 0 for k in range(n)] for j in range(n)]
    stacked += [[-v for v in row] for row in C.rows]
    M = Matrix.from_rows(ring, stacked, cols=n)
    K = right_kernel(M.transpose())
    return code_from_generators(ring, n, [row[:n] for row in K.entries])


def reduction_code(C: LinearCode) -> LinearCode:
    """C̄ = {x̄ : x ∈ C}，F_p 上的码"""
    chain = C.ring.require_chain()
    return code_from_generators(
        C.ring.residue_field, C.length, [[v % chain.p for v in row] for row in C.rows]
    )


def torsion_code(C: LinearCode, i: int) -> LinearCode:
    """T_i(C) = (C : γⁱ) 的约化"""
    return reduction_code(quotient_by_gamma_power(C, i))


@dataclass(frozen=True)
class TorsionFamily:
    """T_0(C) ⊆ T_1(C) ⊆ … ⊆ T_{e-1}(C)"""
    source: LinearCode
    members: Tuple[LinearCode, ...]

    def equalities(self) -> List[List[int]]:
        """相等挠码的下标分组，例如 [[0, 1]] 表示 T_0 = T_1"""
        return equality_classes(self.members)


def torsion_family(C: LinearCode) -> TorsionFamily:
    chain = C.ring.require_chain()
    members = tuple(torsion_code(C, i) for i in range(chain.e))
    if not is_ascending_chain(members):
        raise TheoremViolation("torsion codes are not nested")
    return TorsionFamily(C, members)


def tor_dual_identity_check(C: LinearCode, i: int) -> bool:
    """T_i(C^⊥) = T_{e-1-i}(C)^⊥"""
    e = _check_index(C, i)
    return torsion_code(dual(C), i) == dual(torsion_code(C, e - 1 - i))


def tor_hull_inclusion_check(C: LinearCode, i: int) -> bool:
    """H(T_i(C)) ⊆ T_{e-1}(H(C))"""
    e = _check_index(C, i)
    return contains_code(torsion_code(hull(C), e - 1), hull(torsion_code(C, i)))


@dataclass(frozen=True)
class TorsionMpcResult:
    code: LinearCode
    variant: int
    indices: Tuple[int, ...]
    spec: MatrixProductSpec
    bounds: Optional[MpcDistanceBounds]


def _variant_codes(C: LinearCode, indices: Sequence[int], A: Matrix, variant: int) -> List[LinearCode]:
    """按变体检查矩阵形状和下标约束，返回按顺序排好的挠码"""
    shape = aat_classify(A)
    if variant == 1:
        if shape.kind != 'diagonal_units':
            raise HypothesisError(f"variant 1 needs AAᵗ diagonal with unit entries, got {shape}")
    elif variant == 2:
        if shape.kind != 'antidiagonal_units':
            raise HypothesisError(f"variant 2 needs AAᵗ antidiagonal with unit entries, got {shape}")
        if list(indices) != list(reversed(indices)):
            raise HypothesisError(f"variant 2 needs a palindromic index list, got {list(indices)}")
    elif variant == 3:
        if any(i != indices[0] for i in indices):
            raise HypothesisError(f"variant 3 needs equal indices, got {list(indices)}")
    elif variant == 4:
        if any(a > b for a, b in zip(indices, indices[1:])):
            raise HypothesisError(f"variant 4 needs non-decreasing indices, got {list(indices)}")
        if A.is_upper_triangular():
            pass
        elif A.is_lower_triangular():
            indices = list(reversed(indices))
        else:
            raise HypothesisError("variant 4 needs an upper or lower triangular matrix")
    else:
        raise HypothesisError(f"unknown variant {variant}, expected 1..4")
    return [torsion_code(C, i) for i in indices]


def torsion_lcd_mpc(C: LinearCode, indices: Sequence[int], A: Matrix, variant: int,
                    enum_cap: int = DEFAULT_ENUM_CAP, weight_cap: int = DEFAULT_WEIGHT_CAP) -> TorsionMpcResult:
    """
    由 LCD 码 C 的挠码构造剩余域上的 LCD 矩阵积码

    Args:
        C: 链环上的 LCD 码（会重新检查）
        indices: 挠码下标 i₁, …, i_s
        A: 剩余域上的 s×s 非奇异矩阵
        variant: 1 对角 AAᵗ；2 反对角 AAᵗ + 回文下标；3 相同下标；4 三角矩阵 + 单调下标

    Returns:
        TorsionMpcResult；A 是 NSC 时附带距离界
    """
    chain = C.ring.require_chain()
    residue = C.ring.residue_field
    indices = tuple(int(i) for i in indices)

    if A.ring != residue:
        raise RingMismatchError(f"matrix must be over the residue field {residue}, got {A.ring}")
    if not A.is_square:
        raise HypothesisError(f"matrix must be square, got {A.rows}x{A.cols}")
    if len(indices) != A.rows:
        raise HypothesisError(f"{len(indices)} indices given for a matrix with {A.rows} rows")
    if not is_nonsingular(A):
        raise HypothesisError(f"matrix is singular over {residue}")
    for i in indices:
        if not 0 <= i <= chain.e - 1:
            raise HypothesisError(f"torsion index {i} outside [0, {chain.e - 1}]")
    if not is_lcd(C):
        raise HypothesisError("source code is not LCD")

    codes = _variant_codes(C, indices, A, variant)
    spec = MatrixProductSpec(tuple(codes), A)
    code = mpc_build(spec)
    if not is_lcd(code):
        raise TheoremViolation(f"variant {variant} produced a code that is not LCD")

    bounds = mpc_distance_bounds(spec, enum_cap, weight_cap) if is_nsc(A) else None
    return TorsionMpcResult(code, variant, indices, spec, bounds)
