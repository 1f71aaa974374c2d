"""
矩阵积码 [C₁ … C_s]A

构造、对偶恒等式、hull 恒等式、七个 LCD 充分条件、
分块正交性质下的 hull 包含关系以及 NSC 矩阵的最小距离界。
码字按列展开：码字是 l 个列 Σ_i a_ij c_i 的拼接。
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .code_lattice import is_ascending_chain, is_descending_chain
from .errors import DimensionError, HypothesisError, RingMismatchError, TheoremViolation
from .linalg import (
    AAtClass, Matrix, aat_classify, inverse, is_frr, is_nonsingular, is_nsc, partition_blocks,
)
from .linear_code import (
    DEFAULT_ENUM_CAP, DEFAULT_WEIGHT_CAP, LinearCode, code_from_generators, contains_code,
    dual, hull, is_lcd, min_distance,
)
from .ring import RingSpec


@dataclass(frozen=True)
class MatrixProductSpec:
    """s 个同环同长的输入码和 s×l 矩阵 A（s <= l）"""
    codes: Tuple[LinearCode, ...]
    matrix: Matrix

    def __post_init__(self):
        codes = tuple(self.codes)
        object.__setattr__(self, 'codes', codes)
        if not codes:
            raise DimensionError("a matrix-product code needs at least one input code")
        first = codes[0]
        for code in codes[1:]:
            if code.ring != first.ring:
                raise RingMismatchError(f"input codes over {first.ring} and {code.ring}")
            if code.length != first.length:
                raise DimensionError(f"input codes of length {first.length} and {code.length}")
        if self.matrix.ring != first.ring:
            raise RingMismatchError(f"matrix over {self.matrix.ring}, codes over {first.ring}")
        if self.matrix.rows != len(codes):
            raise DimensionError(f"matrix has {self.matrix.rows} rows for {len(codes)} codes")
        if self.matrix.rows > self.matrix.cols:
            raise DimensionError(f"matrix must have s <= l, got {self.matrix.rows}x{self.matrix.cols}")

    @property
    def ring(self) -> RingSpec:
        return self.codes[0].ring

    @property
    def length(self) -> int:
        return self.codes[0].length

    @property
    def s(self) -> int:
        return self.matrix.rows

    @property
    def l(self) -> int:
        return self.matrix.cols

    @property
    def is_square(self) -> bool:
        return self.matrix.is_square

    def with_codes(self, codes: Sequence[LinearCode]) -> 'MatrixProductSpec':
        return MatrixProductSpec(tuple(codes), self.matrix)


def _product_code(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """对每个 C_i 的每个生成元 g，取 g ⊗ (A 的第 i 行) 按列展开"""
    ring, n = codes[0].ring, codes[0].length
    rows = []
    for i, code in enumerate(codes):
        a_i = A.row(i)
        for g in code.rows:
            rows.append([a_ij * v for a_ij in a_i for v in g])
    return code_from_generators(ring, n * A.cols, rows)


def mpc_build(spec: MatrixProductSpec) -> LinearCode:
    """
    构造 [C₁ … C_s]A，码长 m·l

    Example:
        >>> C = code_from_generators(ring_new(2), 1, [[1]])
        >>> mpc_build(MatrixProductSpec((C, C), plotkin_matrix(ring_new(2)))).cardinality
        4
    """
    return _product_code(spec.codes, spec.matrix)


def mpc_identity_code(spec: MatrixProductSpec) -> LinearCode:
    """[C₁ … C_s]，即用 I_s 构造的直和"""
    return _product_code(spec.codes, Matrix.identity(spec.ring, spec.s))


def _require_invertible(spec: MatrixProductSpec, what: str) -> Matrix:
    if not spec.is_square:
        raise HypothesisError(f"{what} needs a square matrix, got {spec.s}x{spec.l}")
    if not is_nonsingular(spec.matrix):
        raise HypothesisError(f"{what} needs a non-singular matrix over {spec.ring}")
    return spec.matrix


def mpc_dual(spec: MatrixProductSpec) -> LinearCode:
    """
    ([C₁ … C_s]A)^⊥ = [C₁^⊥ … C_s^⊥](A⁻¹)ᵗ

    用右端构造，并与核方法算出的对偶比对。
    """
    A = _require_invertible(spec, "dual identity")
    rhs = _product_code([dual(c) for c in spec.codes], inverse(A).transpose())
    if rhs != dual(mpc_build(spec)):
        raise TheoremViolation("dual of the matrix-product code differs from [C^⊥](A⁻¹)ᵗ")
    return rhs


def _aat(spec: MatrixProductSpec) -> AAtClass:
    return aat_classify(spec.matrix)


def _palindromic_duals(spec: MatrixProductSpec) -> bool:
    duals = [dual(c) for c in spec.codes]
    s = spec.s
    return all(duals[i] == duals[s - 1 - i] for i in range(s // 2))


def dual_push_holds(spec: MatrixProductSpec) -> bool:
    """
    ([C₁ … C_s]A)^⊥ = [C₁^⊥ … C_s^⊥]A 是否成立

    方阵时先看 AAᵗ 的形状（对角单位，或反对角单位且对偶回文），否则直接比较两个码。
    """
    if spec.is_square:
        shape = _aat(spec)
        if shape.kind == 'diagonal_units':
            return True
        if shape.kind == 'antidiagonal_units' and _palindromic_duals(spec):
            return True
    pushed = _product_code([dual(c) for c in spec.codes], spec.matrix)
    return pushed == dual(mpc_build(spec))


def identity_condition(spec: MatrixProductSpec) -> Optional[int]:
    """
    [C₁ … C_s]A = [C₁ … C_s] 的四个充分条件中第一个成立的编号

    1: A 上三角且 C₁ ⊆ … ⊆ C_s
    2: A 下三角且 C_s ⊆ … ⊆ C₁
    3: A 对角
    4: 所有 C_i 相等
    """
    A = _require_invertible(spec, "identity conditions")
    codes = list(spec.codes)
    if A.is_upper_triangular() and is_ascending_chain(codes):
        return 1
    if A.is_lower_triangular() and is_descending_chain(codes):
        return 2
    if A.is_diagonal():
        return 3
    if all(c == codes[0] for c in codes):
        return 4
    return None


def identity_reduce(spec: MatrixProductSpec) -> Optional[LinearCode]:
    """条件成立时返回 [C₁ … C_s]，并校验它等于 [C₁ … C_s]A"""
    if identity_condition(spec) is None:
        return None
    identity = mpc_identity_code(spec)
    if identity != mpc_build(spec):
        raise TheoremViolation("identity condition holds but [C]A differs from [C]")
    return identity


def mpc_identity_holds(spec: MatrixProductSpec) -> bool:
    """[C₁ … C_s]A 与 [C₁ … C_s] 作为码相等（只可能在方阵时）"""
    if not spec.is_square:
        return False
    if is_nonsingular(spec.matrix) and identity_condition(spec) is not None:
        return True
    return mpc_build(spec) == mpc_identity_code(spec)


@dataclass(frozen=True)
class HullResult:
    """hull 及其来源：case1 / case2 / direct"""
    code: LinearCode
    provenance: str


def mpc_hull(spec: MatrixProductSpec) -> HullResult:
    """
    矩阵积码的 hull

    case2: [C]A = [C] 时 H = [H(C₁) … H(C_s)]
    case1: 对偶可下推且 A 满行秩时 H = [H(C₁) … H(C_s)]A
    都不成立时直接计算
    """
    hulls = [hull(c) for c in spec.codes]
    if mpc_identity_holds(spec):
        return HullResult(_product_code(hulls, Matrix.identity(spec.ring, spec.s)), 'case2')
    if is_frr(spec.matrix) and dual_push_holds(spec):
        return HullResult(_product_code(hulls, spec.matrix), 'case1')
    return HullResult(hull(mpc_build(spec)), 'direct')


CONDITION_LABELS = (
    ('frr_dual_push', 'condition 1 (dual push with FRR A)'),
    ('mpc_identity', 'condition 2 (MPC identity)'),
    ('aat_diag', 'condition 3 (AAᵗ diagonal-units)'),
    ('aat_adiag_palindrome', 'condition 4 (AAᵗ antidiagonal-units, palindromic duals)'),
    ('upper_tri_nested', 'condition 5 (upper triangular, nested)'),
    ('lower_tri_nested', 'condition 6 (lower triangular, reverse nested)'),
    ('equal_codes_nonsingular', 'condition 7 (equal codes, non-singular A)'),
)


@dataclass(frozen=True)
class ConditionReport:
    """七个 LCD 充分条件、分块正交性质以及 LCD 结论"""
    frr_dual_push: bool
    mpc_identity: bool
    aat_diag: bool
    aat_adiag_palindrome: bool
    upper_tri_nested: bool
    lower_tri_nested: bool
    equal_codes_nonsingular: bool
    s1_orthogonal: bool
    s1: Optional[int]
    aat: AAtClass
    inputs_lcd: bool
    mpc_lcd: bool

    @property
    def conditions(self) -> List[Tuple[str, str, bool]]:
        """[(key, label, value)]，按条件编号排序"""
        return [(key, label, getattr(self, key)) for key, label in CONDITION_LABELS]

    @property
    def any_condition(self) -> bool:
        return any(value for _, _, value in self.conditions)

    @property
    def verdict(self) -> str:
        if self.any_condition:
            return "MPC is LCD iff every input code is LCD"
        if self.s1_orthogonal:
            return "LCD inputs give an LCD MPC"
        return "no sufficient condition applies"


def _orthogonal_split(spec: MatrixProductSpec) -> Optional[int]:
    """最小的 s1，使 A 具有 s1 分块正交性质且输入码形如 [C … C D … D]"""
    codes = spec.codes
    for s1 in range(1, spec.s):
        if not all(c == codes[0] for c in codes[:s1]):
            break
        if not all(c == codes[s1] for c in codes[s1:]):
            continue
        if partition_blocks(spec.matrix, s1) is not None:
            return s1
    return None


def lcd_conditions(spec: MatrixProductSpec) -> ConditionReport:
    """
    逐条判定 LCD 充分条件

    任一条件成立时断言 "MPC 是 LCD ⇔ 所有输入码是 LCD"，不成立抛 TheoremViolation。
    """
    A = spec.matrix
    codes = list(spec.codes)
    square = spec.is_square
    nonsingular = square and is_nonsingular(A)
    shape = _aat(spec)

    aat_diag = square and shape.kind == 'diagonal_units'
    aat_adiag = square and shape.kind == 'antidiagonal_units' and _palindromic_duals(spec)
    upper = nonsingular and A.is_upper_triangular() and is_ascending_chain(codes)
    lower = nonsingular and A.is_lower_triangular() and is_descending_chain(codes)
    equal = nonsingular and all(c == codes[0] for c in codes)
    identity = upper or lower or equal or (nonsingular and A.is_diagonal()) or mpc_identity_holds(spec)
    frr_push = aat_diag or aat_adiag or (is_frr(A) and dual_push_holds(spec))

    s1 = _orthogonal_split(spec) if nonsingular else None
    inputs_lcd = all(is_lcd(c) for c in codes)
    mpc_lcd = is_lcd(mpc_build(spec))

    report = ConditionReport(
        frr_dual_push=frr_push,
        mpc_identity=identity,
        aat_diag=aat_diag,
        aat_adiag_palindrome=aat_adiag,
        upper_tri_nested=upper,
        lower_tri_nested=lower,
        equal_codes_nonsingular=equal,
        s1_orthogonal=s1 is not None,
        s1=s1,
        aat=shape,
        inputs_lcd=inputs_lcd,
        mpc_lcd=mpc_lcd,
    )

    if report.any_condition and inputs_lcd != mpc_lcd:
        raise TheoremViolation(
            f"sufficient condition holds but inputs_lcd={inputs_lcd} while mpc_lcd={mpc_lcd}"
        )
    if report.s1_orthogonal and not mpc_lcd and is_lcd(codes[0]) and is_lcd(codes[s1]):
        raise TheoremViolation("partitioned orthogonal matrix with LCD inputs gave a non-LCD code")
    return report


def orth_hull_bound(spec: MatrixProductSpec, s1: int, C1: LinearCode, C2: LinearCode) -> bool:
    """
    H([C1 … C1 C2 … C2]A) ⊆ [H(C1) … H(C1) H(C2) … H(C2)](A⁻¹)ᵗ

    逐个检查左端 Howell 生成元是否在右端；C1、C2 都是 LCD 时断言 MPC 也是 LCD。
    """
    A = _require_invertible(spec, "orthogonal hull bound")
    if partition_blocks(A, s1) is None:
        raise HypothesisError(f"matrix lacks the {s1}-partitioned orthogonal property")
    expected = (C1,) * s1 + (C2,) * (spec.s - s1)
    if spec.codes != expected:
        raise HypothesisError(f"input codes must be {s1} copies of C1 followed by {spec.s - s1} copies of C2")

    left = hull(mpc_build(spec))
    right = _product_code([hull(c) for c in expected], inverse(A).transpose())
    holds = contains_code(right, left)

    if is_lcd(C1) and is_lcd(C2) and not left.is_zero:
        raise TheoremViolation("LCD inputs with a partitioned orthogonal matrix gave a non-LCD code")
    return holds


@dataclass(frozen=True)
class MpcDistanceBounds:
    """lower: d 的下界；dual_lower: 对偶码 d 的下界；exact: 嵌套时两者都是等式"""
    lower: Optional[int]
    dual_lower: Optional[int]
    exact: bool


def _weighted_min(distances, weights) -> Optional[int]:
    values = [w * d.lo for d, w in zip(distances, weights) if d is not None]
    return min(values) if values else None


def mpc_distance_bounds(spec: MatrixProductSpec, enum_cap: int = DEFAULT_ENUM_CAP,
                        weight_cap: int = DEFAULT_WEIGHT_CAP) -> MpcDistanceBounds:
    """
    NSC 矩阵的距离界（剩余域上）

    d >= min{s·d(C₁), (s-1)·d(C₂), …, d(C_s)}
    d(对偶) >= min{d(C₁^⊥), 2·d(C₂^⊥), …, s·d(C_s^⊥)}
    零码的距离视为无穷。C_s ⊆ … ⊆ C₁ 且所有输入距离精确时标记为等式。
    """
    if not spec.ring.is_field:
        raise HypothesisError(f"distance bounds are stated over a prime field, got {spec.ring}")
    if not spec.is_square:
        raise HypothesisError(f"distance bounds need a square matrix, got {spec.s}x{spec.l}")
    if not is_nsc(spec.matrix):
        raise HypothesisError("distance bounds need a matrix that is non-singular by columns")

    s = spec.s
    primal = [min_distance(c, enum_cap, weight_cap) for c in spec.codes]
    duals = [min_distance(dual(c), enum_cap, weight_cap) for c in spec.codes]
    lower = _weighted_min(primal, [s - i for i in range(s)])
    dual_lower = _weighted_min(duals, [i + 1 for i in range(s)])

    all_exact = all(d is None or d.exact for d in primal + duals)
    nested = is_descending_chain(list(spec.codes))
    return MpcDistanceBounds(lower, dual_lower, nested and all_exact)


def plotkin_matrix(ring: RingSpec) -> Matrix:
    """(u | u+v) 构造的矩阵 ((1,1),(0,1))"""
    return Matrix.from_rows(ring, [(1, 1), (0, 1)])


def turyn_matrix(ring: RingSpec) -> Matrix:
    """(a+x | b+x | a+b+x) 构造的矩阵"""
    return Matrix.from_rows(ring, [(1, 0, 1), (0, 1, 1), (1, 1, 1)])
