"""
verify 性质套件

每个套件对一批确定性的随机实例（实例 i 的种子为 "{seed}:{suite}:{i}"）
检查代数恒等式和定理结论，并用暴力参考实现对照。
实例可在线程池中并行执行，结果按实例下标汇总，输出与 worker 数无关。
"""

import random
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from colorama import Fore, Style
from sympy import factorint

from .code_lattice import is_descending_chain
from .errors import HypothesisError
from .linalg import (
    Matrix, aat_classify, det, howell_form, inverse, is_frr, is_nonsingular, is_nsc,
    partition_blocks, reduce_matrix_mod_gamma, right_inverse, right_kernel, solve_left,
)
from .linear_code import (
    LinearCode, code_from_generators, code_from_matrix, code_sum, cyclic_code, cyclic_shift,
    dual, hull, intersect, is_lcd, is_lcd_free_test, iter_codewords, member, min_distance,
    params,
)
from .matrix_product import (
    MatrixProductSpec, lcd_conditions, identity_reduce, mpc_build, mpc_distance_bounds, mpc_dual,
    mpc_hull, orth_hull_bound, plotkin_matrix,
)
from .oracle import (
    brute_dual, brute_hull, brute_kernel, brute_left_solve, brute_min_distance, brute_mpc,
    brute_quotient, brute_span,
)
from .reference_codes import (
    Z25_FACTORS, Z25_LCD_FACTORS, Z4_REDUCED_GENERATORS, f2_invertible_matrices, turyn_codes,
    z25_cyclic_codes, z25_matrix, z30_codes, z30_matrix, z4_code,
)
from .ring import inv, is_unit, reduce_mod_gamma, ring_new
from .torsion import (
    quotient_by_gamma_power, tor_dual_identity_check, tor_hull_inclusion_check, torsion_code,
    torsion_family, torsion_lcd_mpc,
)

# 挠码 MPC 距离等式只在输出码字数不超过此值时用枚举验证
TORSION_DISTANCE_CAP = 2 ** 20


class Checker:
    """单个实例内的检查记录"""

    def __init__(self, suite: str, index: int):
        self.suite = suite
        self.index = index
        self.checks: Counter = Counter()
        self.failures: List[str] = []
        self.notes: Counter = Counter()

    def check(self, name: str, ok: bool, detail: str = ''):
        self.checks[name] += 1
        if not ok:
            suffix = f" ({detail})" if detail else ''
            self.failures.append(f"instance {self.index}: {name}{suffix}")

    def note(self, text: str):
        self.notes[text] += 1


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    instances: int
    seed: str
    checks: List[Tuple[str, int]]
    failures: List[str]
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class SuiteDefinition:
    name: str
    description: str
    default_count: int
    instance: Callable[[random.Random, Checker, object], None]
    fixed_count: Optional[int] = None


# ---------------------------------------------------------------- 随机数据

def random_matrix(rng: random.Random, ring, rows: int, cols: int) -> Matrix:
    m = ring.modulus
    return Matrix.from_rows(ring, [[rng.randrange(m) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_code(rng: random.Random, ring, n: int, max_gens: int = 3) -> LinearCode:
    return code_from_matrix(random_matrix(rng, ring, rng.randint(0, max_gens), n))


def random_unit(rng: random.Random, ring) -> int:
    while True:
        v = rng.randrange(1, ring.modulus)
        if is_unit(ring.elem(v)):
            return v


def same_span(rng: random.Random, M: Matrix) -> Matrix:
    """对行做可逆变换并补一行冗余组合，行空间不变"""
    m = M.ring.modulus
    rows = [list(r) for r in M.entries]
    for _ in range(2 * len(rows)):
        i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
        if i != j:
            c = rng.randrange(m)
            rows[i] = [(a + c * b) % m for a, b in zip(rows[i], rows[j])]
        else:
            u = random_unit(rng, M.ring)
            rows[i] = [(u * a) % m for a in rows[i]]
    combo = [0] * M.cols
    for r in rows:
        c = rng.randrange(m)
        combo = [(a + c * b) % m for a, b in zip(combo, r)]
    rows.append(combo)
    rng.shuffle(rows)
    return Matrix.from_rows(M.ring, rows, cols=M.cols)


def vec_mat(x: Sequence[int], M: Matrix) -> Tuple[int, ...]:
    m = M.ring.modulus
    return tuple(sum(a * M.entries[i][j] for i, a in enumerate(x)) % m for j in range(M.cols))


def random_square(rng: random.Random, ring, size: int, family: str) -> Matrix:
    """按形状族生成方阵：random / upper / lower / diagonal / permutation"""
    m = ring.modulus
    rows = [[0] * size for _ in range(size)]
    if family == 'permutation':
        perm = list(range(size))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            rows[i][j] = random_unit(rng, ring)
        return Matrix.from_rows(ring, rows)
    for i in range(size):
        for j in range(size):
            if i == j:
                rows[i][j] = random_unit(rng, ring) if family != 'random' else rng.randrange(m)
            elif (family == 'upper' and j > i) or (family == 'lower' and j < i) or family == 'random':
                rows[i][j] = rng.randrange(m)
    return Matrix.from_rows(ring, rows)


def random_nonsingular(rng: random.Random, ring, size: int) -> Matrix:
    while True:
        M = random_matrix(rng, ring, size, size)
        if is_nonsingular(M):
            return M


def _code_words(code: LinearCode):
    return set(iter_codewords(code))


def _distance_value(code: LinearCode) -> Optional[int]:
    d = min_distance(code)
    return None if d is None else d.lo


# ---------------------------------------------------------------- ring-core

def _ring_core(rng: random.Random, chk: Checker, settings) -> None:
    m = 2 + chk.index % 63
    ring = ring_new(m)
    for v in range(m):
        r = ring.elem(v)
        invertible = any((v * s) % m == 1 for s in range(m))
        chk.check('unit iff invertible', is_unit(r) == invertible, f"{v} in Z_{m}")
        if invertible:
            chk.check('inverse', (r * inv(r)).value == 1, f"{v} in Z_{m}")
    chk.check('chain detection', ring.is_chain == (len(factorint(m)) == 1), f"Z_{m}")
    if not ring.is_chain:
        return
    p = ring.chain.p
    chk.check('chain parameters', p ** ring.chain.e == m and ring.chain.gamma == p % m)
    non_units = {v for v in range(m) if not is_unit(ring.elem(v))}
    chk.check('non-units are the maximal ideal', non_units == set(range(0, m, p)), f"Z_{m}")
    for v in range(m):
        r = ring.elem(v)
        chk.check('units reduce to non-zero', is_unit(r) == bool(reduce_mod_gamma(r)), f"{v} in Z_{m}")
    pairs = [(rng.randrange(m), rng.randrange(m)) for _ in range(min(m * m, 64))]
    for a, b in pairs:
        ra, rb = ring.elem(a), ring.elem(b)
        chk.check('reduction preserves +', reduce_mod_gamma(ra + rb) == reduce_mod_gamma(ra) + reduce_mod_gamma(rb))
        chk.check('reduction preserves *', reduce_mod_gamma(ra * rb) == reduce_mod_gamma(ra) * reduce_mod_gamma(rb))
    chk.check('reduction preserves 0 and 1',
              reduce_mod_gamma(ring.elem(0)).value == 0 and reduce_mod_gamma(ring.elem(1)).value == 1)


# ---------------------------------------------------------------- exact-linalg

def _exact_linalg(rng: random.Random, chk: Checker, settings) -> None:
    ring = ring_new(rng.choice((6, 8, 12)))
    n = rng.randint(1, 4)
    cap = settings.oracle_cap

    for _ in range(4):
        G = random_matrix(rng, ring, rng.randint(1, 3), n)
        D = same_span(rng, G) if rng.random() < 0.5 else random_matrix(rng, ring, rng.randint(0, 3), n)
        same = brute_span(G, cap) == brute_span(D, cap)
        chk.check('howell canonicity', same == (howell_form(G) == howell_form(D)))
    H = howell_form(G)
    chk.check('howell idempotent', howell_form(H.matrix) == H)
    chk.check('howell preserves span', brute_span(H.matrix, cap) == brute_span(G, cap))
    chk.check('pivots divide modulus', all(ring.modulus % d == 0 for d in H.pivots))

    M = random_matrix(rng, ring, rng.randint(1, 3), n)
    if ring.modulus ** n <= cap:
        chk.check('kernel completeness', brute_span(right_kernel(M), cap) == brute_kernel(M, cap))
    if rng.random() < 0.5:
        b = vec_mat([rng.randrange(ring.modulus) for _ in range(M.rows)], M)
    else:
        b = tuple(rng.randrange(ring.modulus) for _ in range(n))
    x = solve_left(M, b)
    chk.check('solve agrees with oracle', (x is None) == (brute_left_solve(M, b, cap) is None))
    if x is not None:
        chk.check('solve is a solution', vec_mat(x, M) == b)

    r30 = ring_new(30)
    s = rng.randint(1, 4)
    A, B = random_matrix(rng, r30, s, s), random_matrix(rng, r30, s, s)
    chk.check('det multiplicative', det(A @ B) == det(A) * det(B))

    small = ring_new(rng.choice((6, 8)))
    s = rng.randint(1, 4)
    l = rng.randint(s, 4)
    M2 = random_matrix(rng, small, s, l)
    right = right_inverse(M2)
    chk.check('frr iff right inverse', is_frr(M2) == (right is not None))
    if right is not None:
        chk.check('right inverse', M2 @ right == Matrix.identity(small, s))
    chk.check('frr against oracle', is_frr(M2) == (len(brute_kernel(M2.transpose(), cap)) == 1))

    size = rng.randint(1, 3)
    S = random_square(rng, small, size, rng.choice(('random', 'upper', 'permutation')))
    nonsingular = is_nonsingular(S)
    chk.check('non-singular iff frr', nonsingular == is_frr(S))
    if nonsingular:
        T = inverse(S)
        I = Matrix.identity(small, size)
        chk.check('two-sided inverse', S @ T == I and T @ S == I)
    if aat_classify(S).kind != 'other':
        chk.check('unit AAᵗ shape implies non-singular', nonsingular)

    chain_ring = ring_new(rng.choice((4, 8, 9, 25)))
    s = rng.randint(1, 3)
    l = rng.randint(s, 4)
    N = random_matrix(rng, chain_ring, s, l)
    chk.check('NSC survives reduction', is_nsc(N) == is_nsc(reduce_matrix_mod_gamma(N)))


# ---------------------------------------------------------------- dual-algebra

def _dual_algebra(rng: random.Random, chk: Checker, settings) -> None:
    m = rng.choice((4, 6, 8, 9, 30))
    ring = ring_new(m)
    n = rng.randint(1, 3 if m == 30 else 4)
    cap = settings.oracle_cap
    C, D = random_code(rng, ring, n), random_code(rng, ring, n)
    Cd, Dd = dual(C), dual(D)

    chk.check('double dual', dual(Cd) == C)
    chk.check('cardinality duality', C.cardinality * Cd.cardinality == m ** n)
    chk.check('dual of sum', dual(code_sum(C, D)) == intersect(Cd, Dd))
    chk.check('hull symmetric', hull(C) == hull(Cd))
    chk.check('cardinality against oracle', C.cardinality == len(brute_span(C.generator_matrix, cap)))
    chk.check('intersection against oracle',
              _code_words(intersect(C, D)) == brute_span(C.generator_matrix, cap) & brute_span(D.generator_matrix, cap))
    if m ** n <= cap:
        chk.check('dual against oracle', _code_words(Cd) == brute_dual(C.generator_matrix, cap))

    x = tuple(rng.randrange(m) for _ in range(n))
    chk.check('member iff solvable', member(C, x) == (solve_left(C.generator_matrix, x) is not None))

    if not C.is_zero:
        enumerated = min_distance(C, enum_cap=m ** n, weight_cap=1)
        searched = min_distance(C, enum_cap=1, weight_cap=n)
        chk.check('distance paths agree', enumerated.lo == searched.lo and searched.exact)
        chk.check('distance against oracle', enumerated.lo == brute_min_distance(C.generator_matrix, cap))

    free_ring = ring_new(rng.choice((4, 9, 25)))
    nf = rng.randint(1, 6)
    G = random_matrix(rng, free_ring, rng.randint(1, min(3, nf)), nf)
    if is_frr(G):
        chk.check('determinant LCD test', is_lcd_free_test(G) == is_lcd(code_from_matrix(G)))

    if n >= 2:
        f = rng.choice(([m - 1, 1], [1] * n))
        cyclic = cyclic_code(ring, n, f)
        chk.check('cyclic shift invariance', all(member(cyclic, cyclic_shift(row)) for row in cyclic.rows))


# ---------------------------------------------------------------- mpc-algebra

_ORTHOGONAL = {4: ((1, 2), (2, 1)), 6: ((1, 2), (4, 1))}


def _mpc_matrix(rng: random.Random, ring) -> Matrix:
    family = rng.choice(('random', 'random', 'upper', 'lower', 'permutation', 'orthogonal', 'identity'))
    if family == 'orthogonal':
        return Matrix.from_rows(ring, _ORTHOGONAL[ring.modulus])
    if family == 'identity':
        return Matrix.identity(ring, 2)
    return random_square(rng, ring, 2, family)


def _mpc_algebra(rng: random.Random, chk: Checker, settings) -> None:
    m = rng.choice((4, 6))
    ring = ring_new(m)
    length = rng.randint(1, 2)
    cap = settings.oracle_cap

    C1 = random_code(rng, ring, length, 2)
    roll = rng.random()
    if roll < 0.25:
        C2 = C1
    elif roll < 0.5:
        C2 = code_sum(C1, random_code(rng, ring, length, 1))
    else:
        C2 = random_code(rng, ring, length, 2)
    A = _mpc_matrix(rng, ring)
    spec = MatrixProductSpec((C1, C2), A)
    code = mpc_build(spec)

    chk.check('construction against oracle',
              _code_words(code) == brute_mpc([C1.generator_matrix, C2.generator_matrix], A, cap))

    nonsingular = is_nonsingular(A)
    if nonsingular:
        rhs = mpc_dual(spec)
        chk.check('dual identity', rhs == dual(code))
        if m ** code.length <= cap:
            chk.check('dual identity against oracle', _code_words(rhs) == brute_dual(code.generator_matrix, cap))
        reduced = identity_reduce(spec)
        if reduced is not None:
            chk.check('identity conditions', reduced == code)

    result = mpc_hull(spec)
    direct = hull(code)
    chk.check(f'hull {result.provenance} agrees with direct hull', result.code == direct)
    if m ** code.length <= cap:
        chk.check('hull against oracle', _code_words(direct) == brute_hull(code.generator_matrix, cap))

    report = lcd_conditions(spec)
    if report.any_condition:
        chk.check('lcd biconditional', report.inputs_lcd == report.mpc_lcd)
    if report.aat_diag:
        chk.check('dual pushes through diagonal AAᵗ', dual(code) == mpc_build(spec.with_codes([dual(C1), dual(C2)])))

    if nonsingular and partition_blocks(A, 1) is not None:
        holds = orth_hull_bound(spec, 1, C1, C2)
        chk.check('orthogonal hull inclusion', holds)
        if holds and result.code != mpc_build(MatrixProductSpec((hull(C1), hull(C2)), inverse(A).transpose())):
            chk.note('orthogonal hull inclusion is strict')

    f2 = ring_new(2)
    n2 = rng.randint(1, 3)
    U, V = random_code(rng, f2, n2), random_code(rng, f2, n2)
    plotkin = MatrixProductSpec((U, V), plotkin_matrix(f2))
    d = _distance_value(mpc_build(plotkin))
    candidates = [w for w in (
        None if U.is_zero else 2 * _distance_value(U),
        None if V.is_zero else _distance_value(V),
    ) if w is not None]
    expected = min(candidates) if candidates else None
    chk.check('plotkin distance', d == expected, f"d={d} expected={expected}")
    chk.check('plotkin bound', mpc_distance_bounds(plotkin).lower == expected)


# ---------------------------------------------------------------- torsion

# F_2 上没有 AAᵗ 为单位对角阵的 2×2 NSC 矩阵（NSC 要求首行全非零，此时 (AAᵗ)_11 = 0），
# p = 2 只能用非 NSC 的置换矩阵，variant 1 的距离等式因此只在 p = 3, 5 上检查
_VARIANT1 = {2: ((0, 1), (1, 0)), 3: ((1, 1), (1, 2)), 5: ((1, 1), (1, 4))}
_VARIANT2 = {5: ((1, 2), (2, 1))}


def _lcd_candidate(rng: random.Random, ring, n: int, chk: Checker) -> LinearCode:
    """多试几次，尽量给出非零 LCD 码；找不到时记一条 note 并返回最后一次抽到的码"""
    for _ in range(9):
        code = random_code(rng, ring, n)
        if is_lcd(code) and not code.is_zero:
            return code
    chk.note("no non-zero LCD candidate found after 9 draws")
    return code


def _check_torsion_distances(chk: Checker, result, variant: int):
    bounds = result.bounds
    if bounds is None or not bounds.exact or variant not in (1, 3):
        return
    if result.code.cardinality <= TORSION_DISTANCE_CAP:
        chk.check(f'variant {variant} distance equality', _distance_value(result.code) == bounds.lower)
    code_dual = dual(result.code)
    if code_dual.cardinality <= TORSION_DISTANCE_CAP:
        chk.check(f'variant {variant} dual distance equality', _distance_value(code_dual) == bounds.dual_lower)


def _torsion(rng: random.Random, chk: Checker, settings) -> None:
    m = rng.choice((4, 8, 9, 25))
    ring = ring_new(m)
    chain = ring.chain
    n = rng.randint(1, 3 if m == 25 else 4)
    cap = settings.oracle_cap
    C = _lcd_candidate(rng, ring, n, chk) if rng.random() < 0.6 else random_code(rng, ring, n)

    family = torsion_family(C)
    chk.check('torsion nesting', is_descending_chain(list(reversed(family.members))))
    for i in range(chain.e):
        if m ** n <= cap:
            chk.check('quotient against oracle',
                      _code_words(quotient_by_gamma_power(C, i)) == brute_quotient(C.generator_matrix, i, cap))
        chk.check('torsion dual identity', tor_dual_identity_check(C, i))
        chk.check('torsion hull inclusion', tor_hull_inclusion_check(C, i))

    lcd = is_lcd(C)
    members_lcd = all(is_lcd(T) for T in family.members)
    if lcd:
        chk.check('lcd propagates to torsion codes', members_lcd)
    elif members_lcd:
        chk.note('torsion codes are LCD while the source code is not')
    if not lcd:
        return

    F = ring.residue_field
    p = chain.p
    e = chain.e

    i = rng.randrange(e)
    A3 = random_nonsingular(rng, F, 2)
    result = torsion_lcd_mpc(C, [i, i], A3, 3)
    chk.check('variant 3 lcd', is_lcd(result.code))
    _check_torsion_distances(chk, result, 3)

    indices = sorted(rng.randrange(e) for _ in range(2))
    A4 = random_square(rng, F, 2, rng.choice(('upper', 'lower')))
    chk.check('variant 4 lcd', is_lcd(torsion_lcd_mpc(C, indices, A4, 4).code))

    A1 = Matrix.from_rows(F, _VARIANT1[p])
    decreasing = sorted((rng.randrange(e) for _ in range(2)), reverse=True)
    result = torsion_lcd_mpc(C, decreasing, A1, 1)
    chk.check('variant 1 lcd', is_lcd(result.code))
    _check_torsion_distances(chk, result, 1)

    if p in _VARIANT2:
        j = rng.randrange(e)
        A2 = Matrix.from_rows(F, _VARIANT2[p])
        chk.check('variant 2 lcd', is_lcd(torsion_lcd_mpc(C, [j, j], A2, 2).code))


# ---------------------------------------------------------------- worked-examples

def _example_z30(chk: Checker, settings) -> None:
    C1, C2 = z30_codes()
    ring = C1.ring
    A = z30_matrix()
    chk.check('C1 cardinality', C1.cardinality == 4)
    chk.check('C2 cardinality', C2.cardinality == 9)
    chk.check('dual of C1', dual(C1) == code_from_generators(ring, 2, [(2, 0), (0, 2)]))
    chk.check('dual of C2', dual(C2) == code_from_generators(ring, 2, [(3, 0), (0, 3)]))
    chk.check('AAᵗ = I', A @ A.transpose() == Matrix.identity(ring, 2))
    for a, b in ((C1, C1), (C2, C2), (C1, C2), (C2, C1)):
        report = lcd_conditions(MatrixProductSpec((a, b), A))
        chk.check('condition 3 holds', report.aat_diag)
        chk.check('MPC is LCD', report.mpc_lcd)
    swapped = mpc_build(MatrixProductSpec((C2, C1), Matrix.identity(ring, 2)))
    chk.check('[C1 C2]A = [C2 C1]', mpc_build(MatrixProductSpec((C1, C2), A)) == swapped)
    chk.check('[C1 C2]A cardinality', swapped.cardinality == 36)


def _example_z25(chk: Checker, settings) -> None:
    codes = z25_cyclic_codes()
    A = z25_matrix()
    chk.check('eight cyclic codes', len(codes) == len(Z25_FACTORS) == 8)
    chk.check('AAᵗ = adiag(14, 14)', str(aat_classify(A)) == 'antidiagonal_units(14, 14)')
    chk.check('A is NSC', is_nsc(A))
    lcd_names = [name for name, code in codes.items() if is_lcd_free_test(code.generator_matrix)]
    chk.check('LCD cyclic codes', tuple(lcd_names) == Z25_LCD_FACTORS, ", ".join(lcd_names))
    for name in ('x+1', 'x^2+x+1', 'x^2-x+1'):
        code = codes[name]
        k = 12 - (len(Z25_FACTORS[name]) - 1)
        p = params(code, settings.enum_cap, max(2, settings.weight_cap))
        chk.check(f'params of <{name}>', str(p) == f"(12, 25^{k}, 2)", str(p))
        spec = MatrixProductSpec((code, code), A)
        report = lcd_conditions(spec)
        chk.check('conditions 4 and 7', report.aat_adiag_palindrome and report.equal_codes_nonsingular)
        chk.check('MPC is LCD', report.mpc_lcd)
        mp = params(mpc_build(spec), settings.enum_cap, max(2, settings.weight_cap))
        chk.check(f'MPC params of <{name}>', str(mp) == f"(24, 25^{2 * k}, 2)", str(mp))
        witness = mp.min_distance.witness
        chk.check('weight-2 witness is a codeword',
                  witness is not None and member(mpc_build(spec), witness)
                  and sum(1 for v in witness if v) == 2)


def _example_z4(chk: Checker, settings) -> None:
    C = z4_code()
    F2 = ring_new(2)
    G = C.generator_matrix
    chk.check('det(GGᵗ) is a unit', is_unit(det(G @ G.transpose())))
    chk.check('C is LCD', is_lcd(C))
    expected = code_from_generators(F2, 8, Z4_REDUCED_GENERATORS)
    T0, T1 = torsion_code(C, 0), torsion_code(C, 1)
    chk.check('T_0 = T_1 = reduced code', T0 == T1 == expected)
    chk.check('T generators are the printed rows', [list(r) for r in T1.rows] == [list(r) for r in Z4_REDUCED_GENERATORS])
    chk.check('d(T) = 2 by enumeration', brute_min_distance(T0.generator_matrix) == 2)
    for A in f2_invertible_matrices():
        result = torsion_lcd_mpc(C, [0, 0], A, 3)
        p = params(result.code)
        chk.check('[T T]A parameters', str(p) == "(16, 2^8, 2)", str(p))
        chk.check('[T T]A is LCD', is_lcd(result.code))


def _example_turyn(chk: Checker, settings) -> None:
    C1, C2, A = turyn_codes()
    chk.check('inputs LCD', is_lcd(C1) and is_lcd(C2))
    chk.check('Turyn matrix non-singular', is_nonsingular(A))
    chk.check('2-partitioned orthogonal', partition_blocks(A, 2) is not None)
    for a, b in ((C1, C2), (C2, C1)):
        spec = MatrixProductSpec((a, a, b), A)
        chk.check('hull inclusion', orth_hull_bound(spec, 2, a, b))
        chk.check('Turyn MPC is LCD', is_lcd(mpc_build(spec)))


_EXAMPLES = (_example_z30, _example_z25, _example_z4, _example_turyn)


def _worked_examples(rng: random.Random, chk: Checker, settings) -> None:
    _EXAMPLES[chk.index % len(_EXAMPLES)](chk, settings)


SUITES: Dict[str, SuiteDefinition] = {
    s.name: s for s in (
        SuiteDefinition('ring-core', 'unit structure, chain rings, reduction morphism', 63, _ring_core),
        SuiteDefinition('exact-linalg', 'Howell canonicity, kernels, solving, matrix predicates', 300, _exact_linalg),
        SuiteDefinition('dual-algebra', 'duals, sums, intersections, distances, LCD tests', 500, _dual_algebra),
        SuiteDefinition('mpc-algebra', 'matrix-product dual, hull and LCD conditions', 200, _mpc_algebra),
        SuiteDefinition('torsion', 'torsion codes and LCD constructions over residue fields', 300, _torsion),
        SuiteDefinition('worked-examples', 'the worked Z_30, Z_25, Z_4 and Turyn examples', 4,
                        _worked_examples, fixed_count=4),
    )
}


class SuiteRunner:
    """
    套件执行器

    并行方式沿用线程池 + as_completed，结果按实例下标排序后汇总。
    """

    def __init__(self, settings, stream=None):
        self.settings = settings
        self.stream = stream or sys.stderr

    def _log(self, message: str):
        if getattr(self.settings, 'verbose', False):
            print(message, file=self.stream)

    def count_for(self, definition: SuiteDefinition) -> int:
        if definition.fixed_count is not None:
            return definition.fixed_count
        counts = getattr(self.settings, 'suite_counts', {}) or {}
        return int(counts.get(definition.name, definition.default_count))

    def run_instance(self, definition: SuiteDefinition, index: int) -> Checker:
        chk = Checker(definition.name, index)
        rng = random.Random(f"{self.settings.seed}:{definition.name}:{index}")
        try:
            definition.instance(rng, chk, self.settings)
        except Exception as e:
            chk.failures.append(f"instance {index}: {type(e).__name__}: {e}")
        return chk

    def run(self, name: str) -> SuiteResult:
        definition = SUITES.get(name)
        if definition is None:
            raise HypothesisError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
        count = self.count_for(definition)
        self._log(f"{Fore.CYAN}[verify] {name}: {count} instances ({definition.description}){Style.RESET_ALL}")

        outcomes: Dict[int, Checker] = {}
        workers = max(1, int(self.settings.workers))
        if self.settings.parallel and workers > 1 and count > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                futures = {executor.submit(self.run_instance, definition, i): i for i in range(count)}
                for future in as_completed(futures):
                    i = futures[future]
                    outcomes[i] = future.result()
                    if outcomes[i].failures:
                        self._log(f"  {Fore.RED}✗{Style.RESET_ALL} instance {i}")
        else:
            for i in range(count):
                outcomes[i] = self.run_instance(definition, i)
                if outcomes[i].failures:
                    self._log(f"  {Fore.RED}✗{Style.RESET_ALL} instance {i}")

        checks: Counter = Counter()
        order: List[str] = []
        failures: List[str] = []
        notes: Counter = Counter()
        note_order: List[str] = []
        for i in range(count):
            outcome = outcomes[i]
            for key, value in outcome.checks.items():
                if key not in checks:
                    order.append(key)
                checks[key] += value
            for key, value in outcome.notes.items():
                if key not in notes:
                    note_order.append(key)
                notes[key] += value
            failures.extend(outcome.failures)

        result = SuiteResult(
            suite=name,
            instances=count,
            seed=str(self.settings.seed),
            checks=[(key, checks[key]) for key in order],
            failures=failures,
            notes=[f"{key} ({notes[key]} instances)" for key in note_order],
        )
        if result.passed:
            self._log(f"  {Fore.GREEN}✓{Style.RESET_ALL} {name}: all checks passed")
        else:
            self._log(f"  {Fore.RED}✗{Style.RESET_ALL} {name}: {len(failures)} failure(s)")
        return result
