"""
命令执行

run_command 接收已解析的 SpecDocument 和一条 Command，返回确定性的文本报告。
--oracle 时在规模允许的情况下用暴力枚举交叉验证，不一致抛 TheoremViolation。
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .errors import HypothesisError, RingMismatchError, TheoremViolation
from .linalg import det, is_nsc, reduce_matrix_mod_gamma
from .linear_code import (
    DEFAULT_ENUM_CAP, DEFAULT_WEIGHT_CAP, LinearCode, dual, hull, is_lcd, is_lcd_free_test,
    iter_codewords, min_distance, params,
)
from .matrix_product import (
    MatrixProductSpec, lcd_conditions, mpc_build, mpc_distance_bounds, mpc_hull,
)
from .oracle import (
    DEFAULT_ORACLE_CAP, brute_dual, brute_hull, brute_min_distance, brute_mpc, brute_span,
    brute_torsion,
)
from .report import render
from .spec_parser import Command, SpecDocument
from .suites import SuiteRunner
from .torsion import torsion_code, torsion_family, torsion_lcd_mpc


@dataclass(frozen=True)
class RunSettings:
    """命令执行参数（来自配置文件和命令行）"""
    enum_cap: int = DEFAULT_ENUM_CAP
    weight_cap: int = DEFAULT_WEIGHT_CAP
    oracle: bool = False
    oracle_cap: int = DEFAULT_ORACLE_CAP
    workers: int = 3
    parallel: bool = True
    seed: str = 'mpc'
    suite_counts: Dict[str, int] = field(default_factory=dict, compare=False)
    debug: bool = False
    verbose: bool = False


def _space_fits(code: LinearCode, settings: RunSettings) -> bool:
    return code.ring.modulus ** code.length <= settings.oracle_cap


def _agree(what: str, ok: bool) -> str:
    if not ok:
        raise TheoremViolation(f"oracle disagrees on {what}")
    return "agrees"


def _skipped(code: LinearCode) -> str:
    return f"skipped ({code.ring.modulus}^{code.length} vectors exceed the oracle cap)"


def _cmd_info(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name = cmd.args[0]
    code = doc.code(name)
    p = params(code, settings.enum_cap, settings.weight_cap)
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            words = brute_span(code.generator_matrix, settings.oracle_cap)
            d = brute_min_distance(code.generator_matrix, settings.oracle_cap)
            fast_d = None if p.min_distance is None else p.min_distance.lo
            exact = p.min_distance is None or p.min_distance.exact
            oracle = _agree("cardinality and distance", len(words) == code.cardinality and (not exact or d == fast_d))
        else:
            oracle = _skipped(code)
    return render('info.txt.j2', name=name, code=code, params=p, oracle=oracle)


def _cmd_dual(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name = cmd.args[0]
    code = doc.code(name)
    result = dual(code)
    frobenius = code.cardinality * result.cardinality == code.ring.modulus ** code.length
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            oracle = _agree("dual", set(iter_codewords(result)) == brute_dual(code.generator_matrix, settings.oracle_cap))
        else:
            oracle = _skipped(code)
    return render('dual.txt.j2', name=name, code=code, result=result, frobenius=frobenius, oracle=oracle)


def _cmd_hull(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name = cmd.args[0]
    code = doc.code(name)
    result = hull(code)
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            oracle = _agree("hull", set(iter_codewords(result)) == brute_hull(code.generator_matrix, settings.oracle_cap))
        else:
            oracle = _skipped(code)
    return render('hull.txt.j2', name=name, code=code, result=result, oracle=oracle)


def _cmd_lcd(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name = cmd.args[0]
    code = doc.code(name)
    hull_code = hull(code)
    lcd = hull_code.is_zero
    free_test, gram_det = None, None
    if code.is_free:
        G = code.generator_matrix
        free_test = is_lcd_free_test(G)
        gram_det = det(G @ G.transpose())
        if free_test != lcd:
            raise TheoremViolation(f"determinant test and hull disagree on {name}")
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            oracle = _agree("lcd", (len(brute_hull(code.generator_matrix, settings.oracle_cap)) == 1) == lcd)
        else:
            oracle = _skipped(code)
    return render('lcd.txt.j2', name=name, code=code, hull_code=hull_code, lcd=lcd,
                  free_test=free_test, gram_det=gram_det, oracle=oracle)


def _cmd_distance(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name = cmd.args[0]
    code = doc.code(name)
    enum_cap = cmd.options.get('--enum-cap', settings.enum_cap)
    weight_cap = cmd.options.get('--weight-cap', settings.weight_cap)
    distance = min_distance(code, enum_cap, weight_cap)
    method = "enumeration" if code.cardinality <= enum_cap else f"weight search up to {weight_cap}"
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            d = brute_min_distance(code.generator_matrix, settings.oracle_cap)
            if distance is None:
                ok = d is None
            else:
                ok = d is not None and distance.lo <= d <= distance.hi
            oracle = _agree("minimum distance", ok)
        else:
            oracle = _skipped(code)
    return render('distance.txt.j2', name=name, code=code, distance=distance, method=method, oracle=oracle)


def _cmd_mpc(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    code_names, matrix_name = list(cmd.args[:-1]), cmd.args[-1]
    spec = MatrixProductSpec(tuple(doc.code(n) for n in code_names), doc.matrix(matrix_name))
    code = mpc_build(spec)
    report = lcd_conditions(spec)
    hull_result = mpc_hull(spec)
    if hull_result.code != hull(code):
        raise TheoremViolation(f"hull via {hull_result.provenance} differs from the direct hull")

    bounds = None
    if spec.ring.is_field and spec.is_square and is_nsc(spec.matrix):
        bounds = mpc_distance_bounds(spec, settings.enum_cap, settings.weight_cap)

    oracle = None
    if settings.oracle:
        size = 1
        for c in spec.codes:
            size *= c.cardinality
        if size <= settings.oracle_cap:
            words = brute_mpc([c.generator_matrix for c in spec.codes], spec.matrix, settings.oracle_cap)
            oracle = _agree("matrix-product codewords", set(iter_codewords(code)) == words)
        else:
            oracle = f"skipped ({size} input tuples exceed the oracle cap)"

    return render('mpc.txt.j2', code_names=code_names, matrix_name=matrix_name, spec=spec,
                  params=params(code, settings.enum_cap, settings.weight_cap),
                  report=report, hull=hull_result, bounds=bounds, oracle=oracle)


def _cmd_torsion(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name, index = cmd.args[0], int(cmd.args[1])
    code = doc.code(name)
    result = torsion_code(code, index)
    family = torsion_family(code)
    groups = [" = ".join(f"T_{i}" for i in group) for group in family.equalities()]
    oracle = None
    if settings.oracle:
        if _space_fits(code, settings):
            oracle = _agree("torsion code", set(iter_codewords(result)) ==
                            brute_torsion(code.generator_matrix, index, settings.oracle_cap))
        else:
            oracle = _skipped(code)
    return render('torsion.txt.j2', name=name, index=index, code=code, result=result,
                  params=params(result, settings.enum_cap, settings.weight_cap),
                  family_groups=groups, lcd=is_lcd(result), oracle=oracle)


def _cmd_torsion_mpc(doc: SpecDocument, cmd: Command, settings: RunSettings) -> str:
    name, variant, index_text, matrix_name = cmd.args
    code = doc.code(name)
    matrix = doc.matrix(matrix_name)
    indices = [int(v) for v in index_text.split(',')]

    code.ring.require_chain()
    residue = code.ring.residue_field
    reduced = False
    if matrix.ring != residue:
        if matrix.ring != code.ring:
            raise RingMismatchError(f"matrix {matrix_name} is over {matrix.ring}, code over {code.ring}")
        matrix = reduce_matrix_mod_gamma(matrix)
        reduced = True

    result = torsion_lcd_mpc(code, indices, matrix, int(variant), settings.enum_cap, settings.weight_cap)
    order = indices
    if result.variant == 4 and not matrix.is_upper_triangular():
        order = list(reversed(indices))
    return render('torsion_mpc.txt.j2', name=name, code=code, matrix_name=matrix_name, result=result,
                  order=order, reduced=reduced,
                  params=params(result.code, settings.enum_cap, settings.weight_cap))


def run_suite(name: str, settings: Optional[RunSettings] = None) -> Tuple[str, bool]:
    """运行一个性质套件，返回 (报告, 是否全部通过)"""
    result = SuiteRunner(settings or RunSettings()).run(name)
    return render('verify.txt.j2', result=result), result.passed


def _cmd_verify(doc: Optional[SpecDocument], cmd: Command, settings: RunSettings) -> str:
    return run_suite(cmd.args[0], settings)[0]


COMMANDS: Dict[str, Callable[[SpecDocument, Command, RunSettings], str]] = {
    'info': _cmd_info,
    'dual': _cmd_dual,
    'hull': _cmd_hull,
    'lcd': _cmd_lcd,
    'distance': _cmd_distance,
    'mpc': _cmd_mpc,
    'torsion': _cmd_torsion,
    'torsion-mpc': _cmd_torsion_mpc,
    'verify': _cmd_verify,
}


def run_command(doc: Optional[SpecDocument], cmd: Command, settings: Optional[RunSettings] = None) -> str:
    """
    执行一条命令

    Args:
        doc: 解析好的文档（verify 可为 None）
        cmd: 命令
        settings: 执行参数

    Returns:
        文本报告
    """
    settings = settings or RunSettings()
    handler = COMMANDS.get(cmd.name)
    if handler is None:
        raise HypothesisError(f"unknown command {cmd.name!r}")
    return handler(doc, cmd, settings)


def run_document(doc: SpecDocument, settings: Optional[RunSettings] = None) -> str:
    """按顺序执行文档中全部 run 命令，报告之间以 '== run ... ==' 分隔"""
    if not doc.commands:
        raise HypothesisError("spec file contains no run commands")
    parts: List[str] = []
    for cmd in doc.commands:
        parts.append(f"== run {cmd} ==\n")
        parts.append(run_command(doc, cmd, settings))
    return "".join(parts)
