"""
spec 文件解析

行格式（# 开头为注释）：
    ring <m>
    code <name> [n=<n>]           随后 gens，每行一个生成行，end 结束
    code <name> cyclic n=<n> poly=<c0,c1,...,1>
    matrix <name> <s>x<l> [residue]   随后 s 行，end 结束
    run <command ...>

命令的名字与引用在解析阶段检查，出错时 SpecParseError 带行号。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CodeToolError, SpecParseError
from .linalg import Matrix
from .linear_code import LinearCode, code_from_generators, cyclic_code
from .ring import RingSpec, ring_new

# 命令 -> 位置参数说明；'code' / 'codes' / 'matrix' 会检查引用
COMMAND_ARGS = {
    'info': ('code',),
    'dual': ('code',),
    'hull': ('code',),
    'lcd': ('code',),
    'distance': ('code',),
    'mpc': ('codes', 'matrix'),
    'torsion': ('code', 'int'),
    'torsion-mpc': ('code', 'int', 'ints', 'matrix'),
    'verify': ('suite',),
}

# 命令行风格的选项（只用于 distance）
COMMAND_OPTIONS = ('--enum-cap', '--weight-cap')


@dataclass(frozen=True)
class Command:
    """一条待执行的命令"""
    name: str
    args: Tuple[str, ...]
    options: Dict[str, int] = field(default_factory=dict, compare=False)
    line: Optional[int] = None

    def __str__(self) -> str:
        parts = [self.name, *self.args]
        for key, value in self.options.items():
            parts += [key, str(value)]
        return " ".join(parts)


@dataclass
class SpecDocument:
    """解析结果：环、命名码、命名矩阵和命令"""
    ring: RingSpec
    codes: Dict[str, LinearCode] = field(default_factory=dict)
    matrices: Dict[str, Matrix] = field(default_factory=dict)
    commands: List[Command] = field(default_factory=list)

    def code(self, name: str) -> LinearCode:
        return self.codes[name]

    def matrix(self, name: str) -> Matrix:
        return self.matrices[name]

    def has_name(self, name: str) -> bool:
        return name in self.codes or name in self.matrices


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SpecParseError(f"{what} must be an integer, got {token!r}", line)


def _keyvalues(tokens: Sequence[str], line: int) -> Dict[str, str]:
    result = {}
    for token in tokens:
        if '=' not in token:
            raise SpecParseError(f"expected key=value, got {token!r}", line)
        key, value = token.split('=', 1)
        result[key] = value
    return result


def _parse_row(text: str, line: int, arity: Optional[int]) -> List[int]:
    row = [_int(tok, line, "row entry") for tok in text.split()]
    if arity is not None and len(row) != arity:
        raise SpecParseError(f"malformed row: expected {arity} entries, got {len(row)}", line)
    return row


def parse_command(doc: SpecDocument, words: Sequence[str], line: Optional[int] = None) -> Command:
    """
    解析并校验一条命令

    Args:
        doc: 已解析的文档（用于检查引用）
        words: 命令词，例如 ['mpc', 'C1', 'C2', 'A']
        line: 所在行号

    Returns:
        Command
    """
    if not words:
        raise SpecParseError("empty command", line)
    name, rest = words[0], list(words[1:])
    if name not in COMMAND_ARGS:
        raise SpecParseError(f"unknown command {name!r}", line)

    options: Dict[str, int] = {}
    positional: List[str] = []
    i = 0
    while i < len(rest):
        token = rest[i]
        if token in COMMAND_OPTIONS:
            if i + 1 >= len(rest):
                raise SpecParseError(f"option {token} needs a value", line)
            value = _int(rest[i + 1], line, token)
            if value < 1:
                raise SpecParseError(f"{token} must be >= 1, got {value}", line)
            options[token] = value
            i += 2
            continue
        if token.startswith('--'):
            raise SpecParseError(f"unknown option {token}", line)
        positional.append(token)
        i += 1
    if options and name != 'distance':
        raise SpecParseError(f"options are only accepted by distance, not {name}", line)

    shape = COMMAND_ARGS[name]
    if shape[0] == 'codes':
        if len(positional) < 2:
            raise SpecParseError("mpc needs at least one code and a matrix", line)
        code_names, matrix_name = positional[:-1], positional[-1]
        for ref in code_names:
            _require_code(doc, ref, line)
        _require_matrix(doc, matrix_name, line)
    else:
        if len(positional) != len(shape):
            raise SpecParseError(
                f"{name} takes {len(shape)} argument(s) ({' '.join(shape)}), got {len(positional)}", line
            )
        for kind, token in zip(shape, positional):
            if kind == 'code':
                _require_code(doc, token, line)
            elif kind == 'matrix':
                _require_matrix(doc, token, line)
            elif kind == 'int':
                _int(token, line, f"{name} argument")
            elif kind == 'ints':
                for part in token.split(','):
                    _int(part, line, "index list entry")
    return Command(name, tuple(positional), options, line)


def _require_code(doc: SpecDocument, name: str, line: Optional[int]):
    if name not in doc.codes:
        raise SpecParseError(f"undefined code {name!r}", line)


def _require_matrix(doc: SpecDocument, name: str, line: Optional[int]):
    if name not in doc.matrices:
        raise SpecParseError(f"undefined matrix {name!r}", line)


class _Parser:
    """逐行状态机"""

    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0
        self.doc: Optional[SpecDocument] = None

    def next_line(self) -> Tuple[int, str]:
        while self.pos < len(self.lines):
            raw = self.lines[self.pos]
            self.pos += 1
            content = raw.split('#', 1)[0].strip()
            if content:
                return self.pos, content
        return self.pos, ''

    def block_rows(self, start: int, what: str, arity: Optional[int]) -> List[List[int]]:
        rows = []
        while True:
            line, content = self.next_line()
            if not content:
                raise SpecParseError(f"{what} starting at line {start} is missing 'end'", line)
            if content == 'end':
                return rows
            row = _parse_row(content, line, arity)
            if arity is None:
                arity = len(row)
            rows.append(row)

    def parse(self) -> SpecDocument:
        while True:
            line, content = self.next_line()
            if not content:
                break
            words = content.split()
            keyword = words[0]
            if keyword == 'ring':
                self.ring_decl(words, line)
                continue
            if self.doc is None:
                raise SpecParseError(f"'{keyword}' before the ring declaration", line)
            if keyword == 'code':
                self.code_decl(words, line)
            elif keyword == 'matrix':
                self.matrix_decl(words, line)
            elif keyword == 'run':
                self.doc.commands.append(parse_command(self.doc, words[1:], line))
            else:
                raise SpecParseError(f"unknown keyword {keyword!r}", line)
        if self.doc is None:
            raise SpecParseError("missing ring declaration")
        return self.doc

    def ring_decl(self, words: List[str], line: int):
        if self.doc is not None:
            raise SpecParseError("ring declared twice", line)
        if len(words) != 2:
            raise SpecParseError("expected 'ring <m>'", line)
        modulus = _int(words[1], line, "ring modulus")
        try:
            self.doc = SpecDocument(ring_new(modulus))
        except CodeToolError as e:
            raise SpecParseError(f"unknown ring: {e}", line)

    def check_name(self, name: str, line: int):
        if self.doc.has_name(name):
            raise SpecParseError(f"duplicate name {name!r}", line)

    def code_decl(self, words: List[str], line: int):
        if len(words) < 2:
            raise SpecParseError("expected 'code <name>'", line)
        name = words[1]
        self.check_name(name, line)
        ring = self.doc.ring

        if len(words) > 2 and words[2] == 'cyclic':
            kv = _keyvalues(words[3:], line)
            if set(kv) != {'n', 'poly'}:
                raise SpecParseError("cyclic code needs exactly n=<n> and poly=<c0,...,1>", line)
            n = _int(kv['n'], line, "n")
            poly = [_int(c, line, "polynomial coefficient") for c in kv['poly'].split(',')]
            try:
                self.doc.codes[name] = cyclic_code(ring, n, poly)
            except CodeToolError as e:
                raise SpecParseError(f"code {name}: {e}", line)
            return

        rest = words[2:]
        gens_inline = bool(rest) and rest[-1] == 'gens'
        if gens_inline:
            rest = rest[:-1]
        kv = _keyvalues(rest, line)
        if set(kv) - {'n'}:
            raise SpecParseError(f"unexpected code attributes {sorted(set(kv) - {'n'})}", line)
        n = _int(kv['n'], line, "n") if 'n' in kv else None

        if not gens_inline:
            gline, content = self.next_line()
            if content != 'gens':
                raise SpecParseError(f"expected 'gens' after 'code {name}'", gline)
        rows = self.block_rows(line, f"code {name}", n)
        if n is None:
            if not rows:
                raise SpecParseError(f"code {name} has no rows; give its length with n=<n>", line)
            n = len(rows[0])
        try:
            self.doc.codes[name] = code_from_generators(ring, n, rows)
        except CodeToolError as e:
            raise SpecParseError(f"code {name}: {e}", line)

    def matrix_decl(self, words: List[str], line: int):
        if len(words) not in (3, 4) or (len(words) == 4 and words[3] != 'residue'):
            raise SpecParseError("expected 'matrix <name> <s>x<l> [residue]'", line)
        name = words[1]
        self.check_name(name, line)
        dims = words[2].lower().split('x')
        if len(dims) != 2:
            raise SpecParseError(f"matrix shape must look like 2x2, got {words[2]!r}", line)
        s, l = (_int(d, line, "matrix dimension") for d in dims)

        ring = self.doc.ring
        if len(words) == 4:
            if not ring.is_chain:
                raise SpecParseError(f"{ring} has no residue field", line)
            ring = ring.residue_field

        rows = self.block_rows(line, f"matrix {name}", l)
        if len(rows) != s:
            raise SpecParseError(f"matrix {name} declared with {s} rows, got {len(rows)}", line)
        self.doc.matrices[name] = Matrix.from_rows(ring, rows, cols=l)


def parse_spec(text: str) -> SpecDocument:
    """
    解析 spec 文本

    Example:
        >>> doc = parse_spec("ring 30\\ncode C1\\ngens\\n15 0\\n0 15\\nend\\n")
        >>> doc.codes['C1'].cardinality
        4
    """
    return _Parser(text).parse()


def load_spec(path: str) -> SpecDocument:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise SpecParseError(f"cannot read {path}: {e.strerror}")
    return parse_spec(text)


def format_code_block(name: str, code: LinearCode) -> str:
    """把码写回 spec 格式（规范生成行）"""
    lines = [f"code {name} n={code.length}", "gens"]
    lines += [" ".join(str(v) for v in row) for row in code.rows]
    lines.append("end")
    return "\n".join(lines)
