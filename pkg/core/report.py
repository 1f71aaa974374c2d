"""
文本报告渲染

所有报告都由 core/templates 下的 jinja2 模板生成，输出是确定性的纯文本。
"""

from pathlib import Path
from typing import Optional, Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

TEMPLATE_DIR = Path(__file__).parent / 'templates'


def format_row(row: Sequence[int]) -> str:
    return " ".join(str(v) for v in row)


def format_generators(code, indent: int = 4) -> str:
    """码的规范生成行，每行一个；零码写 (none)"""
    pad = " " * indent
    if not code.rows:
        return f"{pad}(none)"
    return "\n".join(pad + format_row(row) for row in code.rows)


def format_bool(value: bool) -> str:
    return "true" if value else "false"


class ReportRenderer:
    """jinja2 环境的薄封装"""

    def __init__(self, template_dir: Optional[Path] = None):
        template_dir = Path(template_dir) if template_dir else TEMPLATE_DIR
        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            autoescape=select_autoescape(['html']),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.env.filters['row'] = format_row
        self.env.filters['generators'] = format_generators
        self.env.filters['flag'] = format_bool

    def render(self, template_name: str, **context) -> str:
        return self.env.get_template(template_name).render(**context)

    def template_names(self):
        return sorted(self.env.list_templates(extensions=['j2']))


_renderer: Optional[ReportRenderer] = None


def render(template_name: str, **context) -> str:
    global _renderer
    if _renderer is None:
        _renderer = ReportRenderer()
    return _renderer.render(template_name, **context)
