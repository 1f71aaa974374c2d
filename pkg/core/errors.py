"""
异常定义模块

所有计算错误都继承自 CodeToolError，CLI 据此决定退出码：
SpecParseError 退出码 2，其余 CodeToolError 退出码 1。
"""

from typing import Optional


class CodeToolError(Exception):
    """工具内所有可预期错误的基类"""


class RingError(CodeToolError):
    """模数非法，或环缺少所需的链环结构"""


class RingMismatchError(CodeToolError):
    """不同模数的对象参与了同一运算"""


class NotAUnitError(CodeToolError):
    """对非单位元求逆"""


class DimensionError(CodeToolError):
    """矩阵/向量维度不匹配"""


class HypothesisError(CodeToolError):
    """定理或操作的前提条件不成立"""


class TheoremViolation(CodeToolError):
    """断言的恒等式不成立（说明实现有缺陷）"""


class OracleCapExceeded(CodeToolError):
    """暴力枚举规模超过上限"""


class SpecParseError(CodeToolError):
    """spec 文件解析错误，携带行号"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}: {message}")
