"""
矩阵积码工具核心模块
包含 Z_m 上的精确线性代数、码运算、矩阵积码、挠码、spec 解析和性质套件
"""

__version__ = '1.0.0'
__author__ = 'MPC Tool Team'

from .commands import RunSettings, run_command, run_document, run_suite
from .environment import EnvironmentChecker
from .errors import CodeToolError, HypothesisError, SpecParseError, TheoremViolation
from .spec_parser import load_spec, parse_spec

__all__ = [
    'CodeToolError',
    'EnvironmentChecker',
    'HypothesisError',
    'RunSettings',
    'SpecParseError',
    'TheoremViolation',
    'load_spec',
    'parse_spec',
    'run_command',
    'run_document',
    'run_suite',
]
