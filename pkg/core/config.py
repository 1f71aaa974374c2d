"""
配置文件加载

mpc_config.json（可选）提供枚举上限、重量上限、oracle 上限、并行 worker 数、
verify 种子和各套件实例数。命令行参数优先于配置文件。
"""

import json
import os
import sys
from typing import Any, Dict, Optional

from colorama import Fore, Style, init

from .linear_code import DEFAULT_ENUM_CAP, DEFAULT_WEIGHT_CAP
from .oracle import DEFAULT_ORACLE_CAP

init(autoreset=True)

DEFAULT_CONFIG_PATH = 'mpc_config.json'

DEFAULTS: Dict[str, Any] = {
    'enum_cap': DEFAULT_ENUM_CAP,
    'weight_cap': DEFAULT_WEIGHT_CAP,
    'oracle_cap': DEFAULT_ORACLE_CAP,
    'workers': 3,
    'seed': 'mpc',
    'suites': {},
}

_POSITIVE_INTS = ('enum_cap', 'weight_cap', 'oracle_cap', 'workers')


def _warn(message: str):
    print(f"{Fore.YELLOW}⚠️  警告: {message}{Style.RESET_ALL}", file=sys.stderr)


def load_config_file(config_path: str = DEFAULT_CONFIG_PATH) -> Optional[Dict]:
    """
    读取 JSON 配置文件

    Returns:
        配置字典；文件不存在或无法读取时返回 None
    """
    if not os.path.exists(config_path):
        return None
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = json.load(f)
    except Exception as e:
        _warn(f"无法读取配置文件 {config_path}: {str(e)}")
        return None
    if not isinstance(config, dict):
        _warn(f"配置文件 {config_path} 顶层必须是对象，已忽略")
        return None
    return config


def load_config(config_path: str = DEFAULT_CONFIG_PATH, debug: bool = False) -> Dict[str, Any]:
    """
    加载配置并与默认值合并

    非法取值（非正整数、未知套件）给出警告并回退到默认值。

    Args:
        config_path: 配置文件路径
        debug: 打印合并后的配置

    Returns:
        完整配置字典，suites 为 {套件名: 实例数}
    """
    config = dict(DEFAULTS)
    config['suites'] = {}
    raw = load_config_file(config_path) or {}

    for key in _POSITIVE_INTS:
        if key not in raw:
            continue
        value = raw[key]
        if isinstance(value, int) and not isinstance(value, bool) and value >= 1:
            config[key] = value
        else:
            _warn(f"{key} 必须是正整数，使用默认值 {DEFAULTS[key]}")

    if 'seed' in raw:
        config['seed'] = str(raw['seed'])

    suites = raw.get('suites', {})
    if not isinstance(suites, dict):
        _warn("suites 必须是对象，已忽略")
        suites = {}
    for name, options in suites.items():
        count = options.get('count') if isinstance(options, dict) else None
        if isinstance(count, int) and not isinstance(count, bool) and count >= 1:
            config['suites'][name] = count
        else:
            _warn(f"suites.{name}.count 必须是正整数，已忽略")

    unknown = sorted(set(raw) - set(DEFAULTS))
    if unknown:
        _warn(f"未知配置项: {', '.join(unknown)}")

    if debug:
        print(f"[DEBUG] 配置: {json.dumps(config, ensure_ascii=False, sort_keys=True)}", file=sys.stderr)
    return config
