#!/usr/bin/env python3
"""
矩阵积码工具 - 统一 CLI 入口

子命令：
- run: 执行 spec 文件中全部 run 行
- info / dual / hull / lcd / distance / mpc / torsion / torsion-mpc: 对 spec 文件中的对象执行单条命令
- verify: 运行性质套件
- check-env: 检查环境依赖

报告写到标准输出；状态、警告和错误写到标准错误。
退出码：0 成功，1 计算错误或套件失败，2 spec 解析错误。
"""

import argparse
import sys
import traceback
from typing import List, Optional

from colorama import Fore, Style, init

from core.commands import RunSettings, run_command, run_document, run_suite
from core.config import DEFAULT_CONFIG_PATH, load_config
from core.environment import EnvironmentChecker
from core.errors import CodeToolError, SpecParseError
from core.spec_parser import COMMAND_ARGS, load_spec, parse_command
from core.suites import SUITES

init(autoreset=True)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2

# 单条命令子命令的位置参数（spec 文件之后）
_POSITIONAL_HELP = {
    'code': ('code', '码名'),
    'int': ('index', '挠码下标 i'),
    'ints': ('indices', '逗号分隔的下标，例如 0,1'),
    'matrix': ('matrix', '矩阵名'),
}


def _err(message: str):
    print(message, file=sys.stderr)


def _add_common_options(p: argparse.ArgumentParser):
    p.add_argument('--enum-cap', type=int, help='完全枚举的码字数上限（默认 2^24）')
    p.add_argument('--weight-cap', type=int, help='低重量搜索的重量上限（默认 3）')
    p.add_argument('--oracle', action='store_true', help='规模允许时用暴力枚举交叉验证')
    p.add_argument('--oracle-cap', type=int, help='暴力枚举的向量数上限（默认 10^6）')
    p.add_argument('--config', default=DEFAULT_CONFIG_PATH, help=f'配置文件（默认: {DEFAULT_CONFIG_PATH}）')
    p.add_argument('--debug', action='store_true', help='调试模式（出错时打印 traceback）')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='矩阵积码工具：Z_m 上的对偶、hull、LCD 判定与挠码构造',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
示例:
  # 执行 spec 文件中的全部命令
  python mpc_cli.py run specs/example1_z30.txt

  # 单条命令
  python mpc_cli.py lcd specs/example1_z30.txt C1
  python mpc_cli.py mpc specs/example1_z30.txt C1 C2 A
  python mpc_cli.py torsion specs/z4_torsion.txt C 1
  python mpc_cli.py distance specs/example2_z25.txt C1 --weight-cap 2

  # 运行性质套件（不指定时运行全部）
  python mpc_cli.py verify dual-algebra --workers 4
  python mpc_cli.py verify --count 20

  # 检查环境
  python mpc_cli.py check-env
        '''
    )
    subparsers = parser.add_subparsers(dest='command', help='子命令')

    run_parser = subparsers.add_parser('run', help='执行 spec 文件中的 run 行')
    run_parser.add_argument('spec_file', help='spec 文件')
    _add_common_options(run_parser)

    for name, shape in COMMAND_ARGS.items():
        if name == 'verify':
            continue
        sub = subparsers.add_parser(name, help=f'{name} 命令')
        sub.add_argument('spec_file', help='spec 文件')
        if shape[0] == 'codes':
            sub.add_argument('codes', nargs='+', help='输入码名，最后一个参数是矩阵名')
        else:
            for kind in shape:
                dest, text = _POSITIONAL_HELP[kind]
                if kind == 'int' and name == 'torsion-mpc':
                    dest, text = 'variant', '变体 1..4'
                sub.add_argument(dest, help=text)
        _add_common_options(sub)

    verify_parser = subparsers.add_parser('verify', help='运行性质套件')
    verify_parser.add_argument('suite', nargs='?', choices=list(SUITES), help='套件名（不指定时运行全部）')
    verify_parser.add_argument('--suite', dest='suite_option', choices=list(SUITES), help='套件名')
    verify_parser.add_argument('--count', type=int, help='每个套件的实例数')
    verify_parser.add_argument('--seed', help='随机种子（默认 mpc）')
    verify_parser.add_argument('--workers', type=int, help='并行 worker 数（默认 3）')
    verify_parser.add_argument('--no-parallel', action='store_true', help='禁用并行')
    verify_parser.add_argument('-v', '--verbose', action='store_true', help='在标准错误打印进度')
    _add_common_options(verify_parser)

    subparsers.add_parser('check-env', help='检查环境依赖')
    return parser


def build_settings(args: argparse.Namespace) -> RunSettings:
    """配置文件 + 命令行参数 -> RunSettings（命令行优先）"""
    config = load_config(args.config, debug=args.debug)

    def pick(name: str):
        value = getattr(args, name, None)
        if value is None:
            return config[name]
        if value < 1:
            raise CodeToolError(f"--{name.replace('_', '-')} must be >= 1, got {value}")
        return value

    counts = dict(config['suites'])
    count = getattr(args, 'count', None)
    if count is not None:
        if count < 1:
            raise CodeToolError(f"--count must be >= 1, got {count}")
        counts = {name: count for name in SUITES}

    settings = RunSettings(
        enum_cap=pick('enum_cap'),
        weight_cap=pick('weight_cap'),
        oracle=args.oracle,
        oracle_cap=pick('oracle_cap'),
        workers=pick('workers'),
        parallel=not getattr(args, 'no_parallel', False),
        seed=getattr(args, 'seed', None) or config['seed'],
        suite_counts=counts,
        debug=args.debug,
        verbose=getattr(args, 'verbose', False),
    )
    if args.debug:
        _err(f"[DEBUG] {settings}")
    return settings


def _command_words(args: argparse.Namespace) -> List[str]:
    shape = COMMAND_ARGS[args.command]
    if shape[0] == 'codes':
        return [args.command, *args.codes]
    words = [args.command]
    for kind in shape:
        dest = _POSITIONAL_HELP[kind][0]
        if kind == 'int' and args.command == 'torsion-mpc':
            dest = 'variant'
        words.append(getattr(args, dest))
    return words


def execute(args: argparse.Namespace) -> str:
    """执行 run / 单条命令 / verify，返回报告文本；verify 有失败时抛 _SuiteFailed"""
    settings = build_settings(args)

    if args.command == 'verify':
        names = [args.suite_option or args.suite] if (args.suite_option or args.suite) else list(SUITES)
        parts = []
        failed = []
        for i, name in enumerate(names, 1):
            if settings.verbose:
                _err(f"{Fore.CYAN}[{i}/{len(names)}] {name}{Style.RESET_ALL}")
            report, passed = run_suite(name, settings)
            parts.append(report)
            if not passed:
                failed.append(name)
        text = "".join(parts)
        if failed:
            raise _SuiteFailed(text, failed)
        return text

    doc = load_spec(args.spec_file)
    if args.command == 'run':
        return run_document(doc, settings)
    cmd = parse_command(doc, _command_words(args))
    return run_command(doc, cmd, settings)


class _SuiteFailed(Exception):
    def __init__(self, report: str, suites: List[str]):
        super().__init__(", ".join(suites))
        self.report = report
        self.suites = suites


def _describe(args: argparse.Namespace) -> str:
    if args.command == 'run':
        return f"run {args.spec_file}"
    if args.command == 'verify':
        return f"verify {args.suite_option or args.suite or 'all'}"
    return " ".join(_command_words(args))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_FAILURE

    if args.command == 'check-env':
        _err(f"{Fore.CYAN}检查环境依赖...{Style.RESET_ALL}")
        return EXIT_OK if EnvironmentChecker().run_all_checks(show_instructions=True) else EXIT_FAILURE

    if args.debug:
        _err(f"[DEBUG] 命令: {_describe(args)}")

    report, status = '', EXIT_OK
    try:
        report = execute(args)
    except _SuiteFailed as e:
        report, status = e.report, EXIT_FAILURE
        _err(f"{Fore.RED}✗ suite failures: {', '.join(e.suites)}{Style.RESET_ALL}")
    except SpecParseError as e:
        status = EXIT_PARSE_ERROR
        _err(f"{Fore.RED}✗ parse error: {e}{Style.RESET_ALL}")
        if args.debug:
            traceback.print_exc()
    except CodeToolError as e:
        status = EXIT_FAILURE
        _err(f"{Fore.RED}✗ error: {e}{Style.RESET_ALL}")
        if args.debug:
            traceback.print_exc()
    except KeyboardInterrupt:
        _err(f"\n{Fore.YELLOW}interrupted{Style.RESET_ALL}")
        return EXIT_FAILURE

    sys.stdout.write(report)
    return status


if __name__ == '__main__':
    sys.exit(main())
