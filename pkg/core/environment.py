"""
环境检查模块
检查 Python 版本、依赖包和报告模板是否就绪
"""

import importlib
import platform
import sys
from typing import Dict, List, Tuple

from colorama import Fore, Style, init

from .report import TEMPLATE_DIR, ReportRenderer

init(autoreset=True)

# 包名 -> 用途
REQUIRED_PACKAGES: Dict[str, str] = {
    'colorama': '彩色状态输出',
    'jinja2': '文本报告模板',
    'networkx': '码包含关系图',
    'sympy': '素因子分解、Bareiss 行列式、多项式除法',
    'pytest': '测试',
}

REQUIRED_TEMPLATES = (
    'info.txt.j2', 'dual.txt.j2', 'hull.txt.j2', 'lcd.txt.j2', 'distance.txt.j2',
    'mpc.txt.j2', 'torsion.txt.j2', 'torsion_mpc.txt.j2', 'verify.txt.j2',
)


class EnvironmentChecker:
    """环境依赖检查器"""

    def __init__(self, stream=None):
        self.system = platform.system()
        self.stream = stream or sys.stderr

    def _print(self, message: str = ''):
        print(message, file=self.stream)

    def check_python_version(self) -> Tuple[bool, str]:
        """检查 Python 版本（需要 >= 3.8）"""
        version = sys.version_info
        if version >= (3, 8):
            return True, f"Python {version.major}.{version.minor}.{version.micro}"
        return False, f"Python 版本过低: {version.major}.{version.minor} (需要 >= 3.8)"

    def check_package(self, name: str) -> Tuple[bool, str]:
        try:
            module = importlib.import_module(name)
        except ImportError:
            return False, f"{name} 未安装"
        version = getattr(module, '__version__', None)
        return True, f"{name} {version}" if version else name

    def check_templates(self) -> Tuple[bool, str]:
        available = set(ReportRenderer(TEMPLATE_DIR).template_names())
        missing = [t for t in REQUIRED_TEMPLATES if t not in available]
        if missing:
            return False, f"缺少报告模板: {', '.join(missing)}"
        return True, f"报告模板 {len(REQUIRED_TEMPLATES)} 个"

    def missing_packages(self) -> List[str]:
        return [name for name in REQUIRED_PACKAGES if not self.check_package(name)[0]]

    def get_install_instructions(self) -> str:
        pip = 'pip' if self.system == 'Windows' else 'pip3'
        return f"{pip} install -r requirements.txt"

    def run_all_checks(self, show_instructions: bool = True) -> bool:
        """
        运行所有环境检查

        Returns:
            所有检查是否通过
        """
        checks = [self.check_python_version]
        checks += [lambda name=name: self.check_package(name) for name in REQUIRED_PACKAGES]
        checks.append(self.check_templates)

        all_passed = True
        for check in checks:
            passed, message = check()
            if passed:
                self._print(f"  {Fore.GREEN}✓{Style.RESET_ALL} {message}")
            else:
                self._print(f"  {Fore.RED}✗{Style.RESET_ALL} {message}")
                all_passed = False

        missing = self.missing_packages()
        if missing and show_instructions:
            self._print(f"\n{Fore.YELLOW}安装指令:{Style.RESET_ALL}")
            self._print(f"  缺少: {', '.join(missing)}")
            self._print(f"    {self.get_install_instructions()}")

        self._print()
        return all_passed
