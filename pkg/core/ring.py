"""
剩余类环 Z_m 的算术

提供 RingSpec（环描述，含可选的链环结构 Z_{p^e}）、RingElem（规范剩余）、
单位判定、求逆以及模 γ 约化到剩余域 F_p。
所有对象构造后不可变，可在线程间共享。
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional, Tuple, Union

from sympy import factorint

from .errors import NotAUnitError, RingError, RingMismatchError

# 模数上限（64 位机器字）
MAX_MODULUS = 2 ** 64


@dataclass(frozen=True)
class ChainInfo:
    """链环 Z_{p^e} 的结构：极大理想由 γ = p 生成，幂零指数为 e"""
    p: int
    e: int
    gamma: int


@dataclass(frozen=True)
class RingSpec:
    """环 Z_m 的描述，相等性只看模数"""
    modulus: int
    chain: Optional[ChainInfo] = field(default=None, compare=False)

    @property
    def is_chain(self) -> bool:
        return self.chain is not None

    @property
    def is_field(self) -> bool:
        return self.chain is not None and self.chain.e == 1

    @property
    def residue_field(self) -> Optional['RingSpec']:
        """剩余域 R/<γ> = F_p（仅链环有）"""
        if self.chain is None:
            return None
        return ring_new(self.chain.p)

    def require_chain(self) -> ChainInfo:
        if self.chain is None:
            raise RingError(f"Z_{self.modulus} is not a chain ring (modulus is not a prime power)")
        return self.chain

    def elem(self, value: int) -> 'RingElem':
        return RingElem(value, self)

    def __str__(self) -> str:
        return f"Z_{self.modulus}"


@lru_cache(maxsize=None)
def ring_new(m: int) -> RingSpec:
    """
    构造 Z_m

    Args:
        m: 模数，2 <= m < 2^64

    Returns:
        RingSpec；m 为素数幂时带链环结构

    Example:
        >>> ring_new(25).chain
        ChainInfo(p=5, e=2, gamma=5)
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise RingError(f"modulus must be an integer, got {m!r}")
    if m < 2:
        raise RingError(f"modulus must be >= 2, got {m}")
    if m >= MAX_MODULUS:
        raise RingError(f"modulus {m} does not fit in 64 bits")

    factors = factorint(m)
    if len(factors) == 1:
        (p, e), = factors.items()
        return RingSpec(m, ChainInfo(p=int(p), e=int(e), gamma=int(p) % m))
    return RingSpec(m)


@dataclass(frozen=True)
class RingElem:
    """Z_m 中的元素，value 总是规范剩余 [0, m)"""
    value: int
    ring: RingSpec

    def __post_init__(self):
        object.__setattr__(self, 'value', self.value % self.ring.modulus)

    def _coerce(self, other: Union['RingElem', int]) -> int:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return other
        raise TypeError(f"unsupported operand for ring arithmetic: {other!r}")

    def __add__(self, other):
        return RingElem(self.value + self._coerce(other), self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return RingElem(self.value - self._coerce(other), self.ring)

    def __rsub__(self, other):
        return RingElem(self._coerce(other) - self.value, self.ring)

    def __mul__(self, other):
        return RingElem(self.value * self._coerce(other), self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(-self.value, self.ring)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """返回 (g, s, t)，满足 g = gcd(a, b) = s*a + t*b"""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def is_unit(r: RingElem) -> bool:
    """r 是单位当且仅当 gcd(r, m) = 1"""
    return gcd(r.value, r.ring.modulus) == 1


def inv(r: RingElem) -> RingElem:
    """扩展欧几里得求逆，非单位抛 NotAUnitError"""
    if not is_unit(r):
        raise NotAUnitError(f"{r.value} is not a unit in {r.ring}")
    _, s, _ = xgcd(r.value, r.ring.modulus)
    return RingElem(s, r.ring)


def unit_normalizer(a: int, m: int) -> int:
    """
    返回单位 c，使 c*a ≡ gcd(a, m) (mod m)

    Howell 形式用它把主元规范为 m 的因子。
    """
    a %= m
    if a == 0:
        return 1
    g = gcd(a, m)
    m1 = m // g
    if m1 == 1:
        return 1
    c = pow((a // g) % m1, -1, m1)
    while gcd(c, m) != 1:
        c += m1
    return c


def reduce_mod_gamma(r: RingElem, ring: Optional[RingSpec] = None) -> RingElem:
    """把链环元素约化到剩余域 F_p"""
    ring = ring or r.ring
    if r.ring != ring:
        raise RingMismatchError(f"element of {r.ring} reduced as an element of {ring}")
    chain = ring.require_chain()
    return RingElem(r.value % chain.p, ring.residue_field)
