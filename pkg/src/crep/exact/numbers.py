# Copyright (c) 2025 MiroMind
# This source code is licensed under the MIT License.

"""
精确数：有理数与高斯有理数。

有理数直接使用 fractions.Fraction；高斯有理数 a + b·i 的实部、虚部均为 Fraction。
"""

import re
from fractions import Fraction
from typing import Union

Rat = Fraction

_ZERO = Fraction(0)

_GAUSS_PATTERN = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*\*?\s*i)?\s*$"
)


class GaussRat:
    """高斯有理数，不可变。"""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> None:
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat 不可变")

    # ---- 构造 ----
    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """解析 "a/b+c/d*i" 形式的字符串。"""
        text = text.strip().replace(" ", "")
        if text in ("i", "+i"):
            return I
        if text == "-i":
            return -I
        match = _GAUSS_PATTERN.match(text)
        if not match or not text:
            raise ValueError(f"无法解析高斯有理数: {text!r}")
        real = Fraction(match.group("re")) if match.group("re") else _ZERO
        imag = _ZERO
        if match.group("sign"):
            magnitude = Fraction(match.group("im")) if match.group("im") else Fraction(1)
            imag = magnitude if match.group("sign") == "+" else -magnitude
        return cls(real, imag)

    # ---- 基本运算 ----
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussRat(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRat(a * c, _ZERO)
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c, d = other.re, other.im
        norm = c * c + d * d
        if not norm:
            raise ZeroDivisionError("高斯有理数除以 0")
        a, b = self.re, self.im
        return GaussRat((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    # ---- 比较与哈希 ----
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussRat({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}*i"


def _coerce(value) -> GaussRat:
    if type(value) is GaussRat:
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRat(value)
    return NotImplemented


def as_gauss(value) -> GaussRat:
    """将 int / Fraction / GaussRat 统一为 GaussRat。"""
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"无法转换为高斯有理数: {value!r}")
    return coerced


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)
