"""Exact base fields: the rationals and prime fields GF(p).

Scalars are plain Python values so that the hot loops in :mod:`whqlab.tensor`
can use native arithmetic:

* over Q a scalar is an ``int`` or a :class:`fractions.Fraction` (always in
  lowest terms, integral values are demoted to ``int``);
* over GF(p) a scalar is an ``int`` in ``range(p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

_MINUS = "−"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A base field. ``p is None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __str__(self):
        return self.name

    # -- arithmetic -------------------------------------------------------

    def normalize(self, x) -> Scalar:
        if self.p is not None:
            return int(x) % self.p
        if type(x) is int:
            return x
        x = Fraction(x)
        if x.denominator == 1:
            return int(x.numerator)
        return x

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(int(x), self.p - 2, self.p)
        return self.normalize(Fraction(1) / x)

    def neg(self, x: Scalar) -> Scalar:
        return self.normalize(-x)

    # -- serialization ----------------------------------------------------

    def parse(self, text: str | int) -> Scalar:
        """Parse ``"3"``, ``"-3/7"``, ``"−3/7"`` or ``"5 mod 11"``."""
        if isinstance(text, int):
            return self.normalize(text)
        s = str(text).strip().replace(_MINUS, "-")
        m = re.fullmatch(r"(.+?)\s*mod\s*(\d+)", s)
        if m:
            s, mod = m.group(1).strip(), int(m.group(2))
            if self.p != mod:
                raise ValueError(f"scalar {text!r} is not in {self.name}")
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {text!r}") from exc
        if self.p is not None:
            if value.denominator % self.p == 0:
                raise ValueError(f"scalar {text!r}: denominator vanishes in {self.name}")
            return (value.numerator * pow(value.denominator, self.p - 2, self.p)) % self.p
        return self.normalize(value)

    def format(self, x: Scalar) -> str:
        if self.p is not None:
            return f"{int(x) % self.p} mod {self.p}"
        return str(x)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        s = name.strip()
        if s in ("Q", "QQ", "rationals"):
            return cls()
        m = re.fullmatch(r"(?:GF|F)\(?\s*(\d+)\s*\)?", s)
        if m:
            return cls(int(m.group(1)))
        raise ValueError(f"unknown field {name!r}")


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
