"""Exact coefficient fields: arbitrary-precision rationals and GF(p).

Every value is canonical (Fractions in lowest terms, GF(p) representatives
in [0, p)). Arithmetic never rounds; the identities verified elsewhere in
the package are exact, so floating point is banned throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import FieldMismatchError, ParseError

MAX_PRIME = 2**31

_GF_SELECTOR_RE = re.compile(r"^gf:(\d+)$")
_RAT_TEXT_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3,215,031,751.

    Bases {2, 3, 5, 7} are a proven witness set on that range, which
    covers the package's p < 2**31 modulus limit.
    """
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Descriptor for a coefficient field: rationals or a prime field."""

    kind: str  # "q" | "gf"
    p: Optional[int] = None

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls("q")

    @classmethod
    def prime_field(cls, p: int) -> "CoefficientField":
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME:
            raise ValueError(f"modulus must be an int in [2, 2**31), got {p!r}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls("gf", p)

    @classmethod
    def from_selector(cls, token: str) -> "CoefficientField":
        token = token.strip().lower()
        if token == "q":
            return cls.rationals()
        m = _GF_SELECTOR_RE.match(token)
        if m:
            return cls.prime_field(int(m.group(1)))
        raise ValueError(f"unknown coefficient field selector {token!r}")

    @property
    def selector(self) -> str:
        return "q" if self.kind == "q" else f"gf:{self.p}"

    def zero(self) -> "Coefficient":
        return self.element(0)

    def one(self) -> "Coefficient":
        return self.element(1)

    def element(self, raw) -> "Coefficient":
        if isinstance(raw, Coefficient):
            if raw.field != self:
                raise FieldMismatchError(f"coefficient from {raw.field.selector} used in {self.selector}")
            return raw
        if self.kind == "q":
            return Coefficient(self, Fraction(raw))
        if isinstance(raw, Fraction):
            if raw.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return Coefficient(self, raw.numerator * pow(raw.denominator, self.p - 2, self.p) % self.p)
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise TypeError(f"integer residue expected, got {raw!r}")
        return Coefficient(self, raw % self.p)

    def parse(self, text: str, offset: int = 0) -> "Coefficient":
        text = text.replace("−", "-").strip()
        if not _RAT_TEXT_RE.match(text):
            raise ParseError(f"malformed coefficient {text!r}", offset)
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}", offset) from None
        return self.element(value)


@dataclass(frozen=True)
class Coefficient:
    """One field element; supports exact +, -, *, /, inversion."""

    field: CoefficientField
    value: Union[Fraction, int]

    def _check(self, other: "Coefficient") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed coefficient fields {self.field.selector} / {other.field.selector}"
            )

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: "Coefficient"):
        if not isinstance(other, Coefficient):
            return NotImplemented
        self._check(other)
        v = self.value + other.value
        return Coefficient(self.field, v if self.field.kind == "q" else v % self.field.p)

    def __sub__(self, other: "Coefficient"):
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Coefficient":
        v = -self.value
        return Coefficient(self.field, v if self.field.kind == "q" else v % self.field.p)

    def __mul__(self, other: "Coefficient"):
        if not isinstance(other, Coefficient):
            return NotImplemented
        self._check(other)
        v = self.value * other.value
        return Coefficient(self.field, v if self.field.kind == "q" else v % self.field.p)

    def __truediv__(self, other: "Coefficient"):
        if not isinstance(other, Coefficient):
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def inverse(self) -> "Coefficient":
        if not self:
            raise ZeroDivisionError("inverse of zero coefficient")
        if self.field.kind == "q":
            return Coefficient(self.field, 1 / self.value)
        return Coefficient(self.field, pow(self.value, self.field.p - 2, self.field.p))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Coefficient({self.field.selector}, {self})"
