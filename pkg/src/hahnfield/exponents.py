"""Computable ordered abelian exponent groups.

Three group kinds are supported: the integers ``z``, the rationals ``q``,
and lexicographic rational tuples ``qnlex:n`` (``q2lex`` for n = 2). The
first two are archimedean; the lex groups are not, which gates the lazy
grid-series machinery elsewhere in the package. Values are exact: Python
ints, ``fractions.Fraction`` (auto-canonical), and tuples of Fractions.

The valuation codomain adjoins a distinguished top element ``INFINITY``
that compares strictly greater than every exponent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import GroupMismatchError, ParseError

_SELECTOR_RE = re.compile(r"^(z|q|q2lex|qnlex:(\d+))$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def _normalize_minus(text: str) -> str:
    # tolerate the typographic minus sign on input; output is always ASCII
    return text.replace("−", "-")


@dataclass(frozen=True)
class ExponentGroup:
    """Descriptor for a concrete exponent group (the value group)."""

    kind: str  # "z" | "q" | "qlex"
    rank: int = 1

    @classmethod
    def integers(cls) -> "ExponentGroup":
        return cls("z")

    @classmethod
    def rationals(cls) -> "ExponentGroup":
        return cls("q")

    @classmethod
    def rational_lex(cls, rank: int) -> "ExponentGroup":
        if rank < 2:
            raise ValueError("lexicographic groups need rank >= 2")
        return cls("qlex", rank)

    @classmethod
    def from_selector(cls, token: str) -> "ExponentGroup":
        m = _SELECTOR_RE.match(token.strip().lower())
        if not m:
            raise ValueError(f"unknown group selector {token!r}")
        if m.group(1) == "z":
            return cls.integers()
        if m.group(1) == "q":
            return cls.rationals()
        if m.group(1) == "q2lex":
            return cls.rational_lex(2)
        return cls.rational_lex(int(m.group(2)))

    @property
    def selector(self) -> str:
        if self.kind == "z":
            return "z"
        if self.kind == "q":
            return "q"
        return "q2lex" if self.rank == 2 else f"qnlex:{self.rank}"

    @property
    def archimedean(self) -> bool:
        return self.kind in ("z", "q")

    def zero(self) -> "Exponent":
        if self.kind == "z":
            return Exponent(self, 0)
        if self.kind == "q":
            return Exponent(self, Fraction(0))
        return Exponent(self, (Fraction(0),) * self.rank)

    def unit(self) -> "Exponent":
        """Canonical positive step: 1, or the least positive basis vector."""
        if self.kind == "z":
            return Exponent(self, 1)
        if self.kind == "q":
            return Exponent(self, Fraction(1))
        return Exponent(self, (Fraction(0),) * (self.rank - 1) + (Fraction(1),))

    def element(self, raw) -> "Exponent":
        """Coerce a raw int/Fraction/sequence into a canonical exponent."""
        if isinstance(raw, Exponent):
            if raw.group != self:
                raise GroupMismatchError(f"exponent from {raw.group.selector} used in {self.selector}")
            return raw
        if self.kind == "z":
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise TypeError(f"integer exponent expected, got {raw!r}")
            return Exponent(self, raw)
        if self.kind == "q":
            return Exponent(self, Fraction(raw))
        if not isinstance(raw, (tuple, list)) or len(raw) != self.rank:
            raise TypeError(f"{self.rank}-tuple exponent expected, got {raw!r}")
        return Exponent(self, tuple(Fraction(x) for x in raw))

    def parse(self, text: str, offset: int = 0) -> "Exponent":
        """Parse the canonical text form; raise ParseError on bad input.

        ``offset`` shifts reported error positions (for callers embedding
        exponent literals inside a larger expression).
        """
        text = _normalize_minus(text)
        stripped = text.strip()
        if self.kind == "qlex":
            inner = stripped
            if inner.startswith("(") and inner.endswith(")"):
                inner = inner[1:-1]
            parts = inner.split(",")
            if len(parts) != self.rank:
                raise ParseError(
                    f"exponent for {self.selector} needs {self.rank} components", offset
                )
            comps = []
            for part in parts:
                comps.append(self._parse_rational(part.strip(), offset + text.find(part)))
            return Exponent(self, tuple(comps))
        if self.kind == "z":
            if not _INT_RE.match(stripped):
                raise ParseError(f"malformed integer exponent {stripped!r}", offset)
            return Exponent(self, int(stripped))
        return Exponent(self, self._parse_rational(stripped, offset))

    @staticmethod
    def _parse_rational(text: str, offset: int) -> Fraction:
        if not _RAT_RE.match(text):
            raise ParseError(f"malformed rational {text!r}", offset)
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}", offset) from None


@total_ordering
@dataclass(frozen=True)
class Exponent:
    """One element of an ExponentGroup; immutable, totally ordered."""

    group: ExponentGroup
    value: Union[int, Fraction, tuple]

    def _check(self, other: "Exponent") -> None:
        if not isinstance(other, Exponent):
            raise TypeError(f"exponent expected, got {other!r}")
        if other.group != self.group:
            raise GroupMismatchError(
                f"mixed exponent groups {self.group.selector} / {other.group.selector}"
            )

    def __add__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        if self.group.kind == "qlex":
            return Exponent(self.group, tuple(a + b for a, b in zip(self.value, other.value)))
        return Exponent(self.group, self.value + other.value)

    def __sub__(self, other: "Exponent") -> "Exponent":
        return self + (-other)

    def __neg__(self) -> "Exponent":
        if self.group.kind == "qlex":
            return Exponent(self.group, tuple(-a for a in self.value))
        return Exponent(self.group, -self.value)

    def __lt__(self, other) -> bool:
        if other is INFINITY:
            return True
        self._check(other)
        return self.value < other.value  # tuples compare lexicographically

    def is_positive(self) -> bool:
        return self > self.group.zero()

    def __str__(self) -> str:
        if self.group.kind == "qlex":
            return "(" + ", ".join(str(c) for c in self.value) + ")"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Exponent({self.group.selector}, {self})"


class _Infinity:
    """The adjoined top element of the valuation codomain (a singleton)."""

    __slots__ = ()

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is INFINITY

    def __gt__(self, other) -> bool:
        if other is INFINITY:
            return False
        if isinstance(other, Exponent):
            return True
        return NotImplemented

    def __ge__(self, other) -> bool:
        if other is INFINITY or isinstance(other, Exponent):
            return True
        return NotImplemented

    def __str__(self) -> str:
        return "inf"

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

ExponentOrInf = Union[Exponent, _Infinity]


def format_valuation(v: ExponentOrInf) -> str:
    return "inf" if v is INFINITY else str(v)
