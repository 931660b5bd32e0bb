"""Canonical finite-support series and the truncation calculus.

A series is a strictly increasing tuple of (exponent, nonzero coefficient)
pairs; the empty tuple is the unique zero. All operations are exact and
pure, so values are freely shareable. The calculus implemented here —
truncation strictly below a cut, support, valuation, leading term, the
per-exponent term extraction, and monomial inversion — is what both the
axiom checker and the embedding engine are built on.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Tuple

from .coefficients import Coefficient, CoefficientField
from .errors import FieldMismatchError, GroupMismatchError, NotInvertibleError
from .exponents import INFINITY, Exponent, ExponentGroup, ExponentOrInf

Term = Tuple[Exponent, Coefficient]


@dataclass(frozen=True)
class FiniteSeries:
    group: ExponentGroup
    field: CoefficientField
    terms: Tuple[Term, ...]

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, group: ExponentGroup, field: CoefficientField) -> "FiniteSeries":
        return cls(group, field, ())

    @classmethod
    def one(cls, group: ExponentGroup, field: CoefficientField) -> "FiniteSeries":
        return cls.monomial(group.zero(), field.one())

    @classmethod
    def constant(cls, group: ExponentGroup, coeff: Coefficient) -> "FiniteSeries":
        return cls.monomial(group.zero(), coeff)

    @classmethod
    def monomial(cls, exponent: Exponent, coeff: Coefficient) -> "FiniteSeries":
        if not coeff:
            return cls(exponent.group, coeff.field, ())
        return cls(exponent.group, coeff.field, ((exponent, coeff),))

    @classmethod
    def from_terms(
        cls,
        group: ExponentGroup,
        field: CoefficientField,
        raw: Iterable[Tuple[Exponent, Coefficient]],
    ) -> "FiniteSeries":
        """Canonicalize: merge duplicate exponents, drop zeros, sort."""
        acc: dict[Exponent, Coefficient] = {}
        for exponent, coeff in raw:
            if exponent.group != group:
                raise GroupMismatchError(
                    f"term exponent from {exponent.group.selector}, series over {group.selector}"
                )
            if coeff.field != field:
                raise FieldMismatchError(
                    f"term coefficient from {coeff.field.selector}, series over {field.selector}"
                )
            prev = acc.get(exponent)
            acc[exponent] = coeff if prev is None else prev + coeff
        terms = tuple((e, c) for e, c in sorted(acc.items(), key=lambda t: t[0]) if c)
        return cls(group, field, terms)

    # -- basic queries -----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def valuation(self) -> ExponentOrInf:
        """Least support exponent; INFINITY for the zero series."""
        return self.terms[0][0] if self.terms else INFINITY

    def support(self) -> Tuple[Exponent, ...]:
        """The support, ascending. Coincides with the abstract sp set."""
        return tuple(e for e, _ in self.terms)

    def coefficient_at(self, gamma: Exponent) -> Coefficient:
        exps = [e for e, _ in self.terms]
        i = bisect_left(exps, gamma)
        if i < len(exps) and exps[i] == gamma:
            return self.terms[i][1]
        return self.field.zero()

    # -- truncation calculus -----------------------------------------

    def truncate(self, alpha: Exponent) -> "FiniteSeries":
        """Keep exactly the terms with exponent strictly below alpha."""
        if alpha.group != self.group:
            raise GroupMismatchError("truncation cut from a different group")
        exps = [e for e, _ in self.terms]
        return FiniteSeries(self.group, self.field, self.terms[: bisect_left(exps, alpha)])

    def leading_term(self) -> "FiniteSeries":
        """The least-exponent term as a series; zero for zero input."""
        if not self.terms:
            return self
        return FiniteSeries(self.group, self.field, self.terms[:1])

    def term_at(self, gamma: Exponent) -> "FiniteSeries":
        """The term of the series at one exponent (zero if absent)."""
        return FiniteSeries.monomial(gamma, self.coefficient_at(gamma))

    def is_monomial(self) -> bool:
        """True iff the support is a singleton."""
        return len(self.terms) == 1

    def invert_monomial(self) -> "FiniteSeries":
        """Inverse of a single-term series; anything else has no
        finite-support inverse and raises NotInvertibleError."""
        if not self.is_monomial():
            raise NotInvertibleError(
                "only single-term series invert inside finite supports"
            )
        (e, c), = self.terms
        return FiniteSeries.monomial(-e, c.inverse())

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "FiniteSeries") -> None:
        if other.group != self.group:
            raise GroupMismatchError(
                f"mixed exponent groups {self.group.selector} / {other.group.selector}"
            )
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed coefficient fields {self.field.selector} / {other.field.selector}"
            )

    def __add__(self, other: "FiniteSeries") -> "FiniteSeries":
        if not isinstance(other, FiniteSeries):
            return NotImplemented
        self._check(other)
        return FiniteSeries.from_terms(self.group, self.field, self.terms + other.terms)

    def __sub__(self, other: "FiniteSeries") -> "FiniteSeries":
        return self + (-other)

    def __neg__(self) -> "FiniteSeries":
        return FiniteSeries(self.group, self.field, tuple((e, -c) for e, c in self.terms))

    def scale(self, coeff: Coefficient) -> "FiniteSeries":
        coeff = self.field.element(coeff)
        if not coeff:
            return FiniteSeries.zero(self.group, self.field)
        return FiniteSeries(self.group, self.field, tuple((e, c * coeff) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(self.field.element(other))
        if not isinstance(other, FiniteSeries):
            return NotImplemented
        self._check(other)
        # exact convolution: accumulate by exponent sum, then sort
        acc: dict[Exponent, Coefficient] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = ea + eb
                prod = ca * cb
                prev = acc.get(e)
                acc[e] = prod if prev is None else prev + prod
        terms = tuple((e, c) for e, c in sorted(acc.items(), key=lambda t: t[0]) if c)
        return FiniteSeries(self.group, self.field, terms)

    __rmul__ = __mul__

    # -- serialization & rendering -----------------------------------

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.selector,
            "coeff": self.field.selector,
            "terms": [[str(e), str(c)] for e, c in self.terms],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteSeries":
        group = ExponentGroup.from_selector(data["group"])
        field = CoefficientField.from_selector(data["coeff"])
        raw = [(group.parse(e), field.parse(c)) for e, c in data["terms"]]
        return cls.from_terms(group, field, raw)

    def _monomial_text(self, exponent: Exponent) -> str:
        if self.group.kind == "qlex":
            return f"t^{exponent}"  # exponent text already carries parens
        v = exponent.value
        if v == 1:
            return "t"
        if v == int(v) and v > 0:
            return f"t^{int(v)}"
        return f"t^({exponent})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exponent, coeff in self.terms:
            negative = self.field.kind == "q" and coeff.value < 0
            mag = -coeff if negative else coeff
            if exponent == self.group.zero():
                body = str(mag)
            elif mag == self.field.one():
                body = self._monomial_text(exponent)
            else:
                body = f"{mag}*{self._monomial_text(exponent)}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FiniteSeries({self.group.selector}, {self.field.selector}, {self})"


# -- dominance relations derived from the valuation --------------------


def dominated_by(f: FiniteSeries, g: FiniteSeries) -> bool:
    """v(f) >= v(g): f grows no faster than g."""
    return f.valuation() >= g.valuation()


def strictly_dominated_by(f: FiniteSeries, g: FiniteSeries) -> bool:
    """v(f) > v(g): f is negligible next to g."""
    return f.valuation() > g.valuation()


def same_magnitude(f: FiniteSeries, g: FiniteSeries) -> bool:
    """Equal valuations (an equivalence on nonzero series)."""
    return f.valuation() == g.valuation()


def asymptotic_to(f: FiniteSeries, g: FiniteSeries) -> bool:
    """f - g is negligible next to f (asymptotic equivalence, nonzero f, g)."""
    return strictly_dominated_by(f - g, f)
