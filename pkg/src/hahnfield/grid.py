"""Lazily evaluated series on shifted finitely generated exponent grids.

A grid series has its support inside ``shift + <generators>`` where the
generators are strictly positive exponents of an archimedean group. Below
any bound such a grid has finitely many points, so truncation, pointwise
coefficients, ring operations and — the reason this type exists — field
inversion are all computable. Supports of order type beyond omega, and lex
exponent groups (whose grid slices can be infinite), stay out of reach by
design.

Coefficient functions must be pure. Values memoize computed coefficients
behind a lock, so concurrent readers observe as-if-pure behavior.
"""

from __future__ import annotations

import heapq
import threading
from bisect import bisect_left, bisect_right
from typing import Callable, Iterable, Optional, Tuple, Union

from .coefficients import Coefficient, CoefficientField
from .errors import (
    FieldMismatchError,
    GridSearchLimitError,
    GroupMismatchError,
    UnsupportedGroupError,
)
from .exponents import Exponent, ExponentGroup
from .series import FiniteSeries

DEFAULT_PROBE_CAP = 100_000


class _MonoidWalker:
    """Ascending enumeration of shift + <generators>, cached and shared."""

    def __init__(self, start: Exponent, generators: Tuple[Exponent, ...]):
        self._generators = generators
        self._heap = [start]
        self._seen = {start}
        self._emitted: list[Exponent] = []
        self._lock = threading.RLock()

    def _emit_next(self) -> Optional[Exponent]:
        if not self._heap:
            return None
        point = heapq.heappop(self._heap)
        self._emitted.append(point)
        for g in self._generators:
            succ = point + g
            if succ not in self._seen:
                self._seen.add(succ)
                heapq.heappush(self._heap, succ)
        return point

    def point_at(self, index: int) -> Optional[Exponent]:
        """The index-th smallest grid point, or None past the end."""
        with self._lock:
            while len(self._emitted) <= index:
                if self._emit_next() is None:
                    return None
            return self._emitted[index]

    def points(self, bound: Exponent, inclusive: bool = False) -> list[Exponent]:
        """All grid points < bound (<= bound when inclusive), ascending."""
        with self._lock:
            while self._heap:
                nxt = self._heap[0]
                if nxt > bound if inclusive else nxt >= bound:
                    break
                self._emit_next()
            cut = bisect_right(self._emitted, bound) if inclusive else bisect_left(self._emitted, bound)
            return self._emitted[:cut]

    def contains(self, point: Exponent) -> bool:
        with self._lock:
            if self._emitted and point <= self._emitted[-1]:
                i = bisect_left(self._emitted, point)
                return i < len(self._emitted) and self._emitted[i] == point
            pts = self.points(point, inclusive=True)
            return bool(pts) and pts[-1] == point

    @property
    def exhausted(self) -> bool:
        with self._lock:
            return not self._heap


class GridSeries:
    """Series with computable coefficients on a fixed grid."""

    def __init__(
        self,
        group: ExponentGroup,
        field: CoefficientField,
        shift: Exponent,
        generators: Iterable[Exponent],
        coeff_fn: Callable[[Exponent], Coefficient],
    ):
        if not group.archimedean:
            raise UnsupportedGroupError(
                f"lazy grid series need an archimedean group, not {group.selector}"
            )
        zero = group.zero()
        gens = sorted(set(group.element(g) for g in generators))
        if any(not (g > zero) for g in gens):
            raise ValueError("grid generators must be strictly positive")
        self.group = group
        self.field = field
        self.shift = group.element(shift)
        self.generators = tuple(gens)
        self._coeff_fn = coeff_fn
        self._memo: dict[Exponent, Coefficient] = {}
        self._memo_lock = threading.Lock()
        self._walker = _MonoidWalker(self.shift, self.generators)

    # -- construction --------------------------------------------------

    @classmethod
    def from_finite(cls, f: FiniteSeries) -> "GridSeries":
        support = f.support()
        if support:
            shift = support[0]
            gens = [e - shift for e in support[1:]]
        else:
            shift = f.group.zero()
            gens = []
        table = dict(f.terms)
        zero = f.field.zero()
        return cls(f.group, f.field, shift, gens, lambda e: table.get(e, zero))

    @classmethod
    def zero(cls, group: ExponentGroup, field: CoefficientField) -> "GridSeries":
        return cls.from_finite(FiniteSeries.zero(group, field))

    @classmethod
    def one(cls, group: ExponentGroup, field: CoefficientField) -> "GridSeries":
        return cls.from_finite(FiniteSeries.one(group, field))

    # -- coefficients ----------------------------------------------------

    def coefficient_at(self, gamma: Exponent) -> Coefficient:
        """Exact coefficient; zero off-grid; memoized on-grid."""
        gamma = self.group.element(gamma)
        if not self._walker.contains(gamma):
            return self.field.zero()
        with self._memo_lock:
            if gamma in self._memo:
                return self._memo[gamma]
        value = self._coeff_fn(gamma)
        with self._memo_lock:
            return self._memo.setdefault(gamma, value)

    def truncate_below(self, bound: Exponent) -> FiniteSeries:
        """Exact finite series of all terms with exponent < bound."""
        bound = self.group.element(bound)
        terms = []
        for point in self._walker.points(bound):
            c = self.coefficient_at(point)
            if c:
                terms.append((point, c))
        return FiniteSeries(self.group, self.field, tuple(terms))

    def first_term(
        self,
        below: Optional[Exponent] = None,
        max_probes: int = DEFAULT_PROBE_CAP,
    ) -> Optional[Tuple[Exponent, Coefficient]]:
        """Leading (exponent, coefficient), walking the grid in order.

        Returns None when the searched slice holds no nonzero term: the
        whole grid if the walk exhausted (the series is zero), else the
        part below ``below``. An unbounded search over a grid that keeps
        yielding zeros gives up after max_probes points.
        """
        index = 0
        while True:
            point = self._walker.point_at(index)
            if point is None:
                return None
            if below is not None and point >= below:
                return None
            c = self.coefficient_at(point)
            if c:
                return point, c
            index += 1
            if below is None and index >= max_probes:
                raise GridSearchLimitError(
                    f"no nonzero coefficient in the first {max_probes} grid points; "
                    "the series may be zero — bound the search"
                )

    @property
    def walk_exhausted(self) -> bool:
        return self._walker.exhausted

    def eq_below(self, other: "GridSeries", bound: Exponent) -> bool:
        """Decidable equality: compare truncations below the bound."""
        return self.truncate_below(bound) == other.truncate_below(bound)

    # -- ring operations -------------------------------------------------

    def _check(self, other: "GridSeries") -> None:
        if other.group != self.group:
            raise GroupMismatchError(
                f"mixed exponent groups {self.group.selector} / {other.group.selector}"
            )
        if other.field != self.field:
            raise FieldMismatchError(
                f"mixed coefficient fields {self.field.selector} / {other.field.selector}"
            )

    def _union_grid(self, other: "GridSeries") -> Tuple[Exponent, set]:
        shift = min(self.shift, other.shift)
        gens = set(self.generators) | set(other.generators)
        for s in (self, other):
            if s.shift != shift:
                gens.add(s.shift - shift)
        return shift, gens

    def __add__(self, other: "GridSeries") -> "GridSeries":
        if isinstance(other, FiniteSeries):
            other = GridSeries.from_finite(other)
        if not isinstance(other, GridSeries):
            return NotImplemented
        self._check(other)
        shift, gens = self._union_grid(other)
        return GridSeries(
            self.group,
            self.field,
            shift,
            gens,
            lambda e: self.coefficient_at(e) + other.coefficient_at(e),
        )

    __radd__ = __add__

    def __sub__(self, other: "GridSeries") -> "GridSeries":
        if isinstance(other, FiniteSeries):
            other = GridSeries.from_finite(other)
        return self + (-other)

    def __rsub__(self, other: "GridSeries") -> "GridSeries":
        return (-self) + other

    def __neg__(self) -> "GridSeries":
        return GridSeries(
            self.group, self.field, self.shift, self.generators,
            lambda e: -self.coefficient_at(e),
        )

    def scale(self, coeff: Coefficient) -> "GridSeries":
        coeff = self.field.element(coeff)
        return GridSeries(
            self.group, self.field, self.shift, self.generators,
            lambda e: self.coefficient_at(e) * coeff,
        )

    def __mul__(self, other: "GridSeries") -> "GridSeries":
        if isinstance(other, FiniteSeries):
            other = GridSeries.from_finite(other)
        if not isinstance(other, GridSeries):
            return NotImplemented
        self._check(other)
        shift = self.shift + other.shift
        gens = set(self.generators) | set(other.generators)

        def coeff(e: Exponent) -> Coefficient:
            # finite convolution: x runs over this grid, e - x must reach
            # at least the other factor's shift
            total = self.field.zero()
            for x in self._walker.points(e - other.shift, inclusive=True):
                cx = self.coefficient_at(x)
                if cx:
                    cy = other.coefficient_at(e - x)
                    if cy:
                        total = total + cx * cy
            return total

        return GridSeries(self.group, self.field, shift, gens, coeff)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"GridSeries({self.group.selector}, {self.field.selector}, shift={self.shift}, gens=[{gens}])"


def invert(f: Union[FiniteSeries, GridSeries]) -> GridSeries:
    """Multiplicative inverse as a grid series.

    Writes f = c*t^v*(1 + eps) with v(eps) > 0 and evaluates the geometric
    sum over (-eps) through the equivalent convolution recurrence; every
    coefficient is a finite sum because the grid's positive generators
    bound how many steps fit below any exponent. The defining identity
    f * invert(f) = 1 holds exactly below every bound.
    """
    if isinstance(f, FiniteSeries):
        if f.is_zero:
            raise ZeroDivisionError("inverse of the zero series")
        source = GridSeries.from_finite(f)
        lead_exp, lead_coeff = f.terms[0]
        gens = set(source.generators)
    else:
        lead = f.first_term()
        if lead is None:
            raise ZeroDivisionError("series is zero on its entire grid")
        lead_exp, lead_coeff = lead
        source = f
        gens = set(f.generators)
        if lead_exp != f.shift:
            # leading term sits above the declared shift: the inverse's
            # support lives on differences m - m*, which the original
            # generators need not span; one walked slice past the lead
            # closes the gap (any longer difference peels off a generator)
            horizon = lead_exp + max(f.generators)
            for point in f._walker.points(horizon, inclusive=True):
                if point > lead_exp:
                    gens.add(point - lead_exp)

    group, field = source.group, source.field
    inv_lead = lead_coeff.inverse()
    shift = -lead_exp

    def coeff(gamma: Exponent) -> Coefficient:
        if gamma == shift:
            return inv_lead
        # fill smaller grid points first so the recurrence below always
        # hits the memo (keeps recursion depth flat for deep queries)
        for point in result._walker.points(gamma):
            result.coefficient_at(point)
        # from (f * result)(gamma + lead_exp) = 0:
        total = field.zero()
        x_bound = gamma + lead_exp + lead_exp
        for x in source._walker.points(x_bound, inclusive=True):
            if x <= lead_exp:
                continue
            cx = source.coefficient_at(x)
            if cx:
                cy = result.coefficient_at(gamma + lead_exp - x)
                if cy:
                    total = total + cx * cy
        return -(inv_lead * total)

    result = GridSeries(group, field, shift, gens, coeff)
    return result


def lift(value: Union[FiniteSeries, GridSeries]) -> GridSeries:
    return value if isinstance(value, GridSeries) else GridSeries.from_finite(value)
