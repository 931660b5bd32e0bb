"""The abstract truncation-structure interface and its built-in models.

A truncation structure packages the field operations of a valued field F
with a lift of the residue field, a truncation map, a compatible family
of distinguished monomials, and a support probe. The checker in
:mod:`hahnfield.checker` verifies the defining axioms and derived lemmas
against any instance of this interface; the conforming model is the
finite-support series field fragment, and four deliberately broken
mutants serve as negative controls for the checker itself.
"""

from __future__ import annotations

from .coefficients import Coefficient, CoefficientField
from .errors import ResidueUndefinedError
from .exponents import INFINITY, Exponent, ExponentGroup, ExponentOrInf
from .grid import GridSeries, invert as grid_invert, lift as grid_lift
from .series import FiniteSeries


class TruncStructure:
    """Operations a structure instance must provide.

    Methods may be partial (raise) where the carrier cannot represent a
    result — e.g. finite-support models invert only monomials. The
    checker records thrown operations as failures with context instead
    of crashing, and the embedding engine only ever inverts the
    distinguished monomials.
    """

    name: str = "abstract"
    #: checks may run concurrently only if an instance declares it safe
    concurrency_safe: bool = False
    #: sp_probe returns exactly sp(f) (False would mean: a finite superset)
    sp_probe_exact: bool = True

    def __init__(self, group: ExponentGroup, field: CoefficientField):
        self.group = group
        self.field = field

    # field fragment ---------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def constant(self, c: Coefficient):
        """Embedding of the coefficient field into F."""
        raise NotImplementedError

    def add(self, f, g):
        raise NotImplementedError

    def neg(self, f):
        raise NotImplementedError

    def sub(self, f, g):
        return self.add(f, self.neg(g))

    def mul(self, f, g):
        raise NotImplementedError

    def inv(self, f):
        raise NotImplementedError

    def scalar_mul(self, c: Coefficient, f):
        return self.mul(self.constant(c), f)

    def equal(self, f, g) -> bool:
        return f == g

    def is_zero(self, f) -> bool:
        return self.equal(f, self.zero())

    # valuation-theoretic data -----------------------------------------
    def value(self, f) -> ExponentOrInf:
        raise NotImplementedError

    def value_below(self, f, bound: Exponent):
        """Valuation when the structure can compute it outright.

        Lazy carriers override this to search only below ``bound`` and
        return None when the valuation cannot be pinned down there.
        """
        return self.value(f)

    def residue(self, f) -> Coefficient:
        raise NotImplementedError

    def trunc(self, f, alpha: Exponent):
        raise NotImplementedError

    def tau(self, gamma: Exponent):
        raise NotImplementedError

    def sp_probe(self, f) -> tuple:
        raise NotImplementedError

    def render(self, f) -> str:
        return str(f)


class HahnModel(TruncStructure):
    """The conforming model: finite-support series with their own
    truncation and the plain monomial family. This is the motivating
    example every axiom was read off from, so the checker must pass it."""

    name = "hahn"

    def zero(self) -> FiniteSeries:
        return FiniteSeries.zero(self.group, self.field)

    def one(self) -> FiniteSeries:
        return FiniteSeries.one(self.group, self.field)

    def constant(self, c) -> FiniteSeries:
        return FiniteSeries.constant(self.group, self.field.element(c))

    def add(self, f, g):
        return f + g

    def neg(self, f):
        return -f

    def mul(self, f, g):
        return f * g

    def inv(self, f):
        return f.invert_monomial()

    def value(self, f) -> ExponentOrInf:
        return f.valuation()

    def residue(self, f) -> Coefficient:
        v = f.valuation()
        if v < self.group.zero():
            raise ResidueUndefinedError(f"residue of negative-valuation element {f}")
        return f.coefficient_at(self.group.zero())

    def trunc(self, f, alpha: Exponent):
        return f.truncate(alpha)

    def tau(self, gamma: Exponent) -> FiniteSeries:
        return FiniteSeries.monomial(self.group.element(gamma), self.field.one())

    def sp_probe(self, f) -> tuple:
        return f.support()


class LeTruncationModel(HahnModel):
    """Mutant: truncation keeps the cut exponent itself (<= instead of <).

    Detected by (T2): for f = tau^a we get v(f) >= a but f|_a = f != 0.
    """

    name = "mutant:le-trunc"

    def trunc(self, f, alpha: Exponent):
        keep = tuple((e, c) for e, c in f.terms if e <= alpha)
        return FiniteSeries(f.group, f.field, keep)


class ScaledTauModel(HahnModel):
    """Mutant: the distinguished monomials carry a spurious factor 2.

    Detected by (T7): tau^(a+b) = 2 t^(a+b) but tau^a tau^b = 4 t^(a+b).
    """

    name = "mutant:bad-tau-hom"

    def tau(self, gamma: Exponent) -> FiniteSeries:
        return FiniteSeries.monomial(self.group.element(gamma), self.field.element(2))


class WideTauModel(HahnModel):
    """Mutant: tau^g picks up a second term one step higher.

    Detected by (T8): the support of tau^g is {g, g+1}, not {g}.
    """

    name = "mutant:bad-tau-sp"

    def tau(self, gamma: Exponent) -> FiniteSeries:
        gamma = self.group.element(gamma)
        one = self.field.one()
        return FiniteSeries.monomial(gamma, one) + FiniteSeries.monomial(
            gamma + self.group.unit(), one
        )


class NonadditiveTruncModel(HahnModel):
    """Mutant: truncating the fixed input 1 smuggles in an extra term
    t^a (only for cuts a above its valuation, which keeps T1-T3 intact).

    Detected by (T4): (1+g)|_a = 1 + g|_a but 1|_a + g|_a has the extra
    t^a.
    """

    name = "mutant:nonadditive-trunc"

    def trunc(self, f, alpha: Exponent):
        base = f.truncate(alpha)
        if f == self.one() and alpha > self.group.zero():
            return base + FiniteSeries.monomial(alpha, self.field.one())
        return base


class GridHahnModel(TruncStructure):
    """Embedding-capable self-model over lazy grid series.

    Provides the operations the embedding engine needs — valuation with
    bounded search, products, inverses rooted in monomials, residue as
    the coefficient at zero. Support probes of lazy series have no finite
    answer, so the axiom checker does not run on this model.
    """

    name = "hahn:grid"

    def zero(self) -> GridSeries:
        return GridSeries.zero(self.group, self.field)

    def one(self) -> GridSeries:
        return GridSeries.one(self.group, self.field)

    def constant(self, c) -> GridSeries:
        return GridSeries.from_finite(
            FiniteSeries.constant(self.group, self.field.element(c))
        )

    def add(self, f, g):
        return grid_lift(f) + grid_lift(g)

    def neg(self, f):
        return -grid_lift(f)

    def mul(self, f, g):
        return grid_lift(f) * grid_lift(g)

    def inv(self, f):
        if isinstance(f, FiniteSeries) and f.is_monomial():
            return GridSeries.from_finite(f.invert_monomial())
        return grid_invert(f)

    def value(self, f) -> ExponentOrInf:
        if isinstance(f, FiniteSeries):
            return f.valuation()
        first = f.first_term()
        return INFINITY if first is None else first[0]

    def value_below(self, f, bound: Exponent):
        if isinstance(f, FiniteSeries):
            return f.valuation()
        first = f.first_term(below=bound)
        if first is not None:
            return first[0]
        return INFINITY if f.walk_exhausted else None

    def residue(self, f) -> Coefficient:
        return grid_lift(f).coefficient_at(self.group.zero())

    def trunc(self, f, alpha: Exponent) -> GridSeries:
        return GridSeries.from_finite(grid_lift(f).truncate_below(alpha))

    def tau(self, gamma: Exponent) -> GridSeries:
        return GridSeries.from_finite(
            FiniteSeries.monomial(self.group.element(gamma), self.field.one())
        )

    def render(self, f) -> str:
        return repr(f)


MODELS = {
    model.name: model
    for model in (
        HahnModel,
        LeTruncationModel,
        ScaledTauModel,
        WideTauModel,
        NonadditiveTruncModel,
    )
}


def build_model(selector: str, group: ExponentGroup, field: CoefficientField) -> HahnModel:
    try:
        cls = MODELS[selector]
    except KeyError:
        known = ", ".join(sorted(MODELS))
        raise ValueError(f"unknown model {selector!r} (known: {known})") from None
    return cls(group, field)
