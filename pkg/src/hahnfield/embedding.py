"""Term-by-term series extraction from a truncation structure.

Any conforming structure embeds uniquely into the series field once the
distinguished monomials are pinned to t^gamma. This module extracts that
embedding constructively: repeatedly read off the valuation, divide by
the monomial there, take the residue as the coefficient, subtract, and
continue. Budgets make the (possibly transfinite) sum finite; partial
results are first-class and prefix-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .checker import CheckReport, SampleSet, _mix, _Session
from .errors import GridSearchLimitError, HahnError, StructureViolationError
from .exponents import INFINITY, Exponent, ExponentOrInf, format_valuation
from .series import FiniteSeries
from .structure import HahnModel, TruncStructure

_FALLBACK_MAX_TERMS = 10_000


@dataclass(frozen=True)
class Budget:
    """Emission limits: a term count, an exponent ceiling, or both."""

    max_terms: Optional[int] = None
    exponent_bound: Optional[Exponent] = None

    def __post_init__(self):
        if self.max_terms is None and self.exponent_bound is None:
            raise ValueError("budget needs max_terms or exponent_bound (or both)")
        if self.max_terms is not None and self.max_terms < 1:
            raise ValueError("max_terms must be positive")


@dataclass
class EmbeddingResult:
    series: FiniteSeries
    exhausted: bool
    residual_valuation: Optional[ExponentOrInf]
    terms_emitted: int

    def to_json_dict(self) -> dict:
        rv = None if self.residual_valuation is None else format_valuation(self.residual_valuation)
        return {
            **self.series.to_json_dict(),
            "exhausted": self.exhausted,
            "terms_emitted": self.terms_emitted,
            "residual_valuation": rv,
        }


def embed(structure: TruncStructure, element, budget: Budget) -> EmbeddingResult:
    """Extract the series representation of one element.

    Each round emits (gamma, c) with gamma the residual's valuation and
    c the residue of the residual divided by the monomial at gamma, then
    subtracts c*tau^gamma. Valuations must strictly increase and every
    emitted coefficient is nonzero; a structure that breaks either raises
    StructureViolationError with the witness.
    """
    s = structure
    group, field = s.group, s.field
    zero_exp = group.zero()
    terms: list = []
    residual = element
    last_gamma: Optional[Exponent] = None

    while True:
        if budget.exponent_bound is not None:
            v = s.value_below(residual, budget.exponent_bound)
        else:
            v = s.value(residual)
        if v is INFINITY:
            return EmbeddingResult(
                FiniteSeries(group, field, tuple(terms)), True, INFINITY, len(terms)
            )
        if v is None or (budget.exponent_bound is not None and not v < budget.exponent_bound):
            # exponent ceiling reached; v is the residual's valuation when
            # the search could pin it down, else undetermined beyond bound
            return EmbeddingResult(
                FiniteSeries(group, field, tuple(terms)), False, v, len(terms)
            )
        if budget.max_terms is not None and len(terms) >= budget.max_terms:
            return EmbeddingResult(
                FiniteSeries(group, field, tuple(terms)), False, v, len(terms)
            )
        if last_gamma is not None and not v > last_gamma:
            raise StructureViolationError(
                "residual valuation failed to increase",
                witness={"gamma": str(last_gamma), "next": str(v)},
            )
        try:
            unit_at_v = s.inv(s.tau(v))
        except (HahnError, ZeroDivisionError) as exc:
            raise StructureViolationError(
                f"monomial family not invertible at {v}: {exc}",
                witness={"gamma": str(v)},
            ) from exc
        h = s.mul(residual, unit_at_v)
        hv = s.value(h)
        if hv != zero_exp:
            raise StructureViolationError(
                "dividing the residual by its monomial failed to land at valuation 0",
                witness={
                    "f": s.render(residual),
                    "gamma": str(v),
                    "observed_valuation": format_valuation(hv),
                },
            )
        c = s.residue(h)
        if not c:
            raise StructureViolationError(
                "residue of a valuation-0 element came out zero",
                witness={"f": s.render(residual), "gamma": str(v)},
            )
        terms.append((v, c))
        last_gamma = v
        residual = s.sub(residual, s.scalar_mul(c, s.tau(v)))


def roundtrip_identity(f: FiniteSeries) -> bool:
    """Embedding over the self-model reproduces the input exactly."""
    model = HahnModel(f.group, f.field)
    result = embed(model, f, Budget(max_terms=len(f) + 1))
    return result.exhausted and result.series == f


def verify_embedding(
    structure: TruncStructure,
    samples: SampleSet,
    budget: Budget,
    instances_per_check: int = 200,
) -> CheckReport:
    """Check the embedding clauses on sampled inputs, truncated below an
    exponent bound (the budget's, or a per-instance sampled one):
    additivity, multiplicativity, commutation with truncation, valuation
    preservation, monomial anchoring and constant anchoring."""
    ses = _Session(structure, samples, instances_per_check)
    s = structure
    E, P, C = samples.elements, samples.probes, samples.constants
    group, field = s.group, s.field
    full_budget = Budget(max_terms=budget.max_terms or _FALLBACK_MAX_TERMS)
    report = CheckReport(model=s.name, seed=samples.seed)

    def e(x) -> FiniteSeries:
        result = embed(s, x, full_budget)
        if not result.exhausted:
            raise GridSearchLimitError(
                f"embedding budget exhausted after {result.terms_emitted} terms"
            )
        return result.series

    def bounds_for(label):
        rng = ses.rng(label)
        if budget.exponent_bound is not None:
            return lambda: budget.exponent_bound
        return lambda: rng.choice(P)

    def pair_instances(label):
        rng = ses.rng(label)
        bound = bounds_for(label)
        systematic = ((f, g, bound()) for f, g in product(E, E))
        return _mix(systematic, rng, lambda: (rng.choice(E), rng.choice(E), bound()))

    def additivity(f, g, b):
        lhs = e(s.add(f, g)).truncate(b)
        rhs = (e(f) + e(g)).truncate(b)
        if lhs != rhs:
            return {"expected": str(rhs), "observed": str(lhs)}
        return None

    report.items.append(
        ses.run_item("embed.additivity", ("f", "g", "bound"), pair_instances("embed.additivity"), additivity)
    )

    def multiplicativity(f, g, b):
        lhs = e(s.mul(f, g)).truncate(b)
        rhs = (e(f) * e(g)).truncate(b)
        if lhs != rhs:
            return {"expected": str(rhs), "observed": str(lhs)}
        return None

    report.items.append(
        ses.run_item(
            "embed.multiplicativity", ("f", "g", "bound"), pair_instances("embed.multiplicativity"), multiplicativity
        )
    )

    def trunc_instances():
        rng = ses.rng("embed.truncation")
        bound = bounds_for("embed.truncation")
        systematic = ((f, a, bound()) for f in E for a in ses.boundary_cuts(f))
        return _mix(systematic, rng, lambda: (rng.choice(E), rng.choice(P), bound()))

    def truncation(f, a, b):
        lhs = e(s.trunc(f, a)).truncate(b)
        rhs = e(f).truncate(a).truncate(b)
        if lhs != rhs:
            return {"expected": str(rhs), "observed": str(lhs)}
        return None

    report.items.append(
        ses.run_item("embed.truncation", ("f", "alpha", "bound"), trunc_instances(), truncation)
    )

    def val_instances():
        rng = ses.rng("embed.valuation")
        return _mix(((f,) for f in E), rng, lambda: (rng.choice(E),))

    def valuation(f):
        lhs = e(f).valuation()
        rhs = s.value(f)
        if lhs != rhs:
            return {"expected": format_valuation(rhs), "observed": format_valuation(lhs)}
        return None

    report.items.append(ses.run_item("embed.valuation", ("f",), val_instances(), valuation))

    def tau_instances():
        rng = ses.rng("embed.tau_anchor")
        return _mix(((g,) for g in ses.small_probes()), rng, lambda: (rng.choice(P),))

    def tau_anchor(gamma):
        lhs = e(s.tau(gamma))
        rhs = FiniteSeries.monomial(gamma, field.one())
        if lhs != rhs:
            return {"expected": str(rhs), "observed": str(lhs)}
        return None

    report.items.append(ses.run_item("embed.tau_anchor", ("gamma",), tau_instances(), tau_anchor))

    def const_instances():
        rng = ses.rng("embed.constants")
        return _mix(((c,) for c in C), rng, lambda: (rng.choice(C),))

    def constants(c):
        lhs = e(s.constant(c))
        rhs = FiniteSeries.constant(group, field.element(c))
        if lhs != rhs:
            return {"expected": str(rhs), "observed": str(lhs)}
        return None

    report.items.append(ses.run_item("embed.constants", ("c",), const_instances(), constants))
    return report
