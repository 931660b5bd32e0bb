"""Property-based verification of truncation structures.

The defining axioms quantify over all of F x Gamma; this checker
finitizes them over a :class:`SampleSet` whose probe list is closed under
the combinations the axioms need (zero, every pairwise sum of element
supports, and the exponents the monomial family is probed at). Each check
runs a deterministic stream of instances — systematic boundary cases
interleaved with seeded random draws — and stops at its instance budget,
recording the first counterexample it finds. Failures never abort the
run: a broken structure yields a full report naming every violated
property, each with replayable inputs.

Instance equality is exact everywhere; there are no tolerances anywhere
in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field
from itertools import cycle, product
from typing import Callable, Iterable, Iterator, Optional

from .coefficients import Coefficient, CoefficientField
from .exponents import INFINITY, Exponent, ExponentGroup
from .sampling import coefficient_sample, exponent_sample, rng_for, series_sample
from .series import FiniteSeries
from .structure import TruncStructure

_SENTINEL = object()


@dataclass
class CheckItem:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    samples: int
    counterexample: Optional[dict] = None

    def to_json_dict(self, seed: int) -> dict:
        return {
            "axiom": self.name,
            "status": self.status,
            "samples": self.samples,
            "counterexample": self.counterexample,
            "seed": seed,
        }


@dataclass
class CheckReport:
    model: str
    seed: int
    items: list = dataclass_field(default_factory=list)
    diagnostic: bool = False

    @property
    def passed(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    def failures(self) -> list:
        return [item for item in self.items if item.status == "fail"]

    def item(self, name: str) -> CheckItem:
        for entry in self.items:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "seed": self.seed,
            "passed": self.passed,
            "diagnostic": self.diagnostic,
            "checks": [item.to_json_dict(self.seed) for item in self.items],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


@dataclass(frozen=True)
class SampleSet:
    """Finite slice of F, Gamma and C the checks quantify over.

    Probes always include zero, every pairwise sum of element support
    points, and every exponent the tau family gets probed at (the tau
    arguments are drawn from the probe list itself).
    """

    elements: tuple
    probes: tuple
    constants: tuple
    seed: int

    def __post_init__(self):
        if not self.elements or not self.probes or not self.constants:
            raise ValueError("sample set must be nonempty")

    @classmethod
    def build(
        cls,
        group: ExponentGroup,
        field: CoefficientField,
        seed: int,
        n_elements: int = 8,
        max_terms: int = 4,
        n_random_probes: int = 12,
        n_constants: int = 6,
    ) -> "SampleSet":
        rng = rng_for(seed, f"sampleset:{group.selector}:{field.selector}")
        elements = [FiniteSeries.zero(group, field), FiniteSeries.one(group, field)]
        while len(elements) < max(n_elements, 3):
            elements.append(series_sample(rng, group, field, max_terms=max_terms))
        constants = [field.zero(), field.one()]
        while len(constants) < max(n_constants, 3):
            constants.append(coefficient_sample(rng, field))
        probes = {group.zero(), group.unit(), -group.unit()}
        for _ in range(n_random_probes):
            probes.add(exponent_sample(rng, group))
        supports = sorted({e for f in elements for e in f.support()})
        probes.update(supports)
        probes.update(a + b for a in supports for b in supports)
        return cls(tuple(elements), tuple(sorted(probes)), tuple(constants), seed)


# -- interface-derived operations (everything below uses only the
#    structure's declared operations, so it applies to mutants too) ----


def _sp(s: TruncStructure, f) -> tuple:
    return tuple(sorted(s.sp_probe(f)))


def _tail(s: TruncStructure, f, alpha: Exponent):
    """f minus its truncation: the part from alpha on."""
    return s.sub(f, s.trunc(f, alpha))


def _lead(s: TruncStructure, f):
    """Leading term computed through trunc + sp_probe: truncate just past
    the first support point (the element itself if already a monomial)."""
    sp = _sp(s, f)
    if not sp:
        return s.zero()
    if len(sp) == 1:
        return f
    return s.trunc(f, sp[1])


def _gamma_term(s: TruncStructure, f, gamma: Exponent):
    """Term of f at one exponent: lead of the tail at gamma, or zero."""
    if gamma not in _sp(s, f):
        return s.zero()
    return _lead(s, _tail(s, f, gamma))


def _render(s: TruncStructure, value) -> str:
    if value is INFINITY:
        return "inf"
    if isinstance(value, (Exponent, Coefficient)):
        return str(value)
    if isinstance(value, tuple):
        return "{" + ", ".join(str(v) for v in value) + "}"
    return s.render(value)


def _mix(systematic: Iterable, rng, random_factory: Callable[[], tuple]) -> Iterator:
    """Deterministic instance stream: boundary cases first, interleaved
    with (and eventually replaced by) seeded random draws."""
    it = iter(systematic)
    exhausted = False
    while True:
        if not exhausted:
            nxt = next(it, _SENTINEL)
            if nxt is _SENTINEL:
                exhausted = True
            else:
                yield nxt
        yield random_factory()


class _Session:
    def __init__(self, structure: TruncStructure, samples: SampleSet, budget: int):
        self.s = structure
        self.samples = samples
        self.budget = max(1, budget)
        self.group = structure.group
        self.zero_exp = structure.group.zero()
        self.unit = structure.group.unit()

    def rng(self, label: str):
        return rng_for(self.samples.seed, f"{self.s.name}:{label}")

    def run_item(
        self,
        name: str,
        input_names: tuple,
        instances: Iterator,
        verify: Callable[..., Optional[dict]],
    ) -> CheckItem:
        count = 0
        stream = iter(instances)
        while count < self.budget:
            try:
                inst = next(stream)
            except StopIteration:
                break
            except Exception as exc:  # broken structures may throw while
                # instances are being built: record it, never crash
                return CheckItem(
                    name,
                    "fail",
                    count + 1,
                    {"error": f"instance generation: {type(exc).__name__}: {exc}"},
                )
            count += 1
            rendered = {n: _render(self.s, v) for n, v in zip(input_names, inst)}
            try:
                extra = verify(*inst)
            except Exception as exc:  # structure ops may throw: record, never crash
                return CheckItem(name, "fail", count, {**rendered, "error": f"{type(exc).__name__}: {exc}"})
            if extra is not None:
                return CheckItem(name, "fail", count, {**rendered, **extra})
        return CheckItem(name, "pass", count)

    # -- instance streams ---------------------------------------------

    def boundary_cuts(self, f) -> list:
        cuts = [self.zero_exp, self.unit]
        try:
            v = self.s.value(f)
        except Exception:
            return cuts
        if v is not INFINITY:
            cuts = [v, v + self.unit, self.zero_exp, self.unit]
        return cuts

    def element_cut_instances(self, label: str) -> Iterator:
        E, P = self.samples.elements, self.samples.probes
        systematic = ((f, a) for f in E for a in self.boundary_cuts(f))
        rng = self.rng(label)
        return _mix(systematic, rng, lambda: (rng.choice(E), rng.choice(P)))

    def pair_cut_instances(self, label: str) -> Iterator:
        E, P, C = self.samples.elements, self.samples.probes, self.samples.constants
        systematic = (
            (f, g, c, a)
            for ((f, g), c, a) in zip(
                product(E, E), cycle(C), cycle([self.unit, self.zero_exp])
            )
        )
        rng = self.rng(label)
        return _mix(
            systematic,
            rng,
            lambda: (rng.choice(E), rng.choice(E), rng.choice(C), rng.choice(P)),
        )

    def small_probes(self) -> list:
        P = self.samples.probes
        smalls = [self.zero_exp, self.unit, -self.unit]
        for p in P:
            if p not in smalls:
                smalls.append(p)
            if len(smalls) >= 8:
                break
        return smalls


# -- axiom suite -------------------------------------------------------


def check_axioms(
    structure: TruncStructure, samples: SampleSet, instances_per_check: int = 500
) -> CheckReport:
    """Verify the eight defining axioms on sampled instances.

    The well-ordering axiom is replaced by its desk-scale surrogate: the
    declared support probe is finite, membership coincides pointwise with
    the defining valuation identity, and no sampled probe outside the
    declared set satisfies the identity.
    """
    ses = _Session(structure, samples, instances_per_check)
    s = structure
    E, P = samples.elements, samples.probes
    zero_exp, unit = ses.zero_exp, ses.unit
    report = CheckReport(model=s.name, seed=samples.seed)

    def t1(f, a):
        v = s.value(_tail(s, f, a))
        if not v >= a:
            return {"expected": f"v(f - f|a) >= {a}", "observed": _render(s, v)}
        return None

    report.items.append(ses.run_item("T1", ("f", "alpha"), ses.element_cut_instances("T1"), t1))

    def t2(f, a):
        if s.value(f) >= a:
            t = s.trunc(f, a)
            if not s.is_zero(t):
                return {"expected": "f|a = 0 when v(f) >= a", "observed": _render(s, t)}
        return None

    report.items.append(ses.run_item("T2", ("f", "alpha"), ses.element_cut_instances("T2"), t2))

    def t3_instances():
        rng = ses.rng("T3")
        systematic = (
            (f, a, a + unit) for f in E for a in ses.boundary_cuts(f)
        )

        def draw():
            a, b = rng.choice(P), rng.choice(P)
            if a == b:
                b = a + unit
            return (rng.choice(E), min(a, b), max(a, b))

        return _mix(systematic, rng, draw)

    def t3(f, a, b):
        if b > a:
            lhs = s.trunc(s.trunc(f, a), b)
            rhs = s.trunc(f, a)
            if not s.equal(lhs, rhs):
                return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("T3", ("f", "alpha", "beta"), t3_instances(), t3))

    def t4(f, g, c, a):
        lhs = s.trunc(s.add(f, g), a)
        rhs = s.add(s.trunc(f, a), s.trunc(g, a))
        if not s.equal(lhs, rhs):
            return {
                "clause": "additivity",
                "expected": _render(s, rhs),
                "observed": _render(s, lhs),
            }
        lhs = s.trunc(s.scalar_mul(c, f), a)
        rhs = s.scalar_mul(c, s.trunc(f, a))
        if not s.equal(lhs, rhs):
            return {
                "clause": "scalar",
                "expected": _render(s, rhs),
                "observed": _render(s, lhs),
            }
        return None

    report.items.append(
        ses.run_item("T4", ("f", "g", "c", "alpha"), ses.pair_cut_instances("T4"), t4)
    )

    def t5_instances():
        rng = ses.rng("T5")

        def systematic():
            for f in E:
                sp = _sp(s, f)
                for gamma in list(sp[:4]) + ses.boundary_cuts(f):
                    yield (f, gamma)

        return _mix(systematic(), rng, lambda: (rng.choice(E), rng.choice(P)))

    def t5(f, gamma):
        member = gamma in _sp(s, f)
        identity = s.value(_tail(s, f, gamma)) == gamma
        if member and not identity and s.sp_probe_exact:
            return {"expected": f"v(f - f|g) = {gamma} for declared support point", "observed": "identity fails"}
        if identity and not member:
            return {"expected": f"{gamma} outside declared support", "observed": "valuation identity holds"}
        return None

    report.items.append(ses.run_item("T5", ("f", "gamma"), t5_instances(), t5))

    def sum_bound(f, g):
        sums = sorted({a + b for a in _sp(s, f) for b in _sp(s, g)})
        return sums[-1] if sums else None

    def t6_instances():
        rng = ses.rng("T6")

        def systematic():
            for f, g in product(E, E):
                top = sum_bound(f, g)
                if top is None:
                    yield (f, g, zero_exp)
                    continue
                yield (f, g, top + unit)
                for p in P:
                    if p > top:
                        yield (f, g, p)
                        break

        def draw():
            f, g = rng.choice(E), rng.choice(E)
            top = sum_bound(f, g)
            step = rng.choice(P)
            gamma = (top if top is not None else zero_exp) + unit
            if step > zero_exp:
                gamma = gamma + step
            return (f, g, gamma)

        return _mix(systematic(), rng, draw)

    def t6(f, g, gamma):
        top = sum_bound(f, g)
        if top is not None and not top < gamma:
            return None  # precondition sp(f)+sp(g) < gamma not met: vacuous
        bad = [d for d in _sp(s, s.mul(f, g)) if not d < gamma]
        if bad:
            return {
                "expected": f"sp(fg) < {gamma}",
                "observed": "{" + ", ".join(str(b) for b in bad) + "}",
            }
        return None

    report.items.append(ses.run_item("T6", ("f", "g", "gamma"), t6_instances(), t6))

    def t7_instances():
        rng = ses.rng("T7")
        smalls = ses.small_probes()
        return _mix(product(smalls, smalls), rng, lambda: (rng.choice(P), rng.choice(P)))

    def t7(a, b):
        lhs = s.tau(a + b)
        rhs = s.mul(s.tau(a), s.tau(b))
        if not s.equal(lhs, rhs):
            return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("T7", ("alpha", "beta"), t7_instances(), t7))

    def t8_instances():
        rng = ses.rng("T8")
        return _mix(((g,) for g in ses.small_probes()), rng, lambda: (rng.choice(P),))

    def t8(gamma):
        sp = _sp(s, s.tau(gamma))
        if sp != (gamma,):
            return {"expected": "{" + str(gamma) + "}", "observed": _render(s, sp)}
        return None

    report.items.append(ses.run_item("T8", ("gamma",), t8_instances(), t8))
    return report


# -- lemma suite -------------------------------------------------------


def check_lemmas(
    structure: TruncStructure,
    samples: SampleSet,
    instances_per_check: int = 500,
    diagnostic: bool = False,
) -> CheckReport:
    """Verify the derived lemmas (consequences of the axioms).

    Set ``diagnostic`` when the structure already failed check_axioms:
    the report is then advisory rather than a conformance statement.
    """
    ses = _Session(structure, samples, instances_per_check)
    s = structure
    E, P, C = samples.elements, samples.probes, samples.constants
    zero_exp, unit = ses.zero_exp, ses.unit
    nonzero_constants = tuple(c for c in C if c) or (s.field.one(),)
    report = CheckReport(model=s.name, seed=samples.seed, diagnostic=diagnostic)

    def h1_i(f, gamma):
        t = s.trunc(f, gamma)
        if not s.is_zero(t):
            if not s.value(s.sub(f, t)) > s.value(f):
                return {"expected": "f ~ f|g", "observed": _render(s, s.sub(f, t))}
        return None

    report.items.append(ses.run_item("h1.i", ("f", "gamma"), ses.element_cut_instances("h1.i"), h1_i))

    def h1_ii_instances():
        rng = ses.rng("h1.ii")
        systematic = ((f, a + unit, a) for f in E for a in ses.boundary_cuts(f))

        def draw():
            a, b = rng.choice(P), rng.choice(P)
            return (rng.choice(E), max(a, b), min(a, b))

        return _mix(systematic, rng, draw)

    def h1_ii(f, a, b):
        if b <= a:
            lhs = s.trunc(s.trunc(f, a), b)
            rhs = s.trunc(f, b)
            if not s.equal(lhs, rhs):
                return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("h1.ii", ("f", "alpha", "beta"), h1_ii_instances(), h1_ii))

    def h1_iii_instances():
        rng = ses.rng("h1.iii")
        return _mix(((f,) for f in E), rng, lambda: (rng.choice(E),))

    def h1_iii(f):
        if s.is_zero(f):
            return None
        sp = _sp(s, f)
        if not sp:
            return {"expected": "sp(f) nonempty for f != 0", "observed": "{}"}
        if s.value(f) != sp[0]:
            return {"expected": f"v(f) = min sp(f) = {sp[0]}", "observed": _render(s, s.value(f))}
        return None

    report.items.append(ses.run_item("h1.iii", ("f",), h1_iii_instances(), h1_iii))

    def lemm2_i(f, a):
        lhs = _sp(s, s.trunc(f, a))
        rhs = tuple(g for g in _sp(s, f) if g < a)
        if lhs != rhs:
            return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("lemm2.i", ("f", "alpha"), ses.element_cut_instances("lemm2.i"), lemm2_i))

    def lemm2_ii(f, g, c, a):
        union = set(_sp(s, f)) | set(_sp(s, g))
        extra = [d for d in _sp(s, s.add(f, g)) if d not in union]
        if extra:
            return {
                "clause": "sum support",
                "expected": "sp(f+g) within sp(f) u sp(g)",
                "observed": "{" + ", ".join(str(e) for e in extra) + "}",
            }
        if c:
            lhs = _sp(s, s.scalar_mul(c, f))
            if lhs != _sp(s, f):
                return {
                    "clause": "scalar support",
                    "expected": _render(s, _sp(s, f)),
                    "observed": _render(s, lhs),
                }
        return None

    report.items.append(
        ses.run_item("lemm2.ii", ("f", "g", "c", "alpha"), ses.pair_cut_instances("lemm2.ii"), lemm2_ii)
    )

    def lemm2_iii(f, a):
        lhs = _sp(s, _tail(s, f, a))
        rhs = tuple(g for g in _sp(s, f) if g >= a)
        if lhs != rhs:
            return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(
        ses.run_item("lemm2.iii", ("f", "alpha"), ses.element_cut_instances("lemm2.iii"), lemm2_iii)
    )

    def lemm2_iv(f, a):
        b = s.value(_tail(s, f, a))
        if b is not INFINITY and b not in _sp(s, f):
            return {"expected": f"{b} in sp(f)", "observed": _render(s, _sp(s, f))}
        return None

    report.items.append(
        ses.run_item("lemm2.iv", ("f", "alpha"), ses.element_cut_instances("lemm2.iv"), lemm2_iv)
    )

    def lemm2_v(f, a):
        sp = _sp(s, f)
        t = s.trunc(f, a)
        if not sp or a > sp[-1]:
            if not s.equal(t, f):
                return {"expected": _render(s, f), "observed": _render(s, t)}
            return None
        matches = [b for b in sp if s.equal(t, s.trunc(f, b))]
        if len(matches) != 1 or not a <= matches[0]:
            return {
                "expected": "unique b in sp(f), a <= b, with f|a = f|b",
                "observed": "{" + ", ".join(str(m) for m in matches) + "}",
            }
        return None

    report.items.append(
        ses.run_item("lemm2.v", ("f", "alpha"), ses.element_cut_instances("lemm2.v"), lemm2_v)
    )

    def p_i_instances():
        rng = ses.rng("p.i")
        return _mix(((f,) for f in E), rng, lambda: (rng.choice(E),))

    def p_i(f):
        sp = _sp(s, f)
        total = s.zero()
        for gamma in sp:
            part = _gamma_term(s, f, gamma)
            if _sp(s, part) != (gamma,):
                return {
                    "expected": f"monomial part at {gamma}",
                    "observed": _render(s, _sp(s, part)),
                }
            if s.value(part) != gamma:
                return {"expected": f"v(part) = {gamma}", "observed": _render(s, s.value(part))}
            total = s.add(total, part)
        if not s.equal(total, f):
            return {"expected": _render(s, f), "observed": _render(s, total)}
        return None

    report.items.append(ses.run_item("p.i", ("f",), p_i_instances(), p_i))

    def p_ii_instances():
        rng = ses.rng("p.ii")

        def draw():
            k = rng.randint(0, 4)
            parts = tuple(
                (rng.choice(P), rng.choice(nonzero_constants)) for _ in range(k)
            )
            return (parts,)

        return _mix([], rng, draw)

    def p_ii(parts):
        f = s.zero()
        for gamma, c in parts:
            f = s.add(f, s.scalar_mul(c, s.tau(gamma)))
        allowed = {gamma for gamma, _ in parts}
        sp = _sp(s, f)
        if len(sp) > len(parts) or any(g not in allowed for g in sp):
            return {
                "expected": "support within the summed monomial exponents",
                "observed": _render(s, sp),
            }
        return None

    report.items.append(ses.run_item("p.ii", ("parts",), p_ii_instances(), p_ii))

    def p_iii_instances():
        rng = ses.rng("p.iii")
        smalls = ses.small_probes()
        systematic = product(smalls[:4], C, C)
        return _mix(systematic, rng, lambda: (rng.choice(P), rng.choice(C), rng.choice(C)))

    def p_iii(gamma, c1, c2):
        f = s.scalar_mul(c1, s.tau(gamma))
        g = s.scalar_mul(c2, s.tau(gamma))
        if s.value(f) != s.value(g):
            return None  # not asymptotically comparable: vacuous
        sp = _sp(s, s.add(f, g))
        if len(sp) > 1:
            return {"expected": "sum in P u {0}", "observed": _render(s, sp)}
        return None

    report.items.append(ses.run_item("p.iii", ("gamma", "c1", "c2"), p_iii_instances(), p_iii))

    def monomial_pairs(label: str):
        rng = ses.rng(label)

        def systematic():
            for f in E:
                if s.is_zero(f):
                    continue
                p1 = _lead(s, f)
                yield (p1, p1)
                for c in nonzero_constants[:2]:
                    yield (p1, s.scalar_mul(c, s.tau(s.value(p1))))

        def draw():
            f = rng.choice(E)
            gamma = rng.choice(P)
            c = rng.choice(nonzero_constants)
            if s.is_zero(f):
                return (s.tau(gamma), s.scalar_mul(c, s.tau(gamma)))
            p1 = _lead(s, f)
            return (p1, s.scalar_mul(c, s.tau(s.value(p1))))

        return _mix(systematic(), rng, draw)

    def p_iv(p1, p2):
        if len(_sp(s, p1)) != 1 or len(_sp(s, p2)) != 1 or s.value(p1) != s.value(p2):
            return None
        c = s.residue(s.mul(p1, s.inv(p2)))
        if not c:
            return {"expected": "nonzero proportionality constant", "observed": "0"}
        if not s.equal(p1, s.scalar_mul(c, p2)):
            return {
                "expected": _render(s, p1),
                "observed": _render(s, s.scalar_mul(c, p2)),
            }
        return None

    report.items.append(ses.run_item("p.iv", ("p1", "p2"), monomial_pairs("p.iv"), p_iv))

    def fp_i_instances():
        rng = ses.rng("FP.i")
        smalls = ses.small_probes()
        systematic = (
            (s.scalar_mul(c1, s.tau(g1)), s.scalar_mul(c2, s.tau(g2)))
            for (g1, g2), (c1, c2) in zip(
                product(smalls[:4], smalls[:4]),
                cycle(product(nonzero_constants[:3], nonzero_constants[:3])),
            )
        )

        def draw():
            return (
                s.scalar_mul(rng.choice(nonzero_constants), s.tau(rng.choice(P))),
                s.scalar_mul(rng.choice(nonzero_constants), s.tau(rng.choice(P))),
            )

        return _mix(systematic, rng, draw)

    def fp_i(p1, p2):
        prod_sp = _sp(s, s.mul(p1, p2))
        expected = (s.value(p1) + s.value(p2),)
        if prod_sp != expected:
            return {
                "clause": "product stays in P",
                "expected": _render(s, expected),
                "observed": _render(s, prod_sp),
            }
        inverse = s.inv(p1)
        if _sp(s, inverse) != (-s.value(p1),):
            return {
                "clause": "inverse stays in P",
                "expected": "{" + str(-s.value(p1)) + "}",
                "observed": _render(s, _sp(s, inverse)),
            }
        if not s.equal(s.mul(p1, inverse), s.one()):
            return {
                "clause": "inverse law",
                "expected": _render(s, s.one()),
                "observed": _render(s, s.mul(p1, inverse)),
            }
        if _sp(s, s.one()) != (zero_exp,):
            return {"clause": "identity in P", "expected": "{0}", "observed": _render(s, _sp(s, s.one()))}
        return None

    report.items.append(ses.run_item("FP.i", ("p1", "p2"), fp_i_instances(), fp_i))

    def fp_ii_instances():
        rng = ses.rng("FP.ii")
        smalls = ses.small_probes()
        systematic = (
            (s.scalar_mul(c, s.tau(g)), f)
            for (g, f), c in zip(product(smalls[:4], E), cycle(nonzero_constants))
        )

        def draw():
            return (
                s.scalar_mul(rng.choice(nonzero_constants), s.tau(rng.choice(P))),
                rng.choice(E),
            )

        return _mix(systematic, rng, draw)

    def fp_ii(p1, g):
        v = s.value(p1)
        lhs = _sp(s, s.mul(p1, g))
        rhs = tuple(v + d for d in _sp(s, g))
        if lhs != rhs:
            return {"expected": _render(s, rhs), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("FP.ii", ("p", "g"), fp_ii_instances(), fp_ii))

    def pair_instances(label: str):
        rng = ses.rng(label)
        return _mix(product(E, E), rng, lambda: (rng.choice(E), rng.choice(E)))

    def t6_lemma(f, g):
        sums = {a + b for a in _sp(s, f) for b in _sp(s, g)}
        extra = [d for d in _sp(s, s.mul(f, g)) if d not in sums]
        if extra:
            return {
                "expected": "sp(fg) within sp(f)+sp(g)",
                "observed": "{" + ", ".join(str(e) for e in extra) + "}",
            }
        return None

    report.items.append(ses.run_item("T6.lemma", ("f", "g"), pair_instances("T6.lemma"), t6_lemma))

    def fp6_instances():
        rng = ses.rng("FP6")

        def systematic():
            for f, g in product(E, E):
                sums = sorted({a + b for a in _sp(s, f) for b in _sp(s, g)})
                for gamma in sums:
                    yield (f, g, gamma)

        def draw():
            f, g = rng.choice(E), rng.choice(E)
            sums = sorted({a + b for a in _sp(s, f) for b in _sp(s, g)})
            if sums:
                return (f, g, rng.choice(sums))
            return (f, g, rng.choice(P))

        return _mix(systematic(), rng, draw)

    def fp6(f, g, gamma):
        lhs = _gamma_term(s, s.mul(f, g), gamma)
        total = s.zero()
        for a in _sp(s, f):
            b = gamma - a
            if b in _sp(s, g):
                total = s.add(total, s.mul(_gamma_term(s, f, a), _gamma_term(s, g, b)))
        if not s.equal(lhs, total):
            return {"expected": _render(s, total), "observed": _render(s, lhs)}
        return None

    report.items.append(ses.run_item("FP6", ("f", "g", "gamma"), fp6_instances(), fp6))
    return report


# -- Hahn space condition ----------------------------------------------


def check_hahn_space(
    structure: TruncStructure, samples: SampleSet, instances_per_check: int = 500
) -> CheckReport:
    """Any two elements of equal valuation are proportional over C up to
    lower-order terms; the witness constant is extracted through the
    residue of f divided by the leading term of g."""
    ses = _Session(structure, samples, instances_per_check)
    s = structure
    E, P = samples.elements, samples.probes
    report = CheckReport(model=s.name, seed=samples.seed)

    def instances():
        rng = ses.rng("hahn_space")

        def systematic():
            for f in E:
                yield (f, f)
            for f, g in product(E, E):
                yield (f, g)

        def align(f, g):
            if s.is_zero(f) or s.is_zero(g):
                return (f, g)
            shift = s.value(f) - s.value(g)
            return (f, s.mul(g, s.tau(shift)))

        def draw():
            return align(rng.choice(E), rng.choice(E))

        for f, g in systematic():
            yield align(f, g)
        while True:
            yield draw()

    def hahn_space(f, g):
        if s.is_zero(f) or s.is_zero(g) or s.value(f) != s.value(g):
            return None
        c = s.residue(s.mul(f, s.inv(_lead(s, g))))
        if not c:
            return {"expected": "nonzero witness constant", "observed": "0"}
        diff = s.sub(f, s.scalar_mul(c, g))
        if not s.value(diff) > s.value(f):
            return {
                "expected": f"f - c*g below f, c = {c}",
                "observed": _render(s, diff),
            }
        return None

    report.items.append(ses.run_item("hahn_space", ("f", "g"), instances(), hahn_space))
    return report


def run_standard_checks(
    structure: TruncStructure, samples: SampleSet, instances_per_check: int = 500
) -> tuple:
    """Axioms, then lemmas (diagnostic if the axioms failed), then the
    Hahn space condition. Returns the three reports."""
    axioms = check_axioms(structure, samples, instances_per_check)
    lemmas = check_lemmas(
        structure, samples, instances_per_check, diagnostic=not axioms.passed
    )
    hahn = check_hahn_space(structure, samples, instances_per_check)
    return axioms, lemmas, hahn
