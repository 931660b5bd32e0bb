"""Acceptance suite: one test per criterion, one printed line each.

Every assertion is exact — the arithmetic is rational or modular, so
there are no tolerances anywhere. Criterion 3 runs at the documented
fixed seed 7 with 200 instances per check; the randomized suites use
seed 2026.
"""

import pytest

from conftest import CLI_CORPUS, COMBOS, GOLDEN_DIR, combo, golden_text, run_cli
from hahnfield import (
    Budget,
    FiniteSeries,
    HahnModel,
    SampleSet,
    build_model,
    check_axioms,
    check_lemmas,
    embed,
    invert,
    lift,
    verify_embedding,
)
from hahnfield.sampling import exponent_sample, rng_for, series_sample

SUITE_SEED = 2026
MUTANT_SEED = 7  # documented seed for criterion 3


def report(number: int, label: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    print(f"\nACCEPTANCE {number} {label}: {status}{suffix}")
    assert ok, f"criterion {number} ({label}) failed {suffix}"


@pytest.fixture(scope="module")
def standard_reports():
    """Axiom + lemma reports at >= 1000 instances per check per combo."""
    reports = {}
    for gs, fs in COMBOS:
        group, field = combo(gs, fs)
        model = HahnModel(group, field)
        samples = SampleSet.build(group, field, seed=SUITE_SEED)
        axioms = check_axioms(model, samples, instances_per_check=1000)
        lemmas = check_lemmas(model, samples, instances_per_check=1000)
        reports[(gs, fs)] = (axioms, lemmas)
    return reports


def test_criterion_1_axiom_suite(standard_reports):
    failures = []
    for key, (axioms, _) in standard_reports.items():
        for item in axioms.items:
            if item.status != "pass" or item.samples < 1000:
                failures.append((key, item.name, item.status, item.samples))
    report(
        1,
        "axiom suite (T1-T8, >=1000 instances, 6 combos, exact)",
        not failures,
        str(failures) if failures else "48 checks green",
    )


def test_criterion_2_lemma_suite(standard_reports):
    failures = []
    for key, (_, lemmas) in standard_reports.items():
        for item in lemmas.items:
            if item.status != "pass" or item.samples < 1000:
                failures.append((key, item.name, item.status, item.samples))
    report(
        2,
        "lemma suite (h1, lemm2, p, FP, T6, FP6 incl. dual-route check)",
        not failures,
        str(failures) if failures else "96 checks green",
    )


def test_criterion_3_mutant_detection():
    named = {
        "mutant:le-trunc": "T2",
        "mutant:bad-tau-hom": "T7",
        "mutant:bad-tau-sp": "T8",
        "mutant:nonadditive-trunc": "T4",
    }
    group, field = combo("q", "q")
    samples = SampleSet.build(group, field, seed=MUTANT_SEED)
    problems = []
    for selector, axiom in named.items():
        model = build_model(selector, group, field)
        first = check_axioms(model, samples, instances_per_check=200)
        item = first.item(axiom)
        if item.status != "fail" or item.counterexample is None or item.samples > 200:
            problems.append((selector, axiom, item.status))
            continue
        # replayability: the identical seed reproduces the identical report
        again = check_axioms(model, samples, instances_per_check=200)
        if first.to_json() != again.to_json():
            problems.append((selector, "non-deterministic report"))
    report(
        3,
        f"mutant detection (seed {MUTANT_SEED}, <=200 instances, named axioms)",
        not problems,
        str(problems) if problems else "4 mutants rejected with counterexamples",
    )


def test_criterion_4_embedding_roundtrip():
    problems = []
    total = 0
    for gs, fs in COMBOS:
        group, field = combo(gs, fs)
        model = HahnModel(group, field)
        rng = rng_for(SUITE_SEED, f"roundtrip:{gs}:{fs}")
        for _ in range(500):
            f = series_sample(rng, group, field, max_terms=50, span=60)
            result = embed(model, f, Budget(max_terms=len(f) + 1))
            total += 1
            if not (
                result.exhausted
                and result.series == f
                and result.series.support() == f.support()
            ):
                problems.append((gs, fs, str(f)))
                break
    report(
        4,
        "embedding roundtrip (500 series x 6 combos, <=50 terms, exact)",
        not problems,
        str(problems[:1]) if problems else f"{total} roundtrips exact",
    )


def test_criterion_5_embedding_homomorphism():
    problems = []
    for gs, fs in COMBOS:
        group, field = combo(gs, fs)
        model = HahnModel(group, field)
        samples = SampleSet.build(group, field, seed=SUITE_SEED)
        rep = verify_embedding(
            model, samples, Budget(max_terms=500), instances_per_check=500
        )
        for item in rep.items:
            if item.status != "pass" or item.samples < 500:
                problems.append((gs, fs, item.name, item.status, item.counterexample))
    report(
        5,
        "embedding homomorphism (6 clauses x >=500 instances x 6 combos)",
        not problems,
        str(problems[:1]) if problems else "all clauses exact below sampled bounds",
    )


def test_criterion_6_inversion_oracle():
    group, field = combo("q", "q")
    one = FiniteSeries.one(group, field)
    rng = rng_for(SUITE_SEED, "inversion")
    problems = []
    for _ in range(200):
        f = series_sample(rng, group, field, max_terms=6, min_terms=1)
        inverse = invert(f)
        gap = min(inverse.generators) if inverse.generators else group.unit()
        product = lift(f) * inverse
        cut = group.zero()
        for _ in range(10):
            cut = cut + gap
            if product.truncate_below(cut) != one.truncate(cut):
                problems.append(str(f))
                break
        if problems:
            break
    geometric = invert(FiniteSeries.from_terms(
        group, field,
        [(group.element(0), field.one()), (group.element(1), -field.one())],
    ))
    for k in range(21):
        if geometric.coefficient_at(group.element(k)) != field.one():
            problems.append(f"1/(1-t) coefficient at {k}")
            break
    report(
        6,
        "inversion oracle (200 random inverses x 10 grid steps; 1/(1-t) 0..20)",
        not problems,
        str(problems[:1]) if problems else "f*invert(f) = 1 exactly below every bound",
    )


def test_criterion_7_cli_golden_corpus():
    problems = []
    assert len(CLI_CORPUS) >= 30
    for name, argv, expected_exit in CLI_CORPUS:
        first = run_cli(argv)
        second = run_cli(argv)
        golden = (GOLDEN_DIR / f"{name}.txt").read_text()
        if first != second:
            problems.append((name, "not reproducible across runs"))
        elif first[0] != expected_exit:
            problems.append((name, f"exit {first[0]} != {expected_exit}"))
        elif golden_text(*first) != golden:
            problems.append((name, "differs from golden file"))
    report(
        7,
        f"CLI golden corpus ({len(CLI_CORPUS)} invocations, byte-identical)",
        not problems,
        str(problems[:2]) if problems else "text+JSON stable, exit codes 0/1/2 honored",
    )


def test_criterion_8_grid_finite_consistency():
    problems = []
    checked = 0
    for gs, fs in (("z", "q"), ("z", "gf:5"), ("q", "q"), ("q", "gf:5")):
        group, field = combo(gs, fs)
        rng = rng_for(SUITE_SEED, f"gridconsistency:{gs}:{fs}")
        for _ in range(100):
            f = series_sample(rng, group, field)
            g = series_sample(rng, group, field)
            beta = exponent_sample(rng, group, span=12)
            checked += 1
            if (lift(f) + lift(g)).truncate_below(beta) != (f + g).truncate(beta):
                problems.append((gs, fs, "add", str(f), str(g), str(beta)))
                break
            if (lift(f) * lift(g)).truncate_below(beta) != (f * g).truncate(beta):
                problems.append((gs, fs, "mul", str(f), str(g), str(beta)))
                break
    report(
        8,
        f"grid/finite consistency ({checked} random bounds, add+mul, exact)",
        not problems,
        str(problems[:1]) if problems else "lifted ops agree with finite ops",
    )
