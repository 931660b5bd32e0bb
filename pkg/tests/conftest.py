"""Shared tables and helpers for the test suite."""

from __future__ import annotations

import contextlib
import io
from pathlib import Path

from hahnfield import CoefficientField, ExponentGroup

GOLDEN_DIR = Path(__file__).parent / "golden"

# every group/field combination the acceptance criteria quantify over
COMBOS = [
    ("z", "q"),
    ("z", "gf:5"),
    ("q", "q"),
    ("q", "gf:5"),
    ("q2lex", "q"),
    ("q2lex", "gf:5"),
]


def combo(group_selector: str, field_selector: str):
    return (
        ExponentGroup.from_selector(group_selector),
        CoefficientField.from_selector(field_selector),
    )


def run_cli(argv) -> tuple[int, str, str]:
    """Run the CLI in-process, capturing exit code, stdout and stderr."""
    from hahnfield.cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def golden_text(code: int, out: str, err: str) -> str:
    return f"exit: {code}\n--- stdout ---\n{out}--- stderr ---\n{err}"


# the golden corpus: (name, argv, expected exit code)
CLI_CORPUS = [
    ("eval_product", ["eval", "(1+t)*(1-t)"], 0),
    ("eval_geometric", ["eval", "1/(1-t)", "--bound", "4"], 0),
    ("eval_sp", ["eval", "sp(t^(-1) + t^2)"], 0),
    ("eval_mixed_rational", ["eval", "3/2*t^(1/3) + t^2"], 0),
    ("eval_trunc", ["eval", "trunc(1 + t + t^2, 2)"], 0),
    ("eval_trunc_grid", ["eval", "trunc(1/(1-t), 4)"], 0),
    ("eval_lead", ["eval", "lead(2*t^(-1) + 3)"], 0),
    ("eval_term", ["eval", "term(1 + 2*t + 3*t^2, 1)"], 0),
    ("eval_v", ["eval", "v(2*t^(-1) + 3 + 5*t^(1/2))"], 0),
    ("eval_v_zero", ["eval", "v(t - t)"], 0),
    ("eval_inv_monomial", ["eval", "inv(2*t^3)"], 0),
    ("eval_gf5_product", ["eval", "(2 + 3*t)*(4 + t)", "--coeff", "gf:5"], 0),
    ("eval_gf5_div", ["eval", "1/2", "--coeff", "gf:5"], 0),
    ("eval_lex", ["eval", "t^(0, 1) + t^(1, 0)", "--group", "q2lex"], 0),
    ("eval_lex_trunc", ["eval", "trunc(t^(0, 3) + t^(1, 0), (1, 0))", "--group", "q2lex"], 0),
    ("eval_power", ["eval", "(1+t)^3"], 0),
    ("eval_neg_power", ["eval", "(1-t)^-2", "--bound", "4"], 0),
    ("eval_z_group", ["eval", "t^3 - t", "--group", "z"], 0),
    ("eval_div_monomial", ["eval", "(t^2 + t^3)/t"], 0),
    ("eval_json_product", ["eval", "(1+t)*(1-t)", "--json"], 0),
    ("eval_json_geometric", ["eval", "1/(1-t)", "--bound", "4", "--json"], 0),
    ("eval_json_sp", ["eval", "sp(t^(-1) + t^2)", "--json"], 0),
    ("err_parse_ratio", ["eval", "t^(1/0)"], 2),
    ("err_unknown_func", ["eval", "foo(t)"], 2),
    ("err_div_zero", ["eval", "1/0"], 2),
    ("err_lex_division", ["eval", "1/(1 + t^((0, 1)))", "--group", "q2lex"], 2),
    ("err_sp_grid", ["eval", "sp(1/(1-t))"], 2),
    ("check_hahn_q_q", ["check", "hahn", "--samples", "120", "--seed", "7"], 0),
    ("check_hahn_z_gf5", ["check", "hahn", "--group", "z", "--coeff", "gf:5", "--samples", "120", "--seed", "7"], 0),
    ("check_le_trunc", ["check", "mutant:le-trunc", "--samples", "200", "--seed", "7"], 1),
    ("check_bad_tau_hom", ["check", "mutant:bad-tau-hom", "--samples", "200", "--seed", "7"], 1),
    ("check_bad_tau_sp", ["check", "mutant:bad-tau-sp", "--samples", "200", "--seed", "7"], 1),
    ("check_nonadditive", ["check", "mutant:nonadditive-trunc", "--samples", "200", "--seed", "7"], 1),
    ("check_unknown_model", ["check", "nosuch"], 2),
    ("check_json_mutant", ["check", "mutant:le-trunc", "--samples", "120", "--seed", "7", "--json"], 1),
    ("embed_roundtrip", ["embed", "2 + t^(1/2)", "--max-terms", "10"], 0),
    ("embed_geometric", ["embed", "1/(1-t)", "--max-terms", "3"], 0),
    ("embed_zero", ["embed", "0", "--max-terms", "5"], 0),
    ("embed_budget_one", ["embed", "5*t^(-2) + 7*t^3", "--max-terms", "1"], 0),
    ("embed_json", ["embed", "1/(1-t)", "--max-terms", "3", "--json"], 0),
    ("embed_missing_budget", ["embed", "1+t"], 2),
    ("embed_gf5", ["embed", "2 + 3*t + 3*t^2", "--coeff", "gf:5", "--max-terms", "10"], 0),
    ("embed_exponent_bound", ["embed", "1/(1-t)", "--bound", "4"], 0),
]
