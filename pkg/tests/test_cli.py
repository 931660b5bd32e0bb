import json
import subprocess
import sys

import pytest

from conftest import CLI_CORPUS, GOLDEN_DIR, golden_text, run_cli
from hahnfield import FiniteSeries


@pytest.mark.parametrize(
    "name,argv,expected_exit", CLI_CORPUS, ids=[c[0] for c in CLI_CORPUS]
)
def test_golden_corpus(name, argv, expected_exit):
    code, out, err = run_cli(argv)
    assert code == expected_exit
    golden = (GOLDEN_DIR / f"{name}.txt").read_text()
    assert golden_text(code, out, err) == golden


def test_outputs_byte_identical_across_runs():
    for name, argv, _ in CLI_CORPUS:
        first = run_cli(argv)
        second = run_cli(argv)
        assert first == second, name


def test_json_round_trips_through_series_schema():
    code, out, _ = run_cli(["eval", "(1+t)*(1-t)", "--json"])
    assert code == 0
    data = json.loads(out)
    series = FiniteSeries.from_json_dict(data)
    assert json.dumps(series.to_json_dict(), separators=(",", ":")) == out.strip()


def test_json_check_report_shape():
    code, out, _ = run_cli(
        ["check", "mutant:le-trunc", "--samples", "120", "--seed", "7", "--json"]
    )
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False
    t2 = next(c for c in data["checks"] if c["axiom"] == "T2")
    assert t2["status"] == "fail" and t2["seed"] == 7


def test_seed_env_fallback(monkeypatch):
    monkeypatch.setenv("HAHN_SEED", "7")
    _, with_env, _ = run_cli(["check", "hahn", "--samples", "40"])
    monkeypatch.delenv("HAHN_SEED")
    _, with_flag, _ = run_cli(["check", "hahn", "--samples", "40", "--seed", "7"])
    assert with_env == with_flag
    _, default_seed, _ = run_cli(["check", "hahn", "--samples", "40"])
    assert "seed 0" in default_seed


def test_usage_error_exit_code():
    code, _, _ = run_cli(["eval"])  # missing expression
    assert code == 2
    code, _, _ = run_cli(["nosuchcommand"])
    assert code == 2


def test_console_script_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "hahnfield.cli", "eval", "(1+t)*(1-t)"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert result.returncode == 0
    assert result.stdout == "1 - t^2\n"


def test_serve_command_exists():
    # wiring only: the subcommand parses and resolves to the serve handler
    from hahnfield.cli import build_parser, cmd_serve

    args = build_parser().parse_args(["serve", "--port", "9999"])
    assert args.handler is cmd_serve and args.port == 9999
