"""``hahn`` — thin command-line client over the HTTP service.

Subcommands eval, check and embed serialize their arguments into the
service's request models and render the responses; by default the calls
run against the ASGI app in-process (no server needed), while --server
points the same client at a running instance (see ``hahn serve``).

Exit codes: 0 success / all checks passed, 1 check failures,
2 usage, parse and evaluation errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Optional

import httpx

SEED_ENV_VAR = "HAHN_SEED"


def _compact(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def _post(path: str, payload: dict, server: Optional[str]) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            return client.post(path, json=payload)

    from .service.app import app

    async def call() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://hahn.local") as client:
            return await client.post(path, json=payload, timeout=300.0)

    return asyncio.run(call())


def _report_error(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict) and "message" in detail:
        message = detail["message"]
        if detail.get("position") is not None:
            message += f" (at offset {detail['position']})"
        print(f"error: {message}", file=sys.stderr)
    elif detail is not None:
        print(f"error: invalid request: {_compact(detail)}", file=sys.stderr)
    else:
        print(f"error: service returned HTTP {response.status_code}", file=sys.stderr)
    return 2


def _resolve_seed(seed: Optional[int]) -> int:
    if seed is not None:
        return seed
    try:
        return int(os.environ.get(SEED_ENV_VAR, "0"))
    except ValueError:
        return 0


def cmd_eval(args: argparse.Namespace) -> int:
    payload = {"expr": args.expr, "group": args.group, "coeff": args.coeff}
    if args.bound is not None:
        payload["bound"] = args.bound
    response = _post("/eval", payload, args.server)
    if response.status_code != 200:
        return _report_error(response)
    body = response.json()
    if args.json:
        if body["kind"] == "series":
            data = dict(body["series"])
            if body.get("truncated_below") is not None:
                data["truncated_below"] = body["truncated_below"]
        elif body["kind"] == "support":
            data = {"support": body["support"]}
        else:
            data = {"valuation": body["valuation"]}
        print(_compact(data))
    else:
        print(body["text"])
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    payload = {
        "model": args.model,
        "group": args.group,
        "coeff": args.coeff,
        "samples": args.samples,
        "seed": _resolve_seed(args.seed),
    }
    response = _post("/check", payload, args.server)
    if response.status_code != 200:
        return _report_error(response)
    body = response.json()
    if args.json:
        print(_compact(body))
    else:
        print(
            f"check {body['model']} over {body['group']}/{body['coeff']} "
            f"(seed {body['seed']}, {body['samples']} instances per check)"
        )
        for item in body["checks"]:
            line = f"{item['axiom']:<22} {item['status']:<5} samples={item['samples']}"
            if item["status"] == "fail":
                line += "  " + _compact(item["counterexample"])
            print(line)
        if body["lemmas_diagnostic"]:
            print("note: axiom failures make the lemma section diagnostic only")
        failed = sum(1 for item in body["checks"] if item["status"] == "fail")
        total = len(body["checks"])
        if failed:
            print(f"result: FAIL ({failed} of {total} checks failed)")
        else:
            print(f"result: PASS ({total} checks)")
    return 0 if body["passed"] else 1


def cmd_embed(args: argparse.Namespace) -> int:
    payload = {"expr": args.expr, "group": args.group, "coeff": args.coeff}
    if args.max_terms is not None:
        payload["max_terms"] = args.max_terms
    if args.bound is not None:
        payload["exponent_bound"] = args.bound
    response = _post("/embed", payload, args.server)
    if response.status_code != 200:
        return _report_error(response)
    body = response.json()
    if args.json:
        data = {
            "group": body["group"],
            "coeff": body["coeff"],
            "terms": body["terms"],
            "exhausted": body["exhausted"],
            "terms_emitted": body["terms_emitted"],
            "residual_valuation": body["residual_valuation"],
        }
        print(_compact(data))
    else:
        print(body["text"])
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_session_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--group", default="q", help="exponent group: z | q | q2lex | qnlex:n")
    sp.add_argument("--coeff", default="q", help="coefficient field: q | gf:p")
    sp.add_argument("--json", action="store_true", help="emit canonical JSON instead of text")
    sp.add_argument("--server", default=None, help="base URL of a running service (default: in-process)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hahn",
        description="Exact Hahn-series arithmetic, truncation-axiom checking and series embedding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression exactly")
    p_eval.add_argument("expr", help="expression, e.g. '(1+t)*(1-t)' or 'trunc(1/(1-t), 4)'")
    p_eval.add_argument("--bound", default=None, help="display bound for lazy division results")
    _add_session_flags(p_eval)
    p_eval.set_defaults(handler=cmd_eval)

    p_check = sub.add_parser("check", help="verify the truncation axioms and lemmas on a model")
    p_check.add_argument(
        "model",
        nargs="?",
        default="hahn",
        help="hahn | mutant:le-trunc | mutant:bad-tau-hom | mutant:bad-tau-sp | mutant:nonadditive-trunc",
    )
    p_check.add_argument("--samples", type=int, default=200, help="instances per check (default 200)")
    p_check.add_argument("--seed", type=int, default=None, help=f"RNG seed (default: ${SEED_ENV_VAR} or 0)")
    _add_session_flags(p_check)
    p_check.set_defaults(handler=cmd_check)

    p_embed = sub.add_parser("embed", help="extract the series representation term by term")
    p_embed.add_argument("expr")
    p_embed.add_argument("--max-terms", type=int, default=None, help="emit at most this many terms")
    p_embed.add_argument("--bound", default=None, help="emit only terms with exponent below this bound")
    _add_session_flags(p_embed)
    p_embed.set_defaults(handler=cmd_embed)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
