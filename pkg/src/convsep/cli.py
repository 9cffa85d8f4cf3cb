"""Thin command-line client for the convsep service.

By default the commands call the FastAPI app in-process (no network); pass
``--url`` to talk to a running server instead.  All input and output is
JSON on files or stdin/stdout.

Exit codes: 0 success, 1 verification failure (tolerance breach or an
entangled verdict), 2 usage error (bad arguments or malformed JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url)
    # in-process: drive the ASGI app directly, no sockets involved
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app, raise_server_exceptions=False)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        print(f"malformed JSON in {path}: line {exc.lineno} column {exc.colno}: "
              f"{exc.msg}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _post(client: httpx.Client, endpoint: str, payload) -> dict:
    response = client.post(endpoint, json=payload)
    if response.status_code in (400, 422):
        detail = response.json().get("detail", response.text)
        print(f"request rejected: {detail}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    response.raise_for_status()
    return response.json()


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        print(f"expected a comma-separated integer list, got {text!r}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _cmd_construct(args, client):
    payload = _read_json(args.input)
    _emit(_post(client, "/construct", payload))
    return 0


def _cmd_dual(args, client):
    payload = _read_json(args.input)
    _emit(_post(client, "/dual", payload))
    return 0


def _cmd_synthesize(args, client):
    decomposition = _read_json(args.input)
    payload = {
        "decomposition": decomposition,
        "group": {"moduli": _parse_int_list(args.group)},
        "primal_weight": args.primal_weight,
    }
    result = _post(client, "/synthesize", payload)
    _emit(result)
    return 0 if result["ok"] else VERIFY_ERROR


def _cmd_verify(args, client):
    operator = _read_json(args.input)
    payload = {
        "operator": operator,
        "cuts": args.cut if args.cut else None,
        "decisive": args.decisive,
    }
    result = _post(client, "/verify", payload)
    _emit(result)
    return VERIFY_ERROR if result["status"] == "EntangledPPT" else 0


def _cmd_spectral(args, client):
    mapping = _read_json(args.input)
    result = _post(client, "/spectral", {"mapping": mapping})
    _emit(result)
    return 0


def _standard_intro_vectors():
    e1 = [[1.0, 0.0], [0.0, 0.0]]
    e2 = [[0.0, 0.0], [1.0, 0.0]]
    return {"v0": e1, "v1": e2, "w0": e1, "w1": e2}


def _cmd_demo_intro(args, client):
    payload = _read_json(args.input) if args.input else _standard_intro_vectors()
    result = _post(client, "/demo-intro", payload)
    _emit(result)
    return 0 if result["ok"] else VERIFY_ERROR


def _cmd_roundtrip(args, client):
    payload = {
        "seed": args.seed,
        "moduli": _parse_int_list(args.group),
        "dims": _parse_int_list(args.dims),
        "terms": args.terms,
        "primal_weight": args.primal_weight,
    }
    result = _post(client, "/roundtrip", payload)
    _emit(result)
    return 0 if result["ok"] else VERIFY_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convsep",
        description="Separable operators from tensor convolutions on finite abelian groups",
    )
    parser.add_argument("--url", default=None,
                        help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the operator from mappings (primal side)")
    p.add_argument("--input", default="-", help="mappings JSON file or '-' for stdin")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("dual", help="build the operator from mappings (Fourier side)")
    p.add_argument("--input", default="-", help="mappings JSON file or '-' for stdin")
    p.set_defaults(handler=_cmd_dual)

    p = sub.add_parser("synthesize",
                       help="realize a separable decomposition by mappings on a group")
    p.add_argument("--input", default="-", help="decomposition JSON file or '-'")
    p.add_argument("--group", required=True, help="comma-separated moduli, e.g. 2,3")
    p.add_argument("--primal-weight", type=float, default=1.0, dest="primal_weight")
    p.set_defaults(handler=_cmd_synthesize)

    p = sub.add_parser("verify", help="PPT separability check of an operator")
    p.add_argument("--input", default="-", help="operator JSON file or '-'")
    p.add_argument("--cut", type=int, action="append",
                   help="bipartition cut to test (repeatable; default: all)")
    p.add_argument("--decisive", action="store_true",
                   help="certify separability in the 2x2 / 2x3 decisive regime")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("spectral", help="pairwise spectral classification of a mapping")
    p.add_argument("--input", default="-", help="mapping JSON file or '-'")
    p.set_defaults(handler=_cmd_spectral)

    p = sub.add_parser("demo-intro",
                       help="order-2 group worked example: primal vs Fourier form")
    p.add_argument("--input", default=None,
                   help="JSON with v0,v1,w0,w1 (default: standard basis)")
    p.set_defaults(handler=_cmd_demo_intro)

    p = sub.add_parser("roundtrip",
                       help="random decomposition -> mappings -> operator residual")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--group", required=True, help="comma-separated moduli")
    p.add_argument("--dims", required=True, help="comma-separated factor dimensions")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--primal-weight", type=float, default=1.0, dest="primal_weight")
    p.set_defaults(handler=_cmd_roundtrip)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with _client(args.url) as client:
        return args.handler(args, client)


if __name__ == "__main__":
    sys.exit(main())
