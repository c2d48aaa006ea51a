"""Command-line client.

The CLI is a thin client over the HTTP service: by default it mounts the
application in process (no server needed, same contract), and --server
points it at a running instance instead. Output is deterministic: the
same invocation produces byte-identical bytes.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from . import __version__
from .service import app

SEQ_FORMATS = ("bfile", "csv", "json", "text")
REPORT_FORMATS = ("text", "csv", "json")


class ServiceClient:
    """POSTs either to the in-process app or to a remote base URL."""

    def __init__(self, server: str | None = None):
        self.server = server

    def _request(self, method: str, path: str, payload: dict | None) -> httpx.Response:
        async def go() -> httpx.Response:
            if self.server:
                transport = None
                base = self.server
            else:
                transport = httpx.ASGITransport(app=app)
                base = "http://noncross.local"
            async with httpx.AsyncClient(
                transport=transport, base_url=base, timeout=None
            ) as client:
                if method == "GET":
                    return await client.get(path)
                return await client.post(path, json=payload)

        return asyncio.run(go())

    def post(self, path: str, payload: dict) -> dict:
        resp = self._request("POST", path, payload)
        if resp.status_code != 200:
            detail = resp.json().get("detail", resp.text)
            raise SystemExit(f"error: {detail}")
        return resp.json()

    def get(self, path: str) -> dict:
        resp = self._request("GET", path, None)
        resp.raise_for_status()
        return resp.json()


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Read 'n value' lines back into pairs; inverse of the bfile writer."""
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        n, value = line.split()
        pairs.append((int(n), int(value)))
    return pairs


def _format_seq(data: dict, fmt: str) -> str:
    values = data["values"]
    if fmt == "bfile":
        return "".join(f"{v['n']} {v['value']}\n" for v in values)
    if fmt == "csv":
        lines = ["n,value"] + [f"{v['n']},{v['value']}" for v in values]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    width = max((len(str(v["value"])) for v in values), default=1)
    lines = [f"{data['sequence']}({v['n']}) = {v['value']:>{width}}" for v in values]
    return "\n".join(lines) + "\n"


def _format_checks(data: dict, fmt: str) -> str:
    checks = data["checks"]
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        w = _csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "params", "status", "lhs", "rhs", "location"])
        for c in checks:
            w.writerow(
                [
                    c["check"],
                    json.dumps(c["params"], sort_keys=True),
                    c["status"],
                    c["lhs"] or "",
                    c["rhs"] or "",
                    c["location"] or "",
                ]
            )
        return buf.getvalue()
    lines = []
    for c in checks:
        tag = "PASS" if c["status"] == "pass" else "FAIL"
        detail = json.dumps(c["params"], sort_keys=True) if c["params"] else ""
        line = f"[{tag}] {c['check']} {detail}".rstrip()
        if c["status"] != "pass":
            where = f" at {c['location']}" if c.get("location") else ""
            line += f"{where}: lhs={c['lhs']} rhs={c['rhs']}"
        lines.append(line)
    n_fail = sum(1 for c in checks if c["status"] != "pass")
    total = len(checks)
    lines.append(f"{n_fail} of {total} checks FAILED" if n_fail else f"all {total} checks passed")
    return "\n".join(lines) + "\n"


def _format_oracle(data: dict, fmt: str) -> str:
    rows = data["rows"]
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        header = "n,connected,formula,edges,edges_formula,match"
        lines = [header]
        for r in rows:
            lines.append(
                f"{r['n']},{r['connected']},{r['formula']},"
                f"{'' if r['edges'] is None else r['edges']},"
                f"{'' if r['edges_formula'] is None else r['edges_formula']},"
                f"{str(r['match']).lower()}"
            )
        return "\n".join(lines) + "\n"
    lines = []
    for r in rows:
        tag = "OK" if r["match"] else "MISMATCH"
        line = f"n={r['n']} connected={r['connected']} formula={r['formula']}"
        if r["edges"] is not None:
            line += f" edges={r['edges']} expected={r['edges_formula']}"
        lines.append(f"{line} {tag}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noncross",
        description="Connected noncrossing graph counts and their identities",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--server", help="base URL of a running service; default runs in process")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print sequence values")
    p_seq.add_argument("sequence", choices=["N", "f1", "f2", "f3", "f4", "f5"])
    p_seq.add_argument("--from", dest="start", type=int, required=True)
    p_seq.add_argument("--to", dest="stop", type=int, required=True)
    p_seq.add_argument("--method", default="closed")
    p_seq.add_argument("--format", dest="fmt", choices=SEQ_FORMATS, default="bfile")

    p_verify = sub.add_parser("verify", help="run a verification suite or one identity")
    p_verify.add_argument("suite")
    p_verify.add_argument("--order", type=int)
    p_verify.add_argument("--n-max", dest="n_max", type=int)
    p_verify.add_argument("--a-max", dest="a_max", type=int)
    p_verify.add_argument("--m-max", dest="m_max", type=int)
    p_verify.add_argument("--n-min", dest="n_min", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--i", type=int)
    p_verify.add_argument("--j", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--l", type=int)
    p_verify.add_argument("--instances", type=int)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", dest="fmt", choices=REPORT_FORMATS, default="text")

    p_oracle = sub.add_parser("oracle", help="enumerate and compare against the formulas")
    p_oracle.add_argument("--to", type=int, default=8)
    p_oracle.add_argument("--edges", action="store_true")
    p_oracle.add_argument("--format", dest="fmt", choices=REPORT_FORMATS, default="text")

    p_all = sub.add_parser("all", help="run the full verification battery")
    p_all.add_argument("--order", type=int, default=60)
    p_all.add_argument("--oracle-to", dest="oracle_to", type=int, default=8)
    p_all.add_argument("--congruence-to", dest="congruence_to", type=int, default=2187)
    p_all.add_argument("--agree-to", dest="agree_to", type=int, default=60)
    p_all.add_argument("--f-to", dest="f_to", type=int, default=40)
    p_all.add_argument("--kummer-n", dest="kummer_n", type=int, default=30)
    p_all.add_argument("--kummer-a", dest="kummer_a", type=int, default=20)
    p_all.add_argument("--instances", type=int, default=100)
    p_all.add_argument("--seed", type=int, default=0)
    p_all.add_argument("--format", dest="fmt", choices=REPORT_FORMATS, default="text")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    client = ServiceClient(args.server)

    if args.command == "seq":
        data = client.post(
            "/seq",
            {
                "sequence": args.sequence,
                "start": args.start,
                "stop": args.stop,
                "method": args.method,
            },
        )
        sys.stdout.write(_format_seq(data, args.fmt))
        return 0

    if args.command == "verify":
        payload = {
            "suite": args.suite,
            "order": args.order,
            "n_max": args.n_max,
            "a_max": args.a_max,
            "m_max": args.m_max,
            "n_min": args.n_min,
            "r": args.r,
            "i": args.i,
            "j": args.j,
            "k": args.k,
            "l": args.l,
            "instances": args.instances,
            "seed": args.seed,
        }
        data = client.post("/verify", payload)
        sys.stdout.write(_format_checks(data, args.fmt))
        return 0 if data["passed"] else 1

    if args.command == "oracle":
        data = client.post("/oracle", {"to": args.to, "edges": args.edges})
        sys.stdout.write(_format_oracle(data, args.fmt))
        return 0 if data["passed"] else 1

    if args.command == "all":
        data = client.post(
            "/all",
            {
                "order": args.order,
                "oracle_to": args.oracle_to,
                "congruence_to": args.congruence_to,
                "agree_to": args.agree_to,
                "f_to": args.f_to,
                "kummer_n": args.kummer_n,
                "kummer_a": args.kummer_a,
                "instances": args.instances,
                "seed": args.seed,
            },
        )
        sys.stdout.write(_format_checks(data, args.fmt))
        return 0 if data["passed"] else 1

    if args.command == "serve":
        import uvicorn

        uvicorn.run("noncross.service:app", host=args.host, port=args.port)
        return 0

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
