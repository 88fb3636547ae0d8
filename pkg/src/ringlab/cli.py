"""Command-line driver: a thin client of the HTTP service.

By default requests are dispatched to the service in-process through a
small ASGI bridge, so no server is needed; ``--server URL`` switches to a
live instance.  Exit codes: 0 when no non-exploratory counterexample was
reported, 1 when one was, 2 for usage, parse, or service errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys


def _asgi_call(app, method: str, path: str, body: bytes | None) -> tuple[int, bytes]:
    """Drive one request through an ASGI application synchronously."""

    async def run():
        payload = body or b""
        scope = {
            "type": "http",
            "asgi": {"version": "3.0", "spec_version": "2.3"},
            "http_version": "1.1",
            "method": method,
            "scheme": "http",
            "path": path,
            "raw_path": path.encode(),
            "query_string": b"",
            "root_path": "",
            "headers": [
                (b"host", b"ringlab.local"),
                (b"content-type", b"application/json"),
                (b"content-length", str(len(payload)).encode()),
            ],
            "client": ("127.0.0.1", 0),
            "server": ("ringlab.local", 80),
        }
        sent = False

        async def receive():
            nonlocal sent
            if sent:
                return {"type": "http.disconnect"}
            sent = True
            return {"type": "http.request", "body": payload, "more_body": False}

        status: dict = {}
        chunks: list[bytes] = []

        async def send(message):
            if message["type"] == "http.response.start":
                status["code"] = message["status"]
            elif message["type"] == "http.response.body":
                chunks.append(message.get("body", b""))

        await app(scope, receive, send)
        return status["code"], b"".join(chunks)

    return asyncio.run(run())


class ServiceClient:
    """POST/GET against either the in-process app or a remote server."""

    def __init__(self, server: str | None = None):
        self.server = server
        if server is None:
            from .service import app

            self._app = app

    def request(self, method: str, path: str, payload: dict | None = None) -> tuple[int, str]:
        if self.server is None:
            body = json.dumps(payload).encode() if payload is not None else None
            status, raw = _asgi_call(self._app, method, path, body)
            return status, raw.decode()
        import httpx

        with httpx.Client(base_url=self.server, timeout=600.0) as client:
            if method == "GET":
                resp = client.get(path)
            else:
                resp = client.post(path, json=payload)
            return resp.status_code, resp.text


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_error(status: int, text: str) -> None:
    try:
        payload = json.loads(text)
        err = payload.get("error", payload)
        code = err.get("code", f"HTTP_{status}")
        message = err.get("message", text.strip())
    except (ValueError, AttributeError):
        code = f"HTTP_{status}"
        message = text.strip()
    print(f"error[{code}]: {message}", file=sys.stderr)


def _claims_exit_code(report: dict) -> int:
    for verdict in report.get("claims", []):
        if verdict["status"] == "COUNTEREXAMPLE" and not verdict["exploratory"]:
            return 1
    return 0


def _print_verdicts(report: dict) -> None:
    for verdict in report.get("claims", []):
        variant = verdict["variant"] or "-"
        flag = " (exploratory)" if verdict["exploratory"] and verdict["status"] == "COUNTEREXAMPLE" else ""
        print(f"{verdict['ring']:<14} {verdict['claim']:<12} {variant:<13} {verdict['status']}{flag}")
    summary = report.get("summary")
    if summary:
        print(
            f"total={summary['total']} holds={summary['holds']} "
            f"counterexamples={summary['counterexamples']} "
            f"not_applicable={summary['not_applicable']} "
            f"exploratory_flags={summary['exploratory_flags']}"
        )


def _print_analysis(report: dict) -> None:
    info = report["ring"]
    print(f"ring {info['label']}: size {info['size']}")
    props = report["properties"]
    for key in ("reduced", "semiprimitive", "mccoy", "sac", "pp", "baer"):
        print(f"  {key}: {props[key]['value']}")
    print(f"  max_real_level: {props['max_real_level']['value']}")
    for key in ("pw_intersection", "pw_product", "upw_intersection", "upw_product",
                "w_intersection", "w_product", "uw_intersection", "uw_product", "wsa"):
        entry = props[key]
        line = f"  {key}: {entry['value']}"
        if entry.get("witness") is not None:
            line += f" (witness {entry['witness']})"
        print(line)
    spectrum = report["spectrum"]
    print(f"  primes: {spectrum['primes']}")
    for kind in ("bz", "bzo"):
        lat = report["lattices"][kind]
        print(
            f"  {kind}: {len(lat['elements'])} nodes, well_defined={lat['formula_well_defined']['value']}, "
            f"join={lat['formula_is_join']['value']}, meet={lat['formula_is_meet']['value']}"
        )


def _read_script(path: str) -> str | None:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        print(f"error[IO]: {err}", file=sys.stderr)
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite-ring calculator and claim verification harness",
    )
    parser.add_argument("--server", help="URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full class/spectrum/lattice report for one ring")
    p.add_argument("file", help="ring-definition script")
    p.add_argument("--ring", required=True)
    p.add_argument("--json", dest="json_path")

    p = sub.add_parser("verify", help="run claims against one ring")
    p.add_argument("file")
    p.add_argument("--ring", required=True)
    p.add_argument("--claim", required=True, help="claim id or 'all'")
    p.add_argument("--variant", choices=["intersection", "product", "both"])
    p.add_argument("--json", dest="json_path")

    p = sub.add_parser("corpus", help="sweep claims over the default corpus")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--json", dest="json_path")

    p = sub.add_parser("lattice", help="DOT rendering of the bz or bzo lattice")
    p.add_argument("file")
    p.add_argument("--ring", required=True)
    p.add_argument("--which", required=True, choices=["bz", "bzo"])
    p.add_argument("--dot", dest="dot_path", required=True)

    p = sub.add_parser("spectrum", help="DOT rendering of the prime spectrum")
    p.add_argument("file")
    p.add_argument("--ring", required=True)
    p.add_argument("--dot", dest="dot_path", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    client = ServiceClient(args.server)

    if args.command == "analyze":
        script = _read_script(args.file)
        if script is None:
            return 2
        status, text = client.request("POST", "/analyze", {"script": script, "ring": args.ring})
        if status != 200:
            _print_error(status, text)
            return 2
        _write_output(text, args.json_path)
        _print_analysis(json.loads(text))
        return 0

    if args.command == "verify":
        script = _read_script(args.file)
        if script is None:
            return 2
        claims = None if args.claim == "all" else [args.claim]
        payload = {"script": script, "ring": args.ring, "claims": claims, "variant": args.variant}
        status, text = client.request("POST", "/verify", payload)
        if status != 200:
            _print_error(status, text)
            return 2
        _write_output(text, args.json_path)
        report = json.loads(text)
        _print_verdicts(report)
        return _claims_exit_code(report)

    if args.command == "corpus":
        claims = args.claims.split(",") if args.claims else None
        status, text = client.request("POST", "/corpus", {"claims": claims, "variant": None})
        if status != 200:
            _print_error(status, text)
            return 2
        _write_output(text, args.json_path)
        report = json.loads(text)
        _print_verdicts(report)
        return _claims_exit_code(report)

    if args.command in ("lattice", "spectrum"):
        script = _read_script(args.file)
        if script is None:
            return 2
        if args.command == "lattice":
            payload = {"script": script, "ring": args.ring, "which": args.which}
            status, text = client.request("POST", "/lattice", payload)
        else:
            payload = {"script": script, "ring": args.ring}
            status, text = client.request("POST", "/spectrum", payload)
        if status != 200:
            _print_error(status, text)
            return 2
        _write_output(text, args.dot_path)
        print(f"wrote {args.dot_path}")
        return 0

    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
