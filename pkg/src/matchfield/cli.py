"""Command line front end: a thin client over the HTTP service.

By default requests run against an in-process instance of the app; pass
--url to target a running server instead. Exit codes: 0 on success or
all-pass, 1 on verification failure (machine-readable JSON on stderr),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

from .runner import PARALLELISM_ENV


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=None)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app
    return TestClient(app)


def _post(client: httpx.Client, path: str, payload: dict) -> dict:
    response = client.post(path, json=payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(json.dumps({"error": detail, "endpoint": path}), file=sys.stderr)
        raise SystemExit(1)
    return response.json()


def _partition_arg(text: str) -> list[int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}; expected e.g. 2,3")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("partition parts must be positive integers")
    return parts


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _render(data: dict, fmt: str, text_lines) -> str:
    if fmt == "json":
        return json.dumps(data, indent=1, sort_keys=True) + "\n"
    return "\n".join(text_lines(data)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchfield",
        description="Matching field ideal powers: generators, linear "
                    "quotients, cellular resolutions, exact verification.")
    parser.add_argument("--url", help="remote service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, power=True, fmt=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--partition", type=_partition_arg, required=True,
                       help="comma-separated parts, e.g. 2,3")
        if power:
            p.add_argument("--power", type=int, default=1)
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
            p.add_argument("--out", help="write output to a file")
        return p

    add("gens", "matching field generators", power=False)
    add("power", "minimal generators of the ideal power")

    p = add("order", "linear quotient order with every set(m_j)")
    p.add_argument("--csv", action="store_true",
                   help="emit index,monomial,set_size,set_vars rows")

    p = add("canon", "canonical representation of a power generator")
    p.add_argument("--monomial", required=True, help="e.g. x2*x4*y3^2*z5^2")

    p = add("betti", "Betti numbers from the quotient sets")
    p.add_argument("--oracle", action="store_true",
                   help="also run the Koszul homology oracle and compare")

    p = add("complex", "mapping-cone cell complex")
    p.add_argument("--decomposition", choices=("paper-bl", "generic"),
                   default="paper-bl")
    p.add_argument("--dot", metavar="PATH", help="write the 1-skeleton as DOT")

    p = add("verify", "run verification checks")
    p.add_argument("checks", nargs="*", default=["all"],
                   choices=("lq", "exchange", "containment", "resolution", "all"),
                   help="which checks to run (default: all)")
    p.add_argument("--decomposition", choices=("paper-bl", "generic"),
                   default="paper-bl")

    p = add("hilbert", "Hilbert series of R modulo the ideal power")
    p.add_argument("--closed-form", action="store_true",
                   help="compare with the determinantal closed form")

    p = sub.add_parser("sweep", help="verify a whole grid of instances")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--out", help="write the CSV report to a file")
    p.add_argument("--decomposition", choices=("paper-bl", "generic"),
                   default="paper-bl")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--no-resolution", action="store_true")
    p.add_argument("--parallelism", type=int,
                   help=f"worker processes (or set {PARALLELISM_ENV})")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn
        uvicorn.run("matchfield.service:app", host=args.host, port=args.port)
        return 0

    with _client(args.url) as client:
        return _dispatch(args, client)


def _dispatch(args: argparse.Namespace, client: httpx.Client) -> int:
    if args.command == "gens":
        data = _post(client, "/generators", {"partition": args.partition})
        _emit(_render(data, args.format, lambda d: d["monomials"]), args.out)
        return 0

    if args.command == "power":
        data = _post(client, "/power",
                     {"partition": args.partition, "power": args.power})
        _emit(_render(data, args.format,
                      lambda d: [f"count: {d['count']}"] + d["monomials"]),
              args.out)
        return 0

    if args.command == "order":
        data = _post(client, "/order",
                     {"partition": args.partition, "power": args.power})
        if args.csv:
            lines = ["index,monomial,set_size,set_vars"]
            lines += [f"{e['index']},{e['monomial']},{e['set_size']},"
                      f"{' '.join(e['set_vars'])}" for e in data["entries"]]
            _emit("\n".join(lines) + "\n", args.out)
        else:
            _emit(_render(data, args.format, lambda d: [
                f"{e['index']:4d}  {e['monomial']}  "
                f"{{{', '.join(e['set_vars'])}}}" for e in d["entries"]
            ]), args.out)
        return 0

    if args.command == "canon":
        data = _post(client, "/canon",
                     {"partition": args.partition, "power": args.power,
                      "monomial": args.monomial})
        _emit(_render(data, args.format, lambda d: [d["text"]]), args.out)
        return 0

    if args.command == "betti":
        data = _post(client, "/betti",
                     {"partition": args.partition, "power": args.power,
                      "oracle": args.oracle})
        def lines(d):
            out = [f"betti (from sets): {tuple(d['formula'])}"]
            if d["oracle"] is not None:
                out.append(f"betti (oracle):    {tuple(d['oracle'])}")
                out.append(f"match: {d['match']}")
            return out
        _emit(_render(data, args.format, lines), args.out)
        return 0

    if args.command == "complex":
        data = _post(client, "/complex",
                     {"partition": args.partition, "power": args.power,
                      "decomposition": args.decomposition,
                      "dot": bool(args.dot)})
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(data["dot"])
        payload = {k: v for k, v in data.items() if k != "dot"}
        _emit(_render(payload, args.format, lambda d: [
            f"f-vector: {tuple(d['f_vector'])}",
            f"cells: {len(d['complex']['cells'])}",
            f"boundary terms: {len(d['complex']['boundary'])}",
        ]), args.out)
        return 0

    if args.command == "verify":
        data = _post(client, "/verify",
                     {"partition": args.partition, "power": args.power,
                      "checks": args.checks or ["all"],
                      "decomposition": args.decomposition})
        def lines(d):
            out = []
            for name in ("lq", "exchange", "containment", "resolution"):
                if d.get(name) is not None:
                    status = "pass" if d[name]["ok"] else "FAIL"
                    extra = ""
                    if name == "exchange":
                        extra = f" ({d[name]['violations']} violations / {d[name]['checked']} checked)"
                    if name == "containment":
                        # reported finding, not a requirement
                        out.append(f"containment: {d[name]['violations']} violations "
                                   f"/ {d[name]['checked']} checked (reported)")
                        continue
                    if name == "resolution":
                        extra = (f" (d2={d[name]['d_squared']}, "
                                 f"{d[name]['failures']} bad multidegrees / "
                                 f"{d[name]['multidegrees_checked']})")
                    out.append(f"{name}: {status}{extra}")
            if d.get("betti") is not None:
                out.append(f"betti: {tuple(d['betti'])} oracle "
                           f"{tuple(d['betti_oracle'])} match {d['betti_match']}")
            out.append(f"overall: {'pass' if d['ok'] else 'FAIL'}")
            return out
        _emit(_render(data, args.format, lines), args.out)
        if not data["ok"]:
            partition = ",".join(str(p) for p in args.partition)
            print(json.dumps({
                "error": "verification failed",
                "partition": partition,
                "power": args.power,
                "checks": {k: data[k] for k in
                           ("lq", "exchange", "containment", "resolution")
                           if data.get(k) is not None},
                "replay": f"matchfield verify {' '.join(args.checks or ['all'])} "
                          f"--partition {partition} --power {args.power}",
            }), file=sys.stderr)
            return 1
        return 0

    if args.command == "hilbert":
        data = _post(client, "/hilbert",
                     {"partition": args.partition, "power": args.power,
                      "closed_form": args.closed_form})
        def lines(d):
            out = [
                f"numerator coefficients: {tuple(d['numerator'])}",
                f"denominator exponent:   {d['denominator_exponent']}",
                f"multiplicity:           {d['multiplicity']}",
            ]
            if d["closed_form_numerator"] is not None:
                out.append(f"closed form:            {tuple(d['closed_form_numerator'])}")
                out.append(f"closed form matches:    {d['closed_form_matches']}")
            return out
        _emit(_render(data, args.format, lines), args.out)
        return 0

    if args.command == "sweep":
        parallelism = args.parallelism
        if parallelism is None and os.environ.get(PARALLELISM_ENV):
            parallelism = int(os.environ[PARALLELISM_ENV])
        data = _post(client, "/sweep", {
            "max_n": args.max_n, "max_power": args.max_power,
            "decomposition": args.decomposition,
            "with_oracle": not args.no_oracle,
            "with_resolution": not args.no_resolution,
            "parallelism": parallelism,
        })
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(data["csv"])
        else:
            print(data["csv"], end="")
        if not data["all_pass"]:
            failing = [r for r in data["rows"]
                       if not all(r[k] in (True, None) for k in
                                  ("lq_pass", "exchange_pass", "d_squared_pass",
                                   "bs_acyclicity_pass", "formula_vs_oracle"))]
            print(json.dumps({
                "error": "sweep found failures",
                "failing": [{"partition": r["partition"], "power": r["power"]}
                            for r in failing],
                "replay": [f"matchfield verify all --partition {r['partition']} "
                           f"--power {r['power']}" for r in failing[:10]],
            }), file=sys.stderr)
            return 1
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
