"""Thin command-line client for the compute service.

By default requests are dispatched to the in-process app over an ASGI test
transport; pass --server to talk to a running instance instead. Exit codes:
0 success, 1 verification failure, 2 parse/usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys


def _client(args):
    if args.server:
        import httpx

        return httpx.Client(base_url=args.server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from starlette.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(args, path: str, payload: dict):
    with _client(args) as client:
        resp = client.post(path, json=payload)
    if resp.status_code == 422:
        print(f"error: {resp.json().get('detail', 'invalid request')}",
              file=sys.stderr)
        sys.exit(2)
    if resp.status_code != 200:
        print(f"error: HTTP {resp.status_code}", file=sys.stderr)
        sys.exit(2)
    return resp.json()


def _emit_table(data: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(data, indent=1, sort_keys=True))
        return
    print("# basis")
    for i, row in enumerate(data["basis"]):
        if isinstance(row, dict):
            cells = [str(i)] + [f"{k}={row[k]}" for k in sorted(row)]
        else:
            cells = [str(i), str(row)]
        print("\t".join(cells))
    print("# products\tleft\tright\tresult")
    for (i, j, k) in data["products"]:
        print(f"\t{i}\t{j}\t{'0' if k is None else k}")
    print("# differentials\tbasis\tterms")
    for (i, ks) in data["differentials"]:
        print(f"\t{i}\t{','.join(map(str, ks)) if ks else '-'}")


def _emit_reports(data: dict, fmt: str) -> int:
    print(json.dumps(data, indent=1, sort_keys=True))
    return 0 if data.get("status") == "pass" else 1


def _read_diagram(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read diagram {path}: {exc}", file=sys.stderr)
        sys.exit(2)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="strandcat",
        description="strand categories, nil Hecke algebras and gluing checks")
    parser.add_argument("--server", help="base URL of a running service")
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hecke", help="nil Hecke multiplication/differential tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--affine", action="store_true")
    p.add_argument("--lmax", type=int, default=3)
    p.add_argument("--cbound", type=int, default=1)

    p = sub.add_parser("affine", help="strands algebra A(n) tables")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("algebra", help="strand category tables of a diagram")
    p.add_argument("diagram")
    p.add_argument("--objects", required=True,
                   help="comma-separated mark ids")
    p.add_argument("--mu", type=int, default=4)
    p.add_argument("-W", "--winding", type=int, default=2)
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--max-strands", type=int, default=1)

    p = sub.add_parser("glue", help="verify the gluing isomorphism")
    p.add_argument("diagrams", nargs="+")
    p.add_argument("--xi-out", default="xi1")
    p.add_argument("--xi-in", default="xi2")
    p.add_argument("--mu", type=int, default=2)
    p.add_argument("-W", "--winding", type=int, default=2)

    p = sub.add_parser("theta", help="tensor-algebra presentation check")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--cbound", type=int, default=2)

    p = sub.add_parser("dual", help="kappa-hat matrix and zigzag report")
    p.add_argument("--marks", required=True, help="comma-separated rationals")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--oriented-middle", action="store_true")

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--only", default=None,
                   help="comma-separated criterion numbers")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    if args.command == "hecke":
        data = _post(args, "/hecke", {"n": args.n, "affine": args.affine,
                                      "lmax": args.lmax, "cbound": args.cbound})
        _emit_table(data, args.format)
        return 0
    if args.command == "affine":
        data = _post(args, "/affine", {"n": args.n})
        _emit_table(data, args.format)
        return 0
    if args.command == "algebra":
        payload = {"diagram": _read_diagram(args.diagram),
                   "objects": args.objects.split(","), "mu": args.mu,
                   "winding": args.winding, "max_strands": args.max_strands}
        if args.lmax is not None:
            payload["lmax"] = args.lmax
        data = _post(args, "/algebra", payload)
        _emit_table(data, args.format)
        return 0
    if args.command == "glue":
        payload = {"diagrams": [_read_diagram(d) for d in args.diagrams],
                   "xi_out": args.xi_out, "xi_in": args.xi_in,
                   "mu": args.mu, "winding": args.winding}
        data = _post(args, "/glue", payload)
        return _emit_reports({"status": data["status"], "reports": [data]},
                             args.format)
    if args.command == "theta":
        data = _post(args, "/theta", {"s": args.s, "cbound": args.cbound})
        return _emit_reports({"status": data["status"], "reports": [data]},
                             args.format)
    if args.command == "dual":
        data = _post(args, "/dual", {"marks": args.marks.split(","),
                                     "n": args.n,
                                     "oriented_middle": args.oriented_middle})
        return _emit_reports(data, args.format)
    if args.command == "selftest":
        payload = {"seed": args.seed}
        if args.only:
            payload["only"] = args.only.split(",")
        data = _post(args, "/selftest", payload)
        for rep in data["reports"]:
            print(f"criterion {rep.get('criterion')}: {rep['check']}: "
                  f"{rep['status']}")
        return _emit_reports(data, args.format)
    return 2


if __name__ == "__main__":
    sys.exit(main())
