"""Batch command-line front end.

Subcommands run the verification suites and export matrices:

  relations   bracket-identity suite over Q(q, a)
  pairing     PBW pairing diagonality / Gram matrices
  rep         vector-representation checks at a given N
  rmatrix     assemble R(z) and optionally export or diff it
  ybe         Yang-Baxter verification (exact or numeric)
  cartan      character evaluation of the Cartan canonical element

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.
Reports are deterministic for a fixed invocation: text reports are
line-oriented ``id | params | PASS/FAIL | residual``; JSON reports and
matrix exports use a stable schema with canonical scalar strings.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import freealg, rep, rmatrix, ualg
from .scalars import default_context


def _relation_grid(height: int):
    for n in range(0, height):
        if 2 * n + 1 <= height:
            yield "1", {"n": n}
            yield "3", {"n": n}
    for n in range(0, height):
        for r in range(2, height + 1):
            if 2 * n + r <= height:
                yield "2", {"n": n, "r": r}
                yield "4", {"n": n, "r": r}
    for n in range(0, height):
        for r in range(1, height + 1):
            if n + r <= height:
                yield "5", {"n": n, "r": r}
                yield "6", {"n": n, "r": r}
    for x in range(1, height + 1):
        for y in range(1, height + 1):
            if x + y <= height + 1:
                yield "7", {"x": x, "y": y}
    for x in range(0, height):
        for y in range(0, height):
            if x + y + 1 <= height:
                yield "8", {"x": x, "y": y}
    for n in range(0, height):
        for k in range(1, height + 1):
            if n + k <= height:
                yield "9", {"n": n, "k": k}
                yield "10", {"n": n, "k": k}


def _params_str(params: dict) -> str:
    return ",".join("%s=%s" % (k, params[k]) for k in sorted(params))


class Reporter:
    def __init__(self, fmt: str, out_path: str | None):
        self.fmt = fmt
        self.out_path = out_path
        self.rows: list[dict] = []

    def add(self, check_id: str, params: str, ok: bool, residual: str = "0"):
        self.rows.append({"id": check_id, "params": params, "ok": bool(ok),
                          "residual": residual if not ok or residual != "0" else "0"})

    @property
    def all_ok(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def emit(self) -> int:
        if self.fmt == "json":
            text = json.dumps({"results": self.rows, "ok": self.all_ok},
                              indent=2, sort_keys=True) + "\n"
        else:
            lines = ["%s | %s | %s | %s" % (
                r["id"], r["params"] or "-", "PASS" if r["ok"] else "FAIL", r["residual"])
                for r in self.rows]
            lines.append("overall | - | %s | -" % ("PASS" if self.all_ok else "FAIL"))
            text = "\n".join(lines) + "\n"
        if self.out_path:
            with open(self.out_path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0 if self.all_ok else 1


def cmd_relations(args) -> int:
    alg = freealg.default_algebra()
    reporter = Reporter(args.format, args.out)
    for side in ("E", "F"):
        for num, params in _relation_grid(args.height):
            name = side + "Q" + num
            ok, residual = freealg.verify_relation(name, alg, **params)
            reporter.add(name, _params_str(params), ok,
                         "0" if ok else "%d terms" % len(residual.terms))
    return reporter.emit()


def cmd_pairing(args) -> int:
    alg = ualg.default_ualgebra()
    reporter = Reporter(args.format, args.out)
    for row in ualg.verify_pbw_pairing(alg, args.height):
        kind = "diagonal" if row["row"] == row["col"] else "off-diagonal"
        reporter.add("pbw-pairing-" + kind,
                     "weight=%s,row=%s,col=%s" % (row["weight"], row["row"], row["col"]),
                     row["pass"])
    return reporter.emit()


def cmd_rep(args) -> int:
    cfg = rep.RepConfig(args.N)
    reporter = Reporter(args.format, args.out)
    for name, params, ok, residual in rep.verify_rep(cfg):
        reporter.add(name, params, ok, "0" if ok else "%d entries" % residual.nnz())
    return reporter.emit()


def _render_entry(value) -> str:
    if isinstance(value, rmatrix.AtomEntry):
        return rmatrix.render_atom_entry(value)
    return value.to_string()


def cmd_rmatrix(args) -> int:
    if args.a is not None:
        sys.stderr.write("error: the R-matrix realization pins a = q^-2*omega; "
                         "--a cannot be overridden here\n")
        return 2
    cfg = rep.RepConfig(args.N)
    mat = rmatrix.assemble_R(cfg, mode=args.mode, order=args.order)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(mat.to_json(render=_render_entry) + "\n")
    reporter = Reporter(args.format, None)
    if args.N == 1 and args.mode == "atoms":
        stripped = rmatrix.strip_common_atom(mat)
        expected = rmatrix.six_vertex_R(cfg.ctx).scaled(1 / cfg.ctx.gen("s"))
        reporter.add("six-vertex-transcription", "N=1", stripped == expected)
    elif args.N == 2 and args.mode == "atoms":
        diffs = rmatrix.r2_diff(cfg, mat)
        reporter.add("r2-transcription", "N=2", not diffs,
                     "0" if not diffs else ";".join("(%d,%d)" % d for d in diffs))
    else:
        reporter.add("assembled", "N=%d,mode=%s" % (args.N, args.mode), True)
    return reporter.emit()


def cmd_ybe(args) -> int:
    reporter = Reporter(args.format, args.out)
    if args.mode == "exact":
        if args.N == 1:
            reporter.add("ybe-exact", "N=1", rmatrix.ybe_n1_exact())
        elif args.N == 2:
            reporter.add("ybe-exact", "N=2", rmatrix.ybe_n2_exact())
        else:
            sys.stderr.write("error: exact mode supports N = 1 and N = 2\n")
            return 2
    else:
        q = args.q if args.q is not None else 0.8
        if abs(abs(q) - 1) < 1e-12:
            sys.stderr.write("error: numeric mode needs |q| != 1\n")
            return 2
        if args.z is not None and args.w is not None:
            points = [(complex(args.z), complex(args.w))]
        else:
            points = rmatrix.random_spectral_points(q, args.count)
        for z, w in points:
            res = rmatrix.numeric_ybe_residual(args.N, q, z, w)
            reporter.add("ybe-numeric",
                         "N=%d,q=%g,z=%.6g%+.6gj,w=%.6g%+.6gj"
                         % (args.N, q, z.real, z.imag, w.real, w.imag),
                         res <= args.tol, "%.3e" % res)
    return reporter.emit()


def cmd_cartan(args) -> int:
    reporter = Reporter(args.format, args.out)
    pairs = [(1, 1), (3, 2), (5, 3)]
    rng = range(0, 3)
    for x, y in pairs:
        ok = all(
            rmatrix.cartan_universal_check(x, y, (a, b, x0, x1, y0, y1))
            for a in rng for b in rng for x0 in rng
            for x1 in rng for y0 in rng for y1 in rng)
        reporter.add("cartan-canonical", "x=%d,y=%d" % (x, y), ok)
    return reporter.emit()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaffine",
        description="Exact verification suites for a two-parameter quantum "
                    "affine sl2, its vector representation and R-matrix.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, height=4, N=1):
        p.add_argument("--N", type=int, default=N, help="root-of-unity order")
        p.add_argument("--q", type=float, default=None, help="numeric q value")
        p.add_argument("--a", type=str, default=None,
                       help="second parameter (defaults to q^-2*omega where applicable)")
        p.add_argument("--order", type=int, default=12, help="series truncation order")
        p.add_argument("--height", type=int, default=height, help="delta-height bound")
        p.add_argument("--mode", type=str, default="atoms")
        p.add_argument("--out", type=str, default=None, help="output path")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("relations", help="bracket identity suite")
    common(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("pairing", help="PBW pairing suite")
    common(p)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("rep", help="vector representation checks")
    common(p, N=2)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("rmatrix", help="assemble and export R(z)")
    common(p, N=1)
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("ybe", help="Yang-Baxter verification")
    common(p, N=1)
    p.add_argument("--z", type=complex, default=None)
    p.add_argument("--w", type=complex, default=None)
    p.add_argument("--count", type=int, default=20, help="random numeric points")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_ybe)
    p.set_defaults(mode="exact")

    p = sub.add_parser("cartan", help="Cartan canonical element characters")
    common(p)
    p.set_defaults(func=cmd_cartan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
