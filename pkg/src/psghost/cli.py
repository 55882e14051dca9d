"""Command-line frontend.

Subcommands: psp, eval, ghost-report, solve, verify, elim-trace.
Exit codes: 0 success, 1 verification failure, 2 inconsistent solve,
3 input error.  Output is deterministic given the same flags and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import elim, ghost, linalg, msets, poly, tomo
from .field import FieldSpec
from .msets import PointMultiset, complement, mset_from_text, mset_to_text
from .plane import ProjLine, enumerate_points, enumerate_lines
from .poly import poly_from_text, poly_to_text

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INCONSISTENT = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InputError(str(e)) from e


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except (ValueError, TypeError) as e:
        raise InputError(f"bad field {args.field!r}: {e}") from e


def cmd_psp(args) -> int:
    spec = _field(args)
    try:
        S = mset_from_text(_read(args.infile), spec)
    except ValueError as e:
        raise InputError(str(e)) from e
    G = msets.phi(S)
    if args.format == "json":
        terms = {f"{i} {j}": c.encoding
                 for (i, j), c in zip(poly.monomial_indices(spec), G.coeffs)
                 if not c.is_zero()}
        _write(args.out, json.dumps({"q": str(spec), "terms": terms},
                                    indent=2) + "\n")
    else:
        _write(args.out, poly_to_text(G))
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = _field(args)
    try:
        G = poly_from_text(_read(args.infile), spec)
    except ValueError as e:
        raise InputError(str(e)) from e
    if args.line:
        try:
            u, v, w = (int(x) for x in args.line.split())
            line = ProjLine.from_encodings(spec, u, v, w)
        except ValueError as e:
            raise InputError(f"bad line {args.line!r}: {e}") from e
        _write(args.out, f"{poly.evaluate(G, line).encoding}\n")
        return EXIT_OK
    rows = [(str(l), poly.evaluate(G, l).encoding)
            for l in enumerate_lines(spec)]
    if args.format == "json":
        _write(args.out, json.dumps(
            {"q": str(spec), "values": {k: v for k, v in rows}},
            indent=2) + "\n")
    else:
        _write(args.out, "".join(f"{k} : {v}\n" for k, v in rows))
    return EXIT_OK


def cmd_ghost_report(args) -> int:
    spec = _field(args)
    report = ghost.ghost_report(spec)
    if args.format == "text":
        lines = [f"q = {report.q} (p = {report.p}, h = {report.h})",
                 f"rank = {report.rank_phi}",
                 f"ghost exponent = {report.ghost_exponent}",
                 f"ghost count = {report.ghost_count() or f'{report.p}^{report.ghost_exponent}'}",
                 f"note: {report.note}"]
        _write(args.out, "\n".join(lines) + "\n")
    else:
        _write(args.out, report.to_json() + "\n")
    return EXIT_OK


def cmd_solve(args) -> int:
    spec = _field(args)
    try:
        G = poly_from_text(_read(args.infile), spec)
    except ValueError as e:
        raise InputError(str(e)) from e
    coset = tomo.solve(G)
    if coset.particular is None:
        _write(args.out, "inconsistent: polynomial not in the image\n")
        return EXIT_INCONSISTENT
    if args.sets:
        sols = tomo.enumerate_set_solutions(G, args.limit)
        if args.format == "json":
            _write(args.out, json.dumps(
                {"q": str(spec), "solutions": [mset_to_text(S) for S in sols]},
                indent=2) + "\n")
        else:
            _write(args.out, "\n".join(mset_to_text(S) for S in sols))
        return EXIT_OK
    if args.format == "json":
        _write(args.out, json.dumps({
            "q": str(spec),
            "particular": mset_to_text(coset.particular),
            "exponent": coset.exponent,
            "kernel_basis": [mset_to_text(S) for S in coset.kernel_basis],
        }, indent=2) + "\n")
    else:
        blocks = [mset_to_text(coset.particular)]
        blocks += [mset_to_text(S) for S in coset.kernel_basis]
        _write(args.out, f"# particular + {len(coset.kernel_basis)} kernel "
               f"basis elements (coset size {spec.p}^{coset.exponent})\n"
               + "\n".join(blocks))
    return EXIT_OK


def _suite_pencils(spec, rng, failures):
    points = enumerate_points(spec)
    vertices = [points[0], points[len(points) // 2], points[-1]]
    for P in vertices:
        for lam in range(spec.p**(spec.h - 1) + 1):
            if not ghost.is_ghost(ghost.partial_pencil_ghost(P, lam, spec)):
                failures.append(f"partial pencil lam={lam} at {P}")
        lam = 0
        while 1 <= spec.q - lam * spec.p:
            if not ghost.is_ghost(ghost.punctured_pencil_ghost(P, lam, spec)):
                failures.append(f"punctured pencil lam={lam} at {P}")
            lam += 1
    for l in enumerate_lines(spec)[:5]:
        if not ghost.is_ghost(ghost.line_ghost(l, spec)):
            failures.append(f"line ghost {l}")


def _suite_complements(spec, rng, failures):
    full = PointMultiset.full_plane(spec)
    report = ghost.ghost_report(spec)
    for S in report.kernel_basis:
        if all(a <= b for a, b in zip(S.mult, full.mult)):
            comp = complement(S, full)
        else:
            # mod-p complement for multiplicities above 1
            comp = msets.msum(full, msets.minverse(S))
        if not ghost.is_ghost(comp):
            failures.append("complement of a kernel basis element")


def _suite_vandermonde(spec, rng, failures):
    n = spec.q**2 + spec.q + 1
    for _ in range(200):
        S = PointMultiset.from_vector(
            spec, [rng.randrange(spec.p) for _ in range(n)])
        a, b = ghost.is_ghost(S), ghost.vandermonde_check(S)
        if a != b:
            failures.append(f"is_ghost {a} != vandermonde_check {b}")


def _suite_union_counterexample(spec, rng, failures):
    if spec.q != 2:
        return
    l1 = ProjLine.from_encodings(spec, 1, 0, 0)  # X = 0
    l2 = ProjLine.from_encodings(spec, 0, 0, 1)  # Z = 0
    pts = set(ghost.line_points(l1, spec)) | set(ghost.line_points(l2, spec))
    S = PointMultiset.from_points(spec, pts)
    G = msets.phi(S)
    Y = poly.HomPoly.from_terms(spec, {(0, 1): 1})
    if G != Y or ghost.is_ghost(S):
        failures.append("set-union counterexample did not reproduce")


def _suite_elim(spec, rng, failures):
    if spec.h != 1 or spec.p < 3:
        return
    report = elim.verify_procedure(spec.p)
    if not report.ok:
        failures.extend(report.discrepancies)


def cmd_verify(args) -> int:
    spec = _field(args)
    rng = random.Random(args.seed)
    suites = {
        "pencils": [_suite_pencils],
        "complements": [_suite_complements],
        "vandermonde": [_suite_vandermonde],
        "elim": [_suite_elim],
        "all": [_suite_pencils, _suite_complements, _suite_vandermonde,
                _suite_union_counterexample, _suite_elim],
    }
    if args.suite not in suites:
        raise InputError(f"unknown suite {args.suite!r}")
    failures: list[str] = []
    report_lines = []
    for fn in suites[args.suite]:
        before = len(failures)
        fn(spec, rng, failures)
        name = fn.__name__.removeprefix("_suite_")
        status = "pass" if len(failures) == before else "FAIL"
        report_lines.append(f"{name}: {status}")
    for f in failures:
        report_lines.append(f"  {f}")
    _write(args.out, "\n".join(report_lines) + "\n")
    return EXIT_OK if not failures else EXIT_VERIFY_FAIL


def cmd_elim_trace(args) -> int:
    spec = _field(args)
    if spec.h != 1 or spec.p < 3:
        raise InputError("elim-trace requires a prime field p >= 3")
    states = elim.run_elimination(spec.p)
    chunks = []
    for state in states:
        chunks.append(f"# step {state.n}\n{state.to_csv()}")
    _write(args.out, "\n".join(chunks))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="psghost",
        description="Power sum polynomials and ghosts in PG(2,q)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, infile=False):
        sp.add_argument("--field", required=True,
                        help='field order, e.g. "7" or "3^2"')
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=["text", "json", "csv"],
                        default="text")
        sp.add_argument("--seed", type=int, default=0)
        if infile:
            sp.add_argument("--in", dest="infile", required=True,
                            help='input file ("-" for stdin)')

    sp = sub.add_parser("psp", help="power sum polynomial of a multiset file")
    common(sp, infile=True)
    sp.set_defaults(fn=cmd_psp)

    sp = sub.add_parser("eval", help="evaluate a polynomial file at lines")
    common(sp, infile=True)
    sp.add_argument("--line", default=None, help='"u v w" encodings')
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("ghost-report", help="rank, exponent, kernel basis")
    common(sp)
    sp.set_defaults(fn=cmd_ghost_report)

    sp = sub.add_parser("solve", help="all multisets with a given polynomial")
    common(sp, infile=True)
    sp.add_argument("--sets", action="store_true",
                    help="enumerate plain-set solutions")
    sp.add_argument("--limit", type=int, default=1000)
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", default="all",
                    choices=["pencils", "complements", "vandermonde",
                             "elim", "all"])
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("elim-trace", help="dump elimination step matrices")
    common(sp)
    sp.set_defaults(fn=cmd_elim_trace)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
