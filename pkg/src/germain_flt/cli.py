"""Command-line interface.

Every command writes its result to stdout (or ``--out PATH``) and
diagnostics to stderr. Exit codes: 0 ok, 1 search found nothing or a
fixture check failed, 2 invalid arguments, 3 arithmetic guard tripped.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Sequence

from . import core_arith, germain, grand_plan, historical, residues
from .errors import InvalidArgument, NotFound, OutOfRange

TABULAR = {"table", "survey", "germain-primes", "libri"}
SURVEY_HEADER = ["p", "N", "theta", "theta_prime", "nc_holds", "cond2_holds", "qualifies", "witness"]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _compact(d: dict) -> dict:
    return {k: v for k, v in d.items() if v is not None}


def _flag(v: bool | None) -> str:
    if v is None:
        return ""
    return "true" if v else "false"


def _yes(v: bool | None) -> str:
    return {None: "-", True: "yes", False: "no"}[v]


def text_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def csv_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue()


# -- record encoders --------------------------------------------------------

def survey_record(row: grand_plan.SurveyRow) -> dict:
    return _compact({
        "p": row.p,
        "n": row.N,
        "theta": row.theta,
        "theta_prime": row.theta_prime,
        "nc_holds": row.nc_holds,
        "cond2_holds": row.cond2_holds,
        "qualifies": row.qualifies,
        "witness": row.witness.lower if row.witness else None,
    })


def survey_cells(row: grand_plan.SurveyRow) -> list:
    return [row.p, row.N, row.theta, _flag(row.theta_prime), _flag(row.nc_holds),
            _flag(row.cond2_holds), _flag(row.qualifies), row.witness.lower if row.witness else ""]


def certificate_record(c: germain.AuxiliaryCertificate) -> dict:
    return {
        "p": c.p,
        "n": c.N,
        "theta": c.theta,
        "residues": list(c.residues.residues),
        "nc_holds": c.nc_holds,
        "p_is_pth_power": c.p_is_pth_power,
        "conclusion": c.conclusion,
    }


def render_survey(rows: list[grand_plan.SurveyRow], fmt: str) -> str:
    if fmt == "json":
        return dumps([survey_record(r) for r in rows])
    if fmt == "csv":
        return csv_table(SURVEY_HEADER, [survey_cells(r) for r in rows])
    return text_table(
        ["p", "N", "theta", "prime", "nc", "cond2", "qualifies", "witness"],
        [[r.p, r.N, r.theta, _yes(r.theta_prime), _yes(r.nc_holds), _yes(r.cond2_holds),
          _yes(r.qualifies), f"({r.witness.lower},{r.witness.upper})" if r.witness else "-"]
         for r in rows],
    )


# -- commands ----------------------------------------------------------------

def cmd_residues(a) -> str:
    rs = residues.pth_residues(a.p, a.theta)
    holds, wit = residues.nc_condition(rs)
    c2 = None if a.p % a.theta == 0 else residues.cond2_holds(a.p, a.theta)
    if a.format == "json":
        return dumps(_compact({
            "p": rs.p, "theta": rs.theta, "residues": list(rs.residues),
            "nc_holds": holds, "witness": wit.lower if wit else None, "cond2_holds": c2,
        }))
    nc_text = "holds" if holds else f"fails at ({wit.lower}, {wit.upper})"
    c2_text = {None: "n/a", True: "holds", False: f"fails ({a.p} is a {a.p}-th power)"}[c2]
    return (f"p-th power residues for p={rs.p} mod theta={rs.theta} ({len(rs)} values)\n"
            f"residues: {' '.join(map(str, rs.residues))}\n"
            f"nc: {nc_text}\ncond2: {c2_text}\n")


def cmd_qualify(a) -> str:
    if a.p < 3:
        raise InvalidArgument("qualify needs an odd prime p")
    wit = residues.first_consecutive(a.p, a.theta)
    c2 = residues.cond2_holds(a.p, a.theta)
    q = wit is None and c2
    if a.format == "json":
        return dumps(_compact({
            "p": a.p, "theta": a.theta, "qualifies": q, "nc_holds": wit is None,
            "cond2_holds": c2, "witness": wit.lower if wit else None,
        }))
    return f"p={a.p} theta={a.theta}: {'qualifies' if q else 'does not qualify'}\n"


def cmd_aux(a) -> str:
    certs = germain.find_auxiliaries(a.p, a.n_max)
    if a.format == "json":
        return dumps([certificate_record(c) for c in certs])
    if not certs:
        return f"no qualifying auxiliary primes for p={a.p} with N <= {a.n_max}\n"
    return text_table(["N", "theta", "residues"],
                      [[c.N, c.theta, " ".join(map(str, c.residues.residues))] for c in certs])


def cmd_table(a) -> str:
    rows, unresolved = germain.legendre_table(a.p_max, a.n_max)
    if unresolved:
        print(f"unresolved within N <= {a.n_max}: {' '.join(map(str, unresolved))}", file=sys.stderr)
    if a.format == "json":
        return dumps({
            "rows": [{"p": r.p, "n_min": r.N_min, "theta": r.theta, "residues": list(r.residues.residues)}
                     for r in rows],
            "unresolved": unresolved,
        })
    cells = [[r.p, r.N_min, r.theta, " ".join(map(str, r.residues.residues))] for r in rows]
    if a.format == "csv":
        return csv_table(["p", "N_min", "theta", "residues"], cells)
    out = text_table(["p", "N_min", "theta", "residues"], cells)
    return out + f"unresolved: {' '.join(map(str, unresolved)) or 'none'}\n"


def cmd_survey(a) -> str:
    return render_survey(grand_plan.nc_survey(a.p, a.n_max), a.format)


def cmd_full_survey(a) -> str:
    grid = grand_plan.full_survey(a.p_max, a.n_max, workers=a.workers)
    return render_survey([row for p in grid for row in grid[p]], a.format)


def cmd_libri(a) -> str:
    found = grand_plan.libri_scan(a.theta_max)
    if a.format == "json":
        return dumps({"theta_max": a.theta_max, "qualifying": found})
    if a.format == "csv":
        return csv_table(["theta"], [[t] for t in found])
    return f"qualifying: {' '.join(map(str, found))}\n"


def cmd_bound(a) -> str:
    b = grand_plan.size_lower_bound(a.p, a.n_max)
    if a.format == "json":
        return dumps({"p": b.p, "auxiliaries": list(b.auxiliaries), "product": str(b.product), "bound": b.bound})
    return (f"auxiliaries: {' '.join(map(str, b.auxiliaries)) or 'none'}\n"
            f"product: {b.product}\nmax(x, y, z) >= {b.bound}\n")


def cmd_germain_primes(a) -> str:
    pairs = germain.germain_primes(a.limit)
    cells = [[g.p, g.safe] for g in pairs]
    if a.format == "json":
        return dumps([{"p": g.p, "safe": g.safe} for g in pairs])
    if a.format == "csv":
        return csv_table(["p", "safe"], cells)
    return text_table(["p", "2p+1"], cells)


def cmd_flt_search(a) -> str:
    t = historical.flt_search(a.n, a.bound)
    if a.format == "json":
        sol = None if t is None else {"x": t.x, "y": t.y, "z": t.z, "n": t.n}
        return dumps(_compact({"n": a.n, "bound": a.bound, "solution": sol}))
    if t is None:
        return f"no solution of x^{a.n} + y^{a.n} = z^{a.n} with x <= y <= {a.bound}\n"
    return f"{t.x}^{t.n} + {t.y}^{t.n} = {t.z}^{t.n}\n"


def cmd_forms(a) -> str:
    w = historical.cyclotomic_form_witness(a.n, a.x, a.s)
    if a.format == "json":
        return dumps({"n": w.n, "x": w.x, "s": w.s, "value": str(w.value),
                      "y": str(w.Y), "z": w.Z, "sign": w.sign})
    op = "+" if w.sign == "plus" else "-"
    return (f"4*(x^(n^s) - 1)/(x - 1) with n={a.n}, s={a.s}, x={a.x}: "
            f"{w.value} = {w.Y}^2 {op} {a.n}*{w.Z}^2\n")


def cmd_claim1807(a) -> str:
    pair = historical.claim1807_counterexample(a.n, a.bound, positive=a.positive)
    if a.format == "json":
        rec: dict[str, Any] = {"n": a.n, "bound": a.bound}
        if pair is not None:
            x, y = pair
            w = historical.represent(x**a.n + y**a.n, a.n, positive=a.positive)
            rec["counterexample"] = {"a": x, "b": y, "power_sum": str(w.m), "h": str(w.h), "f": str(w.f)}
        return dumps(rec)
    if pair is None:
        return f"no counterexample with a <= b <= {a.bound}\n"
    x, y = pair
    w = historical.represent(x**a.n + y**a.n, a.n, positive=a.positive)
    return (f"counterexample: a={x}, b={y}\n"
            f"{x}^{a.n} + {y}^{a.n} = {w.m} = {w.h}^2 + {a.n}*{w.f}^2\n"
            f"{x} + {y} = {x + y} is not of the form h^2 + {a.n}*f^2\n")


def cmd_fermat_numbers(a) -> str:
    if a.count < 1:
        raise InvalidArgument("--count must be >= 1")
    if a.count > core_arith.FERMAT_INDEX_LIMIT + 1:
        raise OutOfRange(f"--count must be in 1..{core_arith.FERMAT_INDEX_LIMIT + 1}")
    recs = []
    for k in range(a.count):
        f = core_arith.fermat_number(k)
        try:
            prime = core_arith.is_prime(f)
        except OutOfRange:
            prime = None
        factors = None
        if prime is False and f < core_arith.WORD_LIMIT:
            factors = [{"prime": str(q), "exponent": e} for q, e in core_arith.factorize(f)]
        recs.append(_compact({"k": k, "value": str(f), "prime": prime, "factors": factors}))
    if a.format == "json":
        return dumps(recs)
    rows = []
    for r in recs:
        fac = " x ".join(d["prime"] for d in r["factors"]) if "factors" in r else ""
        rows.append([r["k"], r["value"], _yes(r.get("prime")), fac])
    return text_table(["k", "F_k", "prime", "factors"], rows)


def cmd_wilson(a) -> str:
    if a.limit < 2:
        raise InvalidArgument("--limit must be >= 2")
    hits = [n for n in range(2, a.limit + 1) if core_arith.wilson_check(n)]
    agrees = hits == core_arith.sieve_primes(a.limit)
    if a.format == "json":
        return dumps({"limit": a.limit, "count": len(hits), "agrees_with_is_prime": agrees})
    return (f"n <= {a.limit} with (n-1)! = -1 (mod n): {len(hits)}\n"
            f"agrees with is_prime: {'yes' if agrees else 'no'}\n")


def cmd_factor(a) -> str:
    fs = core_arith.factorize(a.n)
    if a.format == "json":
        return dumps({"n": str(a.n), "factors": [{"prime": str(q), "exponent": e} for q, e in fs]})
    return f"{a.n} = " + " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in fs) + "\n"


def cmd_represent(a) -> str:
    w = historical.represent(a.m, a.n, positive=a.positive)
    if a.format == "json":
        rec: dict[str, Any] = {"m": a.m, "n": a.n}
        if w is not None:
            rec.update(h=w.h, f=w.f)
        return dumps(rec)
    if w is None:
        return f"{a.m} is not of the form h^2 + {a.n}*f^2\n"
    return f"{a.m} = {w.h}^2 + {a.n}*{w.f}^2\n"


def cmd_classify(a) -> str:
    c = historical.classify_case(a.x, a.y, a.z, a.p)
    if a.format == "json":
        return dumps({"x": a.x, "y": a.y, "z": a.z, "p": a.p, "case": c.value})
    return f"{c.value}\n"


def cmd_reduce(a) -> str:
    r = historical.reduce_exponent(a.n)
    if a.format == "json":
        return dumps({"n": a.n, "reduced": r})
    return f"{r}\n"


def cmd_verify_paper(a) -> str:
    from .verify import run_checks

    results = run_checks()
    a.exit_code = 0 if all(r.passed for r in results) else 1
    if a.format == "json":
        return dumps([{"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.id:>2}  {r.name}: {r.detail}" for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="germain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str, formats: Sequence[str] | None = None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func, format="text")
        sp.add_argument("--json", dest="format", action="store_const", const="json", help="emit JSON")
        if formats:
            sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        return sp

    tab = ["text", "csv", "json"]
    sp = add("residues", cmd_residues, "p-th power residues modulo theta")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--theta", type=int, required=True)
    sp = add("qualify", cmd_qualify, "check both theorem hypotheses for (p, theta)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--theta", type=int, required=True)
    sp = add("aux", cmd_aux, "qualifying auxiliary primes 2Np+1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp = add("table", cmd_table, "Legendre-style table for p < P", tab)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=50)
    sp = add("survey", cmd_survey, "N-C survey for one p", tab)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp = add("full-survey", cmd_full_survey, "N-C survey over all odd p < P", ["text", "json"])
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp = add("libri", cmd_libri, "qualifying theta for p = 3", tab)
    sp.add_argument("--theta-max", type=int, required=True)
    sp = add("bound", cmd_bound, "size lower bound from qualifying auxiliaries")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp = add("germain-primes", cmd_germain_primes, "Germain primes up to L", tab)
    sp.add_argument("--limit", type=int, required=True)
    sp = add("flt-search", cmd_flt_search, "bounded search for x^n + y^n = z^n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp = add("forms", cmd_forms, "witness for 4(x^(n^s)-1)/(x-1) = Y^2 +/- nZ^2")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--s", type=int, default=1)
    sp = add("claim1807", cmd_claim1807, "search counterexamples to the 1807 sum-of-powers claim")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--positive", action="store_true", help="require h, f >= 1")
    sp = add("fermat-numbers", cmd_fermat_numbers, "Fermat numbers F_0 .. F_(K-1)")
    sp.add_argument("--count", type=int, required=True)
    sp = add("wilson", cmd_wilson, "compare Wilson's criterion with primality")
    sp.add_argument("--limit", type=int, required=True)
    sp = add("factor", cmd_factor, "prime factorization (n < 2^63)")
    sp.add_argument("--n", type=int, required=True)
    sp = add("represent", cmd_represent, "write m as h^2 + n f^2")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--positive", action="store_true", help="require h, f >= 1")
    sp = add("classify", cmd_classify, "Case 1 / Case 2 for a candidate (x, y, z, p)")
    for name in ("x", "y", "z", "p"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp = add("reduce-exponent", cmd_reduce, "odd prime (or 4) an exponent n reduces to")
    sp.add_argument("--n", type=int, required=True)
    add("verify-paper", cmd_verify_paper, "run every fixture check (exit 0 iff all pass)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.format == "csv" and args.command not in TABULAR:
        print(f"csv output is not available for {args.command}", file=sys.stderr)
        return 2
    args.exit_code = 0
    try:
        out = args.func(args)
    except InvalidArgument as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OutOfRange as e:
        print(f"guard: {e}", file=sys.stderr)
        return 3
    except NotFound as e:
        print(f"not found: {e}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return args.exit_code


def run_captured(argv: Sequence[str]) -> tuple[int, str]:
    """Run a command in-process and return (exit code, stdout text)."""
    buf = io.StringIO()
    old, sys.stdout = sys.stdout, buf
    try:
        code = run(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def main() -> None:
    sys.exit(run())
