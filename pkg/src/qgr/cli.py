"""Command line front end: ``qgr char``, ``qgr verify`` and ``qgr qdatum``.

Exit codes: 0 success, 1 bad input (parse errors, invalid Q-data),
2 the Frenkel-Mukhin completion does not apply, 3 budget exhausted,
4 a verification instance failed.
"""
from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .liealg import lie_type
from .qchar import BudgetExceeded, FMInapplicable, classical_fm, et, ft, lt, torus_for, verify_tboson, verify_tsystem
from .qdata import (InvalidQDatum, QDatum, canonical_height, random_qdatum, tc_mismatches,
                    validate_qdatum, xi_lemma_violations)
from .qtorus import Monomial, MonomialParseError, QTElement, TCoeff, Y, frakD, to_json, to_text, truncate

EXIT_OK, EXIT_INPUT, EXIT_FM, EXIT_BUDGET, EXIT_FAIL = 0, 1, 2, 3, 4


# -- helpers -------------------------------------------------------------------

def _qdatum(args) -> QDatum:
    g = lie_type(args.type)
    if getattr(args, "xi", None):
        xi = [int(x) for x in args.xi.replace(",", " ").split()]
        q = QDatum(g, xi, check=False)
        bad = validate_qdatum(q)
        if bad:
            raise InvalidQDatum("; ".join(bad))
        return QDatum(g, xi)
    return canonical_height(getattr(args, "canonical", 0) or 0, g)


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(jobs: int, tasks):
    """``tasks`` is a list of ``(key, fn, args)``; results come back sorted by key."""
    tasks = sorted(tasks, key=lambda t: t[0])
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            futs = [ex.submit(fn, *a) for _, fn, a in tasks]
            res = [f.result() for f in futs]
    else:
        res = [fn(*a) for _, fn, a in tasks]
    return [(k, r) for (k, _, _), r in zip(tasks, res)]


def _line(ok: bool, name: str, detail: str = "") -> str:
    return f"{'PASS' if ok else 'FAIL'} {name}" + (f"  {detail}" if detail else "") + "\n"


# -- char ------------------------------------------------------------------------

def cmd_char(args) -> int:
    g = lie_type(args.type)
    m = Monomial.parse(args.monomial)
    if args.kind == "classical":
        chi = classical_fm(g, m).element
        x = QTElement(torus_for(g, m), {M: TCoeff(c) for M, c in chi.items()})
    else:
        x = {"F": ft, "E": et, "L": lt}[args.kind](g, m).element
    if args.truncate is not None:
        x = truncate(x, args.truncate)
    header = {"type": g.name, "monomial": str(m), "kind": args.kind, "terms": len(x)}
    if args.truncate is not None:
        header["truncate"] = args.truncate
    if args.format == "json":
        out = to_json(x, header) + "\n"
    else:
        out = f"# {g.name} {args.kind}({m}), {len(x)} terms\n" + to_text(x)
    _emit(out, args.output)
    return EXIT_OK


# -- verify suites -------------------------------------------------------------------

def _tsystem_instance(g, v, steps, quantum):
    q = canonical_height(0, g)
    d = q.d(v)
    p = q.h(v) - 2 * d * 3
    r = verify_tsystem(q, v, p, p + 2 * d * steps, quantum)
    ok = r.holds and (not quantum or (r.y - r.x == 1 and r.y == r.y_formula))
    return ok, f"v={v} p={p} s={p + 2 * d * steps} x={r.x} y={r.y} y_formula={r.y_formula} {r.detail}".rstrip()


def _suite_tsystem(args):
    g = lie_type(args.type)
    q = canonical_height(0, g)
    return [((v, s), _tsystem_instance, (g.name, v, s, True))
            for v in q.U.vertices for s in range(1, args.max_steps + 1)]


def _tboson_instance(g, i, sign):
    q = canonical_height(0, g)
    p = max(p for (j, p) in q.hat_I if j == i)
    ok, diff = verify_tboson(g, i, p, sign)
    return ok, f"i={i} p={p} sign={sign:+d}" + ("" if ok else f" residue={len(diff)} terms")


def _suite_tboson(args):
    g = lie_type(args.type)
    return [((i, s), _tboson_instance, (g.name, i, s)) for i in g.vertices for s in (1, -1)]


def _presentation_instance(g, xi, ks):
    from .isom import verify_presentation
    r = verify_presentation(QDatum(g, list(xi)), ks)
    detail = f"{r.checked} relations" + "".join(f"; {f}" for f in r.failures[:5])
    return r.holds, detail


def _suite_presentation(args):
    q = _qdatum(args)
    return [((0,), _presentation_instance, (q.g.name, tuple(q.xi), tuple(args.windows)))]


def _kappa_instance(g, xi):
    from .qcluster import verify_kappa
    bad = verify_kappa(QDatum(g, list(xi)))
    return not bad, f"xi={list(xi)}" + (f" mismatches={bad[:3]}" if bad else "")


def _suite_kappa(args):
    q = _qdatum(args)
    tasks = [((0,), _kappa_instance, (q.g.name, tuple(q.xi)))]
    rng = random.Random(args.seed)
    for s in range(args.samples):
        r = random_qdatum(q.g, rng)
        tasks.append(((s + 1,), _kappa_instance, (q.g.name, tuple(r.xi))))
    return tasks


def _facE_instance(g, xi, m):
    from .isom import verify_facE
    r = verify_facE(m, QDatum(g, list(xi)))
    return r.holds, f"m={m} nu={r.nu} parts={r.factorization}"


def _suite_facE(args):
    q = _qdatum(args)
    if args.monomial:
        ms = [str(Monomial.parse(s)) for s in args.monomial]
    else:
        W = sorted(q.hat_I)
        ms = [str(Y(*a) * frakD(q.g, Y(*b), 1)) for a in W for b in W]
    return [((m,), _facE_instance, (q.g.name, tuple(q.xi), m)) for m in ms]


def _tc_instance(g, xi):
    bad = tc_mismatches(QDatum(g, list(xi)))
    return not bad, f"xi={list(xi)}" + (f" mismatches={bad[:3]}" if bad else "")


def _suite_tc(args):
    g = lie_type(args.type)
    rng = random.Random(args.seed)
    tasks = []
    for s in range(args.samples):
        q = random_qdatum(g, rng)
        tasks.append(((s,), _tc_instance, (g.name, tuple(q.xi))))
    tasks.append(((args.samples,), _xi_lemma_instance, (g.name,)))
    return tasks


def _xi_lemma_instance(g):
    bad = xi_lemma_violations(g)
    return not bad, "Xi zeros" + (f" violations={bad[:3]}" if bad else "")


def _psi_instance(n):
    from .isom import psi_fundamental, psi_pair, psi_table, psi_window_transition
    q1, q2 = psi_pair(n)
    tab = psi_table(n, (0, 1))
    vals = list(tab.values())
    checks = {
        "injective": len(set(vals)) == len(vals),
        "dominant": all(v.is_dominant() for v in vals),
        "weight": all(q1.wt(Y(*k)) == q2.wt(v) for k, v in tab.items()),
        "equivariant": all(_psi_of(n, frakD(q1.g, Y(a, p), 1)) == frakD(q2.g, v, 1)
                           for (a, p), v in psi_table(n, (0,)).items()),
        "transition": all(psi_window_transition(Y(a, p), n) == v for (a, p), v in psi_table(n, (0,)).items()),
    }
    return all(checks.values()), " ".join(f"{k}={'ok' if v else 'NO'}" for k, v in checks.items())


def _psi_of(n, m):
    from .isom import psi_fundamental
    ((a, p), _), = m.items()
    return psi_fundamental(a, p, n)


def _suite_psi(args):
    return [((args.n,), _psi_instance, (args.n,))]


SUITES = {
    "tsystem": _suite_tsystem,
    "tboson": _suite_tboson,
    "presentation": _suite_presentation,
    "kappa": _suite_kappa,
    "facE": _suite_facE,
    "tc-lemma": _suite_tc,
    "psi": _suite_psi,
}


def cmd_verify(args) -> int:
    if args.suite != "psi" and not args.type:
        raise ValueError(f"suite {args.suite} needs a Cartan type")
    results = _run(args.jobs, SUITES[args.suite](args))
    out = []
    if args.suite == "psi":
        from .isom import psi_table
        for (a, p), v in psi_table(args.n, (0,)).items():
            out.append(f"psi(Y[{a},{p}]) = {v}\n")
    for key, (ok, detail) in results:
        out.append(_line(ok, f"{args.suite} {','.join(map(str, key))}", detail))
    _emit("".join(out), args.output)
    return EXIT_OK if all(ok for _, (ok, _) in results) else EXIT_FAIL


# -- qdatum ---------------------------------------------------------------------

def cmd_qdatum(args) -> int:
    args.xi = args.xi or args.xi_opt
    q = _qdatum(args)
    tau = q.tau
    order = tau.order()
    half = tau ** (q.rh // 2)
    lines = [f"# {q.g.name} xi={list(q.xi)} unfolding={q.delta.name}",
             f"# tau order {order} (expected {q.rh})"]
    ok = order == q.rh
    if not q.g.is_simply_laced:
        neg = half.is_minus_identity()
        lines.append(f"# tau^{q.rh // 2} = -1: {neg}")
        ok = ok and neg
    lines.append(f"# {len(q.ar_vertices)} vertices")
    body = q.to_dot() if args.dot else q.to_ascii()
    _emit("\n".join(lines) + "\n" + body + "\n", args.output)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qgr", description="(q,t)-characters and Q-data.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("char", help="dump a character")
    c.add_argument("type")
    c.add_argument("monomial", help='e.g. "Y[1,0] Y[1,2]^2"; empty for the unit')
    c.add_argument("--kind", choices=["classical", "F", "E", "L"], default="L")
    c.add_argument("--truncate", type=int, metavar="B", help="keep monomials with all parameters <= B")
    c.add_argument("--format", choices=["json", "text"], default="text")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_char)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("type", nargs="?")
    v.add_argument("--max-steps", type=int, default=3)
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--xi")
    v.add_argument("--canonical", type=int, default=0)
    v.add_argument("--windows", type=int, nargs="+", default=[0, 1, 2])
    v.add_argument("--monomial", action="append")
    v.add_argument("--samples", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("qdatum", help="render a Q-datum")
    q.add_argument("type")
    q.add_argument("xi", nargs="?", help="heights, comma separated (use --xi=... when the first is negative)")
    q.add_argument("--xi", dest="xi_opt", metavar="XI")
    q.add_argument("--canonical", type=int)
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--ascii", action="store_true")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_qdatum)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MonomialParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidQDatum, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except FMInapplicable as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FM
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
