"""Command line front end: ``derivant query | integrable | verify``.

Exit codes: 0 success, 1 a verify check failed, 2 parse error,
3 budget exhausted (Inconclusive), 4 G is not a subgroup of U.
Output is buffered and written at the end; a failing run always ends with
a ``kind=error`` record.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .config import DEFAULT
from .errors import BudgetExceeded, NotASubgroupError, ParseError
from .perm import format_cycles
from .report import Record, format_records, json_like_all

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_NOT_SUBGROUP = 0, 1, 2, 3, 4


def _gens_text(G) -> str:
    return " ".join(format_cycles(g) for g in G.generators if not g.is_identity()) or "()"


def _budgets(args):
    b = DEFAULT
    if getattr(args, "budget_elements", None) is not None:
        b = replace(b, elements=args.budget_elements)
    if getattr(args, "budget_index", None) is not None:
        b = replace(b, index=args.budget_index)
    return b


def _load(path):
    from .specfile import load_group

    return load_group(path)


# -- query -----------------------------------------------------------------------

def _query(args, out: list[Record]) -> int:
    from .actions import is_k_homogeneous, is_k_transitive
    from .normalizer import normalizer_in
    from .structure import derived_series, derived_subgroup, socle

    budgets = _budgets(args)
    for path in args.specs:
        G = _load(path)
        base = {"spec": path}
        if args.order:
            out.append(Record("query", {"status": "ok", "order": G.order(), **base, "query": "order"}))
        if args.derived:
            D = derived_subgroup(G)
            out.append(Record("query", {"status": "ok", "order": D.order(), **base, "query": "derived",
                                        "generators": _gens_text(D)}))
        if args.series:
            s = derived_series(G)
            out.append(Record("query", {"status": "ok", "order": G.order(), **base, "query": "series",
                                        "orders": s.orders(),
                                        "derived_length": s.derived_length}))
        if args.socle:
            S = socle(G, budgets.elements)
            out.append(Record("query", {"status": "ok", "order": S.order(), **base, "query": "socle",
                                        "generators": _gens_text(S)}))
        if args.homogeneity is not None:
            k = args.homogeneity
            out.append(Record("query", {"status": "ok", "order": G.order(), **base,
                                        "query": f"homogeneity-{k}",
                                        "homogeneous": is_k_homogeneous(G, k, budgets.ksets),
                                        "transitive": is_k_transitive(G, k)}))
        if args.normalizer_in is not None:
            U = _load(args.normalizer_in)
            res = normalizer_in(U, G, scan_budget=budgets.scan)
            out.append(Record("query", {"status": "ok", "order": res.group.order(), "provenance": res.provenance,
                                        **base, "query": "normalizer-in", "ambient": args.normalizer_in,
                                        "generators": _gens_text(res.group)}))
        if args.elements:
            rows = G.elements(budgets.elements)
            rec = Record("query", {"status": "ok", "order": G.order(), **base, "query": "elements"})
            rec.children = [Record("element", {"cycles": format_cycles(p)}) for p in sorted(rows)]
            out.append(rec)
    return EXIT_OK


# -- integrable -------------------------------------------------------------------

def _integrable(args, out: list[Record]) -> int:
    from .integrability import INCONCLUSIVE, Options, integrable_within

    if (args.U is None) == (args.ambient is None):
        raise ParseError("give exactly one of a U spec or --ambient sym:<n>")
    G = _load(args.G)
    U = _load(args.ambient if args.ambient is not None else args.U)
    if G.degree != U.degree or not G.is_subgroup_of(U):
        raise NotASubgroupError("G is not a subgroup of U")
    budgets = _budgets(args)
    opt = Options.direct(budgets=budgets) if args.no_reductions else Options(budgets=budgets)
    v = integrable_within(G, U, opt)
    rec = Record("verdict", {"status": v.status, "order": G.order(), "witness_count": len(v.witnesses),
                             "trace": v.trace, "provenance": v.provenance_label(),
                             "exhaustive": v.exhaustive, "candidates": v.candidates})
    if v.reason:
        rec.fields["reason"] = v.reason
    if args.witnesses:
        rec.children = [Record("witness", {"order": H.order(), "generators": _gens_text(H)})
                        for H in v.witnesses]
    out.append(rec)
    if v.status == INCONCLUSIVE:
        out.append(Record("error", {"status": "inconclusive", "message": v.reason}))
        return EXIT_BUDGET
    return EXIT_OK


# -- verify -----------------------------------------------------------------------

def _verify(args, out: list[Record]) -> int:
    from .suites import run_suite

    checks = run_suite(args.suite)
    for ch in checks:
        fields = {"status": "pass" if ch.ok else "fail", "suite": ch.suite, "name": ch.name,
                  "expected": ch.expected, "computed": ch.computed}
        if ch.note:
            fields["note"] = ch.note
        out.append(Record("check", fields))
    failed = sum(not ch.ok for ch in checks)
    out.append(Record("summary", {"status": "pass" if not failed else "fail", "suite": args.suite,
                                  "checks": len(checks), "failed": failed}))
    if failed:
        out.append(Record("error", {"status": "checks-failed", "message": f"{failed} of {len(checks)} checks failed"}))
        return EXIT_FAIL
    return EXIT_OK


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="derivant", description="Relative integrability of permutation groups.")
    ap.add_argument("--json-like", action="store_true", help="nested bracketed output instead of key=value lines")
    sub = ap.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--budget-elements", type=int, metavar="N", help="cap on explicit element lists")
        p.add_argument("--budget-index", type=int, metavar="N", help="cap on |N_U(G):G| for candidate search")

    q = sub.add_parser("query", help="structural queries on group spec files")
    q.add_argument("specs", nargs="+", help="group spec files (or sym:<n>)")
    q.add_argument("--order", action="store_true")
    q.add_argument("--derived", action="store_true")
    q.add_argument("--series", action="store_true", help="orders along the derived series")
    q.add_argument("--socle", action="store_true")
    q.add_argument("--homogeneity", type=int, metavar="K", help="k-homogeneity and k-transitivity")
    q.add_argument("--normalizer-in", metavar="U", help="normalizer inside the group U (spec or sym:<n>)")
    q.add_argument("--elements", action="store_true", help="list all elements")
    budgets(q)

    i = sub.add_parser("integrable", help="is G integrable within U?")
    i.add_argument("G", help="spec file of G")
    i.add_argument("U", nargs="?", help="spec file of U")
    i.add_argument("--ambient", metavar="sym:N", help="take U = Sym(N)")
    i.add_argument("--no-reductions", action="store_true", help="skip the metacyclic, socle and perfect-core paths")
    i.add_argument("--witnesses", action="store_true", help="print every witness H")
    budgets(i)

    v = sub.add_parser("verify", help="run a reproduction suite")
    v.add_argument("suite", help="d8, wreath, metacyclic, out-groups, remark45, case1, theorem-a, psl37, case11, all")
    return ap


def main(argv=None) -> int:
    # accept --json-like anywhere on the line
    argv = list(sys.argv[1:] if argv is None else argv)
    json_mode = "--json-like" in argv
    argv = [a for a in argv if a != "--json-like"]
    args = build_parser().parse_args(argv)
    out: list[Record] = []
    code = EXIT_OK
    handlers = {"query": _query, "integrable": _integrable, "verify": _verify}
    try:
        if args.command == "query" and not any([args.order, args.derived, args.series, args.socle,
                                                args.homogeneity is not None, args.normalizer_in,
                                                args.elements]):
            args.order = True
        code = handlers[args.command](args, out)
    except ParseError as exc:
        code = EXIT_PARSE
        out.append(Record("error", {"status": "parse-error", "message": str(exc),
                                    "line": exc.line, "column": exc.column}))
    except NotASubgroupError as exc:
        code = EXIT_NOT_SUBGROUP
        out.append(Record("error", {"status": "not-subgroup", "message": str(exc)}))
    except BudgetExceeded as exc:
        code = EXIT_BUDGET
        out.append(Record("error", {"status": "budget", "message": str(exc)}))
    except KeyError as exc:
        code = EXIT_PARSE
        out.append(Record("error", {"status": "usage", "message": exc.args[0]}))
    except ValueError as exc:
        code = EXIT_PARSE
        out.append(Record("error", {"status": "invalid", "message": str(exc)}))
    text = json_like_all(out) if json_mode else format_records(out)
    sys.stdout.write(text)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    raise SystemExit(main())
