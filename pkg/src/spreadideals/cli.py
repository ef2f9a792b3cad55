"""Command-line front end.

Ideals are read as inline JSON (``{"n": 11, "generators": [[2, 4], ...]}``),
monomial text (``x2*x4, x1*x5*x7``) or a path to a file holding either.
Graphs use ``{"n": 6, "edges": [[1, 4], ...]}`` or ``1-4,2-5,3-6``.

Exit codes: 0 success, 1 domain error, 2 parse error.
"""

import argparse
import json
import os
import sys

from . import graphs, ideals, reproduce, resolutions, tspread
from ._validation import DomainError, ParseError
from .ideals import MonomialIdeal

__all__ = ["main", "run"]


def _read_source(source):
    if source is None:
        raise ParseError("missing input (inline JSON, monomial text or a file path)", "")
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read().strip()
    return source.strip()


def _parse_ideal(source, n=None):
    text = _read_source(source)
    if text.startswith("{"):
        ideal = MonomialIdeal.from_json(text)
        if n is not None and n != ideal.n:
            raise DomainError(f"--n {n} disagrees with n={ideal.n} in the input")
        return ideal
    return MonomialIdeal.parse(text, n)


def _parse_graph(source, n=None):
    text = _read_source(source)
    if text.startswith("{"):
        return graphs.Graph.from_json(text)
    return graphs.Graph.parse(text, n)


def _ideal_arg(args):
    """The ideal from the positional input, or the Pascal ideal from ``--n`` and ``--pascal-t``."""
    if args.pascal_t is not None:
        if args.input is not None:
            raise DomainError("give either an ideal or --pascal-t, not both")
        if args.n is None:
            raise DomainError("--pascal-t needs --n")
        return tspread.pascal_ideal(args.n, args.pascal_t).ideal
    return _parse_ideal(args.input, args.n)


def _oracle_limit(args, ideal):
    return max(ideal.n, resolutions.DEFAULT_MAX_N) if args.force else None


def _betti(args, ideal):
    return resolutions.betti_table(ideal, max_n=_oracle_limit(args, ideal))


def _betti_json(table):
    return [[i, j, b] for (i, j), b in table.entries]


def _cmd_invariants(args):
    ideal = _ideal_arg(args)
    table = _betti(args, ideal)
    as_ideal = table.as_ideal()
    out = {
        "ideal": ideal.to_json(),
        "support_index": ideals.support_index(ideal),
        "bcos": ideals.bcos(ideal),
        "cosize": ideals.cosize(ideal),
        "pd_bound": ideals.pd_bound(ideal),
        "reg_bound": ideals.reg_bound(ideal),
        "pd": as_ideal.pd(),
        "reg": as_ideal.reg(),
        "depth": ideal.n - as_ideal.pd(),
        "regular_sequence": ideals.is_regular_sequence(ideal),
        "betti_quotient": _betti_json(table),
    }
    if args.t is not None:
        out["t"] = args.t
        out["t_spread"] = ideals.is_t_spread_ideal(ideal, args.t)
    return out, None


def _cmd_bounds(args):
    ideal = _ideal_arg(args)
    out = {
        "ideal": ideal.to_json(),
        "support_index": ideals.support_index(ideal),
        "pd_bound": ideals.pd_bound(ideal),
        "reg_bound": ideals.reg_bound(ideal),
    }
    if args.t is not None:
        if not ideals.is_t_spread_ideal(ideal, args.t):
            raise DomainError(f"({ideal}) is not {args.t}-spread")
        out["t"] = args.t
        out["reg_bound_tspread"] = ideals.reg_bound_tspread(ideal.n, args.t)
        d = args.d if args.d is not None else max(g.degree for g in ideal.gens)
        if ideal.n >= 1 + (d - 1) * args.t:
            out["d"] = d
            out["reg_bound_degree"] = ideals.reg_bound_degree_at_most_d(ideal.n, d, args.t)
    if ideals.is_regular_sequence(ideal):
        out["ci_invariants"] = list(ideals.ci_invariants(ideal))
    return out, None


def _cmd_betti(args):
    ideal = _ideal_arg(args)
    table = _betti(args, ideal)
    as_ideal = table.as_ideal()
    out = {
        "ideal": ideal.to_json(),
        "betti_quotient": _betti_json(table),
        "totals_quotient": table.totals(),
        "pd_quotient": table.pd(),
        "reg_quotient": table.reg(),
        "pd": as_ideal.pd(),
        "reg": as_ideal.reg(),
        "extremal": [[i, j, b] for (i, j), b in resolutions.extremal_betti(table)],
    }
    return out, table.diagram()


def _cmd_taylor(args):
    ideal = _ideal_arg(args)
    cx = resolutions.taylor_complex(ideal)
    text = "\n".join(
        f"{i}: " + " + ".join(f"S(-{d})" for d in step) for i, step in enumerate(cx.steps)
    ) + "\n"
    return {"ideal": ideal.to_json(), "steps": [list(s) for s in cx.steps], "ranks": cx.ranks()}, text


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise DomainError(f"--{name.replace('_', '-')} is required here")


def _tlex_json(companion):
    out = {"n": companion.n, "t": companion.t, "residue": companion.residue, "exists": companion.exists}
    if companion.exists:
        out["generators"] = [list(g.support) for g in companion.ideal.gens]
    if companion.discrepancy is not None:
        out["shadow_size"] = companion.discrepancy
    return out


def _cmd_pascal(args):
    _need(args, "n", "t")
    p = tspread.pascal_ideal(args.n, args.t)
    series = tspread.pascal_hilbert_series(args.n, args.t)
    out = {
        "n": p.n,
        "t": p.t,
        "residue": p.residue,
        "generators": [list(g.support) for g in p.generators],
        "total_betti": tspread.pascal_total_betti(args.n, args.t),
        "ci_invariants": list(ideals.ci_invariants(p.ideal)),
        "ft_vector": list(tspread.pascal_ft_vector(args.n, args.t).entries),
        "hilbert_numerator": list(series.numerator),
        "hilbert_denominator_exponent": series.denominator_exponent,
        "tlex": _tlex_json(tspread.pascal_tlex(args.n, args.t)),
    }
    return out, None


def _cmd_tlex(args):
    if args.input is None:
        _need(args, "n", "t")
        out = _tlex_json(tspread.pascal_tlex(args.n, args.t))
        return out, None
    _need(args, "t")
    ideal = _parse_ideal(args.input, args.n)
    companion = tspread.tlex_companion_exists(ideal, args.t)
    out = {"ideal": ideal.to_json(), "t": args.t, "exists": companion is not None}
    if companion is not None:
        out["generators"] = [list(g.support) for g in companion.gens]
    return out, None


def _cmd_ftvector(args):
    if args.pascal_t is not None:
        _need(args, "n")
        vec = tspread.pascal_ft_vector(args.n, args.pascal_t)
        ideal = tspread.pascal_ideal(args.n, args.pascal_t).ideal
    else:
        _need(args, "t")
        ideal = _parse_ideal(args.input, args.n)
        vec = ideals.ft_vector(ideal, args.t)
    # entries[j] counts degree-j t-spread monomials outside I (that is f_{t,j-1})
    return {"ideal": ideal.to_json(), "t": vec.t, "ft_vector": list(vec.entries)}, None


def _cmd_hilbert(args):
    ideal = _ideal_arg(args)
    if ideals.is_regular_sequence(ideal):
        series = tspread.hilbert_series_ci(ideal)
    else:
        series = tspread.hilbert_series(ideal)
    reduced = series.normalized()
    out = {
        "ideal": ideal.to_json(),
        "numerator": list(series.numerator),
        "denominator_exponent": series.denominator_exponent,
        "reduced_numerator": list(reduced.numerator),
        "reduced_denominator_exponent": reduced.denominator_exponent,
        "hilbert_function": series.coefficients(ideal.n),
    }
    return out, str(series) + "\n"


def _cmd_edge_ideal(args):
    g = _parse_graph(args.input, args.n)
    ideal = graphs.edge_ideal(g)
    forest = graphs.is_forest(g)
    out = {
        "graph": g.to_json(),
        "ideal": ideal.to_json(),
        "forest": forest,
        "induced_matching_number": graphs.induced_matching_number(g),
        "reg": _betti(args, ideal).as_ideal().reg(),
        "reg_upper_bound": g.n // 2 + 1,
    }
    if forest:
        out["forest_regularity"] = graphs.forest_regularity(g)
    return out, None


def _cmd_dual(args):
    ideal = _ideal_arg(args)
    dual = ideals.alexander_dual(ideal)
    table = _betti(args, ideal).as_ideal()
    dual_table = _betti(args, dual).as_ideal()
    out = {
        "ideal": ideal.to_json(),
        "dual": dual.to_json(),
        "reg": table.reg(),
        "pd_dual": dual_table.pd(),
        "pd": table.pd(),
        "reg_dual": dual_table.reg(),
    }
    return out, None


def _cmd_reproduce(args):
    lines = []
    ok_all = True
    results = []
    for ex, ok, detail in reproduce.run_examples():
        ok_all &= ok
        results.append({"location": ex.location, "claim": ex.claim, "pass": ok})
        lines.append(f"{'PASS' if ok else 'FAIL'}  [{ex.location}] {ex.claim}")
        if not ok:
            lines.append(f"      {detail}")
    out = {"examples": results}
    if args.fuzz:
        failures = reproduce.fuzz(args.fuzz, seed=args.seed)
        ok_all &= not failures
        out["fuzz"] = {"count": args.fuzz, "seed": args.seed, "failures": failures}
        lines.append(f"{'PASS' if not failures else 'FAIL'}  [fuzz] {args.fuzz} random ideals, seed {args.seed}")
        lines.extend(f"      {f}" for f in failures)
    out["all_pass"] = ok_all
    return out, "\n".join(lines) + "\n", 0 if ok_all else 1


COMMANDS = {
    "invariants": (_cmd_invariants, "support index, bounds and exact pd/reg of an ideal"),
    "bounds": (_cmd_bounds, "support-index and t-spread regularity bounds"),
    "betti": (_cmd_betti, "graded Betti numbers of S/I"),
    "taylor": (_cmd_taylor, "Taylor complex step degrees"),
    "pascal": (_cmd_pascal, "closed-form data of the Pascal ideal of type (n, t)"),
    "tlex": (_cmd_tlex, "t-spread lexsegment ideal with the same f_t-vector"),
    "ftvector": (_cmd_ftvector, "f_t-vector of an ideal"),
    "hilbert": (_cmd_hilbert, "Hilbert series of S/I"),
    "edge-ideal": (_cmd_edge_ideal, "edge ideal, induced matchings and regularity of a graph"),
    "dual": (_cmd_dual, "Alexander dual and the Terai duality check"),
    "reproduce": (_cmd_reproduce, "run every worked example (exit 0 iff all pass)"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="spreadideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name == "reproduce":
            p.add_argument("--fuzz", type=int, default=0, metavar="COUNT",
                           help="also check the bound theorems on COUNT random ideals")
            p.add_argument("--seed", type=int, default=0, help="seed for --fuzz sampling")
        else:
            p.add_argument("input", nargs="?", help="inline JSON, monomial text or a file path")
            p.add_argument("--n", type=int, help="number of variables")
            p.add_argument("--t", type=int, help="spread parameter t")
            p.add_argument("--d", type=int, help="degree bound d")
            p.add_argument("--pascal-t", type=int, help="use the Pascal ideal of type (n, PASCAL_T)")
            p.add_argument("--force", action="store_true",
                           help="lift the n <= 14 guard of the Betti oracle (can be very slow)")
        default = "table" if name == "reproduce" else "json"
        p.add_argument("--format", choices=("json", "table"), default=default)
    return parser


def _table_text(data):
    lines = []
    for key in sorted(data):
        value = data[key]
        lines.append(f"{key}: {json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value}")
    return "\n".join(lines) + "\n"


def run(argv, stdout=None, stderr=None):
    """Run the CLI on ``argv``; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args)
    except ParseError as exc:
        stderr.write(f"parse error: {exc} (token: {exc.token!r})\n")
        return 2
    except (DomainError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    data, text = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    if args.format == "table":
        stdout.write(text if text is not None else _table_text(data))
    else:
        stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
