"""Command-line front end.

Every subcommand parses its inputs, calls the library, and renders the
result in one of three formats.  Exit codes: 0 on success, 1 on a usage
error (bad flags, unparseable partition literal), 2 on a computation
domain error (weight mismatch, formula outside its validity range), 3 when
a verification fails (self-check suites, or engine disagreement under
``entry --engine all``).

Output is deterministic: same arguments, same bytes.  JSON renders all
potentially large integers as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .closedforms import FormulaDomainError, g_polynomial, h_polynomial
from .inverse import (
    enumerate_chains_S,
    enumerate_chains_T,
    f_polynomial,
    inv_kostka_bruteforce,
    inv_kostka_duan,
    inv_kostka_er,
    inverse_kostka_matrix,
    kostka_matrix,
    monomial_to_schur,
)
from .partitions import Partition, PartitionParseError, WeightMismatchError
from .steenrod import steenrod_P, steenrod_Sq
from .verify import verify_suite

_BRUTE_MAX_N = 7


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def partition(text: str) -> Partition:
    # argparse shows the type name in error messages
    return Partition.parse(text)


@dataclass
class CommandOutput:
    query: dict
    result: object
    plain: list[str]
    csv_rows: list[list[str]] = field(default_factory=list)
    exit_code: int = 0


def _parts_json(p: Partition) -> list[int]:
    return list(p.parts)


def _poly_output(query: dict, poly, pretty_lines=None) -> CommandOutput:
    coeffs = [str(c) for c in poly.coeffs]
    plain = pretty_lines if pretty_lines is not None else [poly.pretty()]
    rows = [["power", "coeff"]] + [[str(i), c] for i, c in enumerate(coeffs)]
    return CommandOutput(query, {"coeffs": coeffs}, plain, rows)


def _expansion_output(query: dict, items) -> CommandOutput:
    result = [{"partition": _parts_json(p), "coeff": str(c)} for p, c in items]
    plain = [f"{p} {c}" for p, c in items]
    rows = [["partition", "coeff"]] + [[str(p), str(c)] for p, c in items]
    return CommandOutput(query, result, plain, rows)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_entry(ns) -> CommandOutput:
    lam, mu = ns.lam, ns.mu
    query = {
        "subcommand": "entry",
        "lambda": _parts_json(lam),
        "mu": _parts_json(mu),
        "engine": ns.engine,
    }
    if ns.engine == "all":
        values = {
            "duan": inv_kostka_duan(lam, mu),
            "er": inv_kostka_er(lam, mu),
        }
        if max(1, lam.length, mu.length) <= _BRUTE_MAX_N:
            values["brute"] = inv_kostka_bruteforce(lam, mu)
        if len(set(values.values())) != 1:
            detail = ", ".join(f"{k}={v}" for k, v in values.items())
            print(f"engine disagreement: {detail}", file=sys.stderr)
            return CommandOutput(query, None, [], exit_code=3)
        value = values["duan"]
    elif ns.engine == "er":
        value = inv_kostka_er(lam, mu)
    elif ns.engine == "brute":
        value = inv_kostka_bruteforce(lam, mu)
    else:
        value = inv_kostka_duan(lam, mu)
    rows = [["lambda", "mu", "engine", "value"], [str(lam), str(mu), ns.engine, str(value)]]
    return CommandOutput(query, str(value), [str(value)], rows)


def _cmd_row(ns) -> CommandOutput:
    query = {"subcommand": "row", "lambda": _parts_json(ns.lam)}
    return _expansion_output(query, monomial_to_schur(ns.lam).items())


def _cmd_matrix(ns) -> CommandOutput:
    if ns.weight < 0:
        raise ValueError("weight must be non-negative")
    mat = inverse_kostka_matrix(ns.weight) if ns.inverse else kostka_matrix(ns.weight)
    query = {"subcommand": "matrix", "weight": ns.weight, "inverse": ns.inverse}
    labels = [str(p) for p in mat.labels]
    result = {
        "labels": [_parts_json(p) for p in mat.labels],
        "rows": [[str(v) for v in row] for row in mat.entries],
    }
    plain = ["columns: " + " ".join(labels)]
    plain += [
        f"{label}: " + " ".join(str(v) for v in row)
        for label, row in zip(labels, mat.entries)
    ]
    rows = [[""] + labels] + [
        [label] + [str(v) for v in row] for label, row in zip(labels, mat.entries)
    ]
    return CommandOutput(query, result, plain, rows)


def _cmd_chains(ns) -> CommandOutput:
    lam, mu = ns.lam, ns.mu
    if ns.family == "S":
        chains = enumerate_chains_S(lam, mu)
        values = [c.b_values for c in chains]
    else:
        chains = enumerate_chains_T(lam, mu)
        values = [c.a_values for c in chains]
    query = {
        "subcommand": "chains",
        "lambda": _parts_json(lam),
        "mu": _parts_json(mu),
        "family": ns.family,
    }
    total = sum(c.sign for c in chains)
    result = {
        "chains": [
            {
                "steps": [{"partition": _parts_json(p), "j": j} for p, j in c.steps],
                "values": list(vals),
                "sign": c.sign,
            }
            for c, vals in zip(chains, values)
        ],
        "signed_sum": str(total),
    }
    plain = []
    for c, vals in zip(chains, values):
        path = " <- ".join(f"{p}(j={j})" for p, j in c.steps)
        s = "+" if c.sign > 0 else "-"
        plain.append(f"{s}1 values={','.join(map(str, vals))} path=[] <- {path}" if c.steps
                     else f"{s}1 values= path=[]")
    plain.append(f"count: {len(chains)}")
    plain.append(f"signed sum: {total}")
    rows = [["index", "sign", "values", "steps"]]
    for idx, (c, vals) in enumerate(zip(chains, values)):
        steps = ";".join(f"{p}:{j}" for p, j in c.steps)
        rows.append([str(idx), str(c.sign), " ".join(map(str, vals)), steps])
    return CommandOutput(query, result, plain, rows)


def _cmd_fpoly(ns) -> CommandOutput:
    query = {
        "subcommand": "fpoly",
        "lambda": _parts_json(ns.lam),
        "mu": _parts_json(ns.mu),
        "n": ns.n,
    }
    poly = f_polynomial(ns.lam, ns.mu, ns.n)
    return _poly_output(query, poly)


def _cmd_hpoly(ns) -> CommandOutput:
    query = {"subcommand": "hpoly", "b": ns.b, "mod": ns.mod}
    poly = h_polynomial(ns.b)
    if ns.mod is not None:
        poly = poly.reduce_mod(ns.mod)
    return _poly_output(query, poly)


def _cmd_gpoly(ns) -> CommandOutput:
    query = {"subcommand": "gpoly", "k": ns.k, "l": ns.l}
    return _poly_output(query, g_polynomial(ns.k, ns.l))


def _cmd_steenrod(ns) -> CommandOutput:
    if ns.op == "Sq":
        if ns.p not in (None, 2):
            raise UsageError("--p is fixed to 2 for --op Sq")
        expansion = steenrod_Sq(ns.k, ns.m)
        p = 2
    else:
        p = 3 if ns.p is None else ns.p
        expansion = steenrod_P(ns.k, ns.m, p)
    query = {"subcommand": "steenrod", "op": ns.op, "k": ns.k, "m": ns.m, "p": p}
    return _expansion_output(query, expansion.items())


def _cmd_verify(ns) -> CommandOutput:
    report = verify_suite(ns.max_weight)
    query = {"subcommand": "verify", "max_weight": ns.max_weight}
    result = {
        "max_weight": report.max_weight,
        "ok": report.ok,
        "suites": [
            {"name": s.name, "passed": s.passed, "checked": s.checked, "detail": s.detail}
            for s in report.suites
        ],
    }
    rows = [["suite", "passed", "checked", "detail"]] + [
        [s.name, str(s.passed).lower(), str(s.checked), s.detail] for s in report.suites
    ]
    return CommandOutput(
        query, result, report.summary_lines(), rows, exit_code=0 if report.ok else 3
    )


# ---------------------------------------------------------------------------
# parser assembly and rendering


def build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default="plain",
        help="output format (default: plain)",
    )

    parser = _Parser(
        prog="invkostka",
        description="Inverse Kostka matrix entries, chains, and coefficient rows.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("entry", parents=[fmt], help="single inverse Kostka entry")
    p.add_argument("--lambda", dest="lam", type=partition, required=True,
                   metavar="PARTITION", help="row partition, e.g. '[1,2]' or '1^1,2^1'")
    p.add_argument("--mu", dest="mu", type=partition, required=True,
                   metavar="PARTITION", help="column partition")
    p.add_argument("--engine", choices=("duan", "er", "brute", "all"), default="duan",
                   help="which algorithm to run; 'all' cross-checks them "
                        f"(brute skipped beyond {_BRUTE_MAX_N} variables)")
    p.set_defaults(handler=_cmd_entry)

    p = sub.add_parser("row", parents=[fmt],
                       help="whole row: Schur expansion of a monomial symmetric function")
    p.add_argument("--lambda", dest="lam", type=partition, required=True,
                   metavar="PARTITION")
    p.set_defaults(handler=_cmd_row)

    p = sub.add_parser("matrix", parents=[fmt],
                       help="Kostka matrix of a weight, or its inverse")
    p.add_argument("--weight", type=int, required=True, metavar="M")
    p.add_argument("--inverse", action="store_true", help="emit the inverse matrix")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("chains", parents=[fmt],
                       help="signed chains whose sum is the entry")
    p.add_argument("--lambda", dest="lam", type=partition, required=True,
                   metavar="PARTITION")
    p.add_argument("--mu", dest="mu", type=partition, required=True,
                   metavar="PARTITION")
    p.add_argument("--family", choices=("S", "T"), required=True,
                   help="S: strip-removal chains; T: part-removal chains")
    p.set_defaults(handler=_cmd_chains)

    p = sub.add_parser("fpoly", parents=[fmt],
                       help="signed solution-count polynomial of a pair")
    p.add_argument("--lambda", dest="lam", type=partition, required=True,
                   metavar="PARTITION")
    p.add_argument("--mu", dest="mu", type=partition, required=True,
                   metavar="PARTITION")
    p.add_argument("--n", type=int, default=None, metavar="N",
                   help="number of variables (default: max of the lengths)")
    p.set_defaults(handler=_cmd_fpoly)

    p = sub.add_parser("hpoly", parents=[fmt],
                       help="generating polynomial against a two-column rectangle")
    p.add_argument("b", type=int, help="number of columns of height 2")
    p.add_argument("--mod", type=int, default=None, metavar="P",
                   help="reduce coefficients mod P")
    p.set_defaults(handler=_cmd_hpoly)

    p = sub.add_parser("gpoly", parents=[fmt],
                       help="generating polynomial of a ones-and-threes row")
    p.add_argument("k", type=int, help="number of parts equal to 1")
    p.add_argument("l", type=int, help="number of parts equal to 3")
    p.set_defaults(handler=_cmd_gpoly)

    p = sub.add_parser("steenrod", parents=[fmt],
                       help="Schur coefficient row of a Steenrod operation")
    p.add_argument("--op", choices=("P", "Sq"), required=True)
    p.add_argument("--k", type=int, required=True, metavar="K")
    p.add_argument("--m", type=int, required=True, metavar="M")
    p.add_argument("--p", type=int, default=None, metavar="P",
                   help="odd prime for --op P (default 3); fixed to 2 for Sq")
    p.set_defaults(handler=_cmd_steenrod)

    p = sub.add_parser("verify", parents=[fmt], help="run the cross-validation suites")
    p.add_argument("--max-weight", type=int, required=True, metavar="W")
    p.set_defaults(handler=_cmd_verify)

    return parser


def _render(out: CommandOutput, fmt: str) -> None:
    if out.result is None and out.exit_code:
        return
    if fmt == "json":
        print(json.dumps({"query": out.query, "result": out.result}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(out.csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        for line in out.plain:
            print(line)


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        out = ns.handler(ns)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except PartitionParseError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except WeightMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (FormulaDomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _render(out, ns.format)
    return out.exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
