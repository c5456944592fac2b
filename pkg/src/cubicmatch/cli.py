"""Command-line surface.

Subcommands: decide, exact, gen, member, witness, verify. Graphs are
read from a file or standard input ('-'), in edge-list or graph6 form;
the format is auto-detected unless --format is given (graph6 bodies
never start with a digit, edge lists do). JSON output is compact and
key-sorted, so identical inputs produce byte-identical output.

Exit codes: 0 success (for decide: the numbers agree), 1 for decide
when the numbers differ and for verify when mismatches or record errors
occurred, 2 for usage, format, or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decide import decide_equality, local_pair_violations
from .exact import (
    BudgetError,
    SolveBudget,
    max_induced_matching,
    max_matching,
    max_uniquely_restricted_matching,
)
from .family import (
    EndType,
    closed_ladder,
    end_variant_ladder,
    equality_certified,
    ladder,
    recognize,
)
from .graph import FormatError, Graph, parse_edge_list, parse_graph6, to_graph6
from .harness import VerifySummary, verify_lines
from .matching import find_alternating_cycle, matching_from


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str | None) -> Graph:
    text = _read_text(path)
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty input")
    if fmt is None:
        fmt = "edges" if stripped[0].isdigit() else "graph6"
    if fmt == "edges":
        return parse_edge_list(text)
    first = next(line for line in stripped.splitlines() if line.strip())
    return parse_graph6(first.strip())


def _parse_matching_arg(arg: str) -> list[tuple[int, int]]:
    pairs = []
    for token in arg.replace(",", " ").split():
        u, _, v = token.partition("-")
        pairs.append((int(u), int(v)))
    return pairs


def _cmd_decide(args) -> int:
    g = _load_graph(args.path, args.format)
    report = decide_equality(g, compute_induced_value=args.induced_value)
    if args.output == "json":
        print(_jdump(report.to_json()))
    elif report.equal:
        print(f"equal (value {report.nu_ur})")
    else:
        r = report.refutation
        detail = (
            f"component of order {len(r.vertices)} fails certification"
            if hasattr(r, "vertices")
            else f"uniquely restricted {r.ur_size} vs induced {r.induced_size}"
        )
        print(f"not equal ({detail})")
    return 0 if report.equal else 1


def _cmd_exact(args) -> int:
    g = _load_graph(args.path, args.format)
    budget = SolveBudget(max_order=args.max_order, force=args.force)
    if args.what == "nu":
        value, witness = max_matching(g)
    elif args.what == "nus":
        value, witness = max_induced_matching(g, budget)
    else:
        value, witness = max_uniquely_restricted_matching(g, budget)
    if args.output == "json":
        print(
            _jdump(
                {
                    "what": args.what,
                    "value": value,
                    "witness": witness.to_labels(),
                }
            )
        )
    else:
        print(f"{args.what} = {value}")
        print("witness: " + (" ".join(witness.to_labels()) or "(empty)"))
    return 0


def _cmd_gen(args) -> int:
    if args.family == "lk":
        g, spec = ladder(args.k)
    elif args.family == "b2":
        g, spec = closed_ladder(args.k)
    else:
        if not args.ends:
            raise ValueError("--ends left,right is required for --family b1")
        parts = args.ends.split(",")
        if len(parts) != 2:
            raise ValueError("--ends takes two comma-separated values")
        ends = tuple(EndType(p.strip()) for p in parts)
        g, spec = end_variant_ladder(args.k, *ends)
    sys.stdout.write(to_graph6(g).decode("ascii") + "\n")
    if args.spec:
        print(_jdump(spec.to_json()))
    return 0


def _cmd_member(args) -> int:
    g = _load_graph(args.path, args.format)
    if args.set == "b":
        spec = recognize(g)
        member = spec is not None
    else:
        member = equality_certified(g)
        spec = recognize(g) if member else None
    if args.output == "json":
        print(
            _jdump(
                {
                    "member": member,
                    "set": args.set,
                    "spec": spec.to_json() if spec else None,
                }
            )
        )
    else:
        line = "yes" if member else "no"
        if spec:
            line += " " + _jdump(spec.to_json())
        print(line)
    return 0


def _cmd_witness(args) -> int:
    g = _load_graph(args.path, args.format)
    pairs = _parse_matching_arg(args.matching)
    mm = matching_from(g, pairs)
    if args.kind == "altcycle":
        witness = find_alternating_cycle(g, mm)
        if args.output == "json":
            print(
                _jdump(
                    {
                        "kind": "altcycle",
                        "cycle": list(witness.cycle) if witness else None,
                    }
                )
            )
        else:
            print(
                "none"
                if witness is None
                else " ".join(str(v) for v in witness.cycle)
            )
        return 0
    violations = local_pair_violations(g, mm)
    if args.output == "json":
        print(
            _jdump(
                {
                    "kind": "localpair",
                    "violations": [v.to_json() for v in violations],
                }
            )
        )
    elif not violations:
        print("none")
    else:
        for v in violations:
            print(
                f"{v.kind}: edges "
                + " ".join(f"{a}-{b}" for a, b in v.edges)
                + " implies "
                + " ".join(v.implied_matching.to_labels())
            )
    return 0


def _cmd_verify(args) -> int:
    text = _read_text(args.path)
    summary = VerifySummary()
    for rec in verify_lines(
        text.splitlines(),
        run_oracle=args.oracle_max_n is not None,
        oracle_max_n=args.oracle_max_n or 12,
        check_family=args.family_check,
        jobs=args.jobs,
    ):
        summary.update(rec)
        print(_jdump(rec.to_json()))
    print(_jdump({"summary": summary.to_json()}))
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cubicmatch",
        description=(
            "Decide whether the induced and uniquely restricted matching "
            "numbers of a subcubic graph coincide; exact solvers, family "
            "generators, membership tests, certificates, batch verification."
        ),
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p, with_format=True):
        p.add_argument("path", help="input file or - for stdin")
        if with_format:
            p.add_argument(
                "--format", choices=("graph6", "edges"), default=None
            )
        p.add_argument(
            "--output", choices=("text", "json"), default="text"
        )

    p = sub.add_parser("decide", help="decide equality of the two numbers")
    add_io(p)
    p.add_argument(
        "--induced-value",
        action="store_true",
        help="also solve the induced optimum exactly when unequal",
    )
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("exact", help="exact matching numbers with witness")
    p.add_argument("--what", choices=("nu", "nus", "nuur"), required=True)
    p.add_argument("--max-order", type=int, default=26)
    p.add_argument("--force", action="store_true")
    add_io(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("gen", help="generate a family member as graph6")
    p.add_argument("--family", choices=("lk", "b1", "b2"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--ends",
        default=None,
        help="left,right end types for b1: open|edge|cap",
    )
    p.add_argument(
        "--spec", action="store_true", help="also print the family spec JSON"
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("member", help="family / certified-equality membership")
    p.add_argument("--set", choices=("b", "bprime"), required=True)
    add_io(p)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("witness", help="certificates for a given matching")
    p.add_argument("--kind", choices=("altcycle", "localpair"), required=True)
    p.add_argument(
        "--matching",
        required=True,
        help="edge list like '0-1,2-3' (or space separated)",
    )
    add_io(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="batch-verify a graph6 stream")
    p.add_argument("path", help="input file or - for stdin")
    p.add_argument(
        "--oracle-max-n",
        type=int,
        default=None,
        help="enable the enumeration oracle up to this order",
    )
    p.add_argument(
        "--family-check",
        action="store_true",
        help=(
            "assert decision == family membership for 2-connected "
            "subcubic graphs of order at least 21"
        ),
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (FormatError, BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
