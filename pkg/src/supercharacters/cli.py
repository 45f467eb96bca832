"""Command-line interface.

Subcommands: count, enumerate, verify, dual, classify, oracle, lattice.
Theories travel as JSON Lines, one record per line, ordered by (number of
classes, canonical key).  Exit codes: 0 success, 2 verification failure,
3 count mismatch, 4 bad input, 5 search budget exhausted.  The environment
variable SUPERCHAR_THREADS (default 1) caps worker threads for per-theory
verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .bruteforce import BudgetExhaustedError, brute_force_enumerate
from .constructions import (
    automorphism_witness,
    direct_decompositions,
    wedge_decompositions,
)
from .enumeration import CountMismatchError, all_scts_cp_c2_c2, all_theories
from .groups import DEFAULT_MAX_P, GroupSpec
from .lattice import lattice_dot
from .theories import (
    TheoryRecord,
    canonical_key,
    dual,
    sort_key,
    theory_from_json,
    theory_to_json,
    verify,
)

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_COUNT = 3
EXIT_INPUT = 4
EXIT_BUDGET = 5

_FAMILIES = {
    "cp": "Cp",
    "klein": "Klein",
    "cpc2": "CpC2",
    "c2cubed": "C2cubed",
    "cpc2c2": "CpC2C2",
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; these are bad input here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _threads() -> int:
    raw = os.environ.get("SUPERCHAR_THREADS", "1")
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"SUPERCHAR_THREADS must be an integer, got {raw!r}")
    if val < 1:
        raise ValueError(f"SUPERCHAR_THREADS must be at least 1, got {val}")
    return val


def _group_from_args(args) -> GroupSpec:
    family = _FAMILIES[args.group]
    needs_p = family in ("Cp", "CpC2", "CpC2C2")
    if needs_p and args.p is None:
        raise ValueError(f"--p is required for --group {args.group}")
    if not needs_p and args.p is not None:
        raise ValueError(f"--p does not apply to --group {args.group}")
    if needs_p and args.p > args.max_p:
        raise ValueError(f"p={args.p} exceeds the bound {args.max_p} (see --max-p)")
    return GroupSpec.from_family(family, args.p)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _read_records(path: str | None) -> list[TheoryRecord]:
    if path is None or path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    records = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            records.append(theory_from_json(json.loads(line)))
        except ValueError as e:
            raise ValueError(f"line {lineno}: {e}") from None
    return records


def _write_records(records, path: str | None) -> None:
    out, close = _open_out(path)
    try:
        for rec in records:
            out.write(json.dumps(theory_to_json(rec), separators=(",", ":")))
            out.write("\n")
    finally:
        if close:
            out.close()


def _cmd_count(args) -> int:
    _records, report = all_scts_cp_c2_c2(args.p, args.max_p)
    if args.json:
        print(json.dumps(report.to_json(), separators=(",", ":")))
    else:
        print(f"p={report.p} (k={report.k}, l={report.l}, n={report.n})")
        for key in ("automorphic", "direct", "overlap", "wedge", "maximal", "total"):
            print(f"{key} {getattr(report, key)} (predicted {report.predicted[key]})")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    g = _group_from_args(args)
    records = all_theories(g, args.max_p)
    _write_records(records, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    records = _read_records(args.file)
    threads = _threads()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: verify(r.theory), records))
    else:
        results = [verify(r.theory) for r in records]
    failures = 0
    for i, v in enumerate(results):
        if v is None:
            print(f"theory {i}: ok")
        else:
            failures += 1
            print(f"theory {i}: violation condition={v.condition}: {v.message}")
    return EXIT_VERIFY if failures else EXIT_OK


def _cmd_dual(args) -> int:
    records = _read_records(args.file)
    out = []
    for rec in records:
        d = dual(rec.theory)
        out.append(TheoryRecord(
            d, set(), [{"construction": "dual", "source": canonical_key(rec.theory)}],
        ))
    out.sort(key=lambda r: sort_key(r.theory))
    _write_records(out, args.out)
    return EXIT_OK


def _classify_one(t) -> tuple[set[str], dict]:
    """Recompute construction tags with explicit decomposition witnesses."""
    tags: set[str] = set()
    witness: dict = {}
    if all(len(b) == 1 for b in t.classes.blocks):
        tags.add("minimal")
    if len(t.classes.blocks) <= 2:
        tags.add("maximal")
    gens = automorphism_witness(t)
    if gens is not None:
        tags.add("automorphic")
        witness["aut"] = [[list(i) for i in a.gen_images] for a in gens]
    pairs = direct_decompositions(t)
    if pairs:
        h1, h2 = pairs[0]
        tags.add("direct")
        witness["direct"] = [h1.generator_exps(), h2.generator_exps()]
    wedges = wedge_decompositions(t)
    if wedges:
        tags.add("wedge")
        witness["wedge"] = {"N": wedges[0].n.generator_exps()}
    return tags, witness


def _cmd_classify(args) -> int:
    records = _read_records(args.file)
    for i, rec in enumerate(records):
        tags, witness = _classify_one(rec.theory)
        parts = [f"theory {i}:", f"classes={len(rec.theory.classes)}",
                 "tags=" + (",".join(sorted(tags)) or "-")]
        for name in ("aut", "direct", "wedge"):
            if name in witness:
                parts.append(f"{name}={json.dumps(witness[name], separators=(',', ':'))}")
        print(" ".join(parts))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _group_from_args(args)
    theories = brute_force_enumerate(g, args.budget)
    records = [TheoryRecord(t, set(), [{"construction": "search"}]) for t in theories]
    _write_records(records, args.out)
    print(f"count {len(records)}", file=sys.stderr)
    return EXIT_OK


def _cmd_lattice(args) -> int:
    records = _read_records(args.file)
    groups = {rec.theory.group for rec in records}
    if len(groups) != 1:
        raise ValueError("lattice needs records from exactly one group")
    text = lattice_dot(records)
    out, close = _open_out(args.dot)
    try:
        out.write(text)
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="supercharacters", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_max_p(p):
        p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P,
                       help=f"largest accepted prime (default {DEFAULT_MAX_P})")

    p_count = sub.add_parser("count", help="enumerate C_p x C_2 x C_2 and check the formulas")
    p_count.add_argument("--p", type=int, required=True)
    p_count.add_argument("--json", action="store_true")
    add_max_p(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="list every theory of a group as JSONL")
    p_enum.add_argument("--group", choices=sorted(_FAMILIES), required=True)
    p_enum.add_argument("--p", type=int)
    p_enum.add_argument("--out", help="output file (default stdout)")
    add_max_p(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="check each JSONL theory")
    p_verify.add_argument("file", nargs="?", help="JSONL input (default stdin)")
    p_verify.set_defaults(func=_cmd_verify)

    p_dual = sub.add_parser("dual", help="swap class and character partitions")
    p_dual.add_argument("file", nargs="?", help="JSONL input (default stdin)")
    p_dual.add_argument("--out", help="output file (default stdout)")
    p_dual.set_defaults(func=_cmd_dual)

    p_classify = sub.add_parser("classify", help="recompute construction tags with witnesses")
    p_classify.add_argument("file", nargs="?", help="JSONL input (default stdin)")
    p_classify.set_defaults(func=_cmd_classify)

    p_oracle = sub.add_parser("oracle", help="brute-force search for all theories")
    p_oracle.add_argument("--group", choices=sorted(_FAMILIES), required=True)
    p_oracle.add_argument("--p", type=int)
    p_oracle.add_argument("--budget", type=int, help="search node budget")
    p_oracle.add_argument("--out", help="output file (default stdout)")
    add_max_p(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_lattice = sub.add_parser("lattice", help="DOT digraph of covering refinements")
    p_lattice.add_argument("file", nargs="?", help="JSONL input (default stdin)")
    p_lattice.add_argument("--dot", required=True, help="output DOT file ('-' for stdout)")
    p_lattice.set_defaults(func=_cmd_lattice)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except CountMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COUNT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
