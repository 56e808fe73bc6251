"""Command-line interface.

Exit codes: 0 success / all theorems consistent, 1 validation failure or
theorem mismatch (also missing files), 2 usage errors. Witnesses are always
printed as element names, never as indices.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import OrderedSemigroup, StructureError, Verdict, default_names, parse, to_osg
from .classify import CLASS_KEYS, classify
from .constructions import power_semigroup
from .enumeration import (
    canonical_key,
    compatible_orders,
    emit_corpus,
    enumerate_tables,
    predicate_fn,
    search,
)
from .green import GREEN_KINDS, green_relation
from .verify import (
    MISMATCH,
    THEOREM_IDS,
    corpus_verify,
    outcome_to_json,
    theorem_suite,
)


def _fmt_witness(witness: tuple[str, ...]) -> str:
    return "(" + ", ".join(witness) + ")"


def _fmt_verdict(v: Verdict) -> str:
    if v.holds is None:
        text = "not_applicable"
    else:
        text = "true" if v.holds else "false"
    if v.witness:
        text += f"  witness={_fmt_witness(v.witness)}"
    if v.tag:
        text += f"  tag={v.tag}"
    return text


def _verdict_json(v: Verdict) -> dict:
    return {"holds": v.holds, "witness": list(v.witness), "tag": v.tag}


def _green_blocks(S: OrderedSemigroup, kind: str) -> list[list[str]]:
    rel = green_relation(S, kind)
    return [[S.names[i] for i in sorted(block)] for block in rel.blocks()]


def _load(path: str) -> OrderedSemigroup:
    text = Path(path).read_text()
    return parse(text, label=Path(path).stem)


def _print_diagnostics(exc: StructureError) -> None:
    for diag in exc.diagnostics:
        witness = f" witness={_fmt_witness(diag.witness)}" if diag.witness else ""
        print(f"{diag.kind}: {diag.message}{witness}")


def cmd_validate(args) -> int:
    try:
        S = _load(args.file)
    except StructureError as exc:
        print(f"invalid: {args.file}")
        _print_diagnostics(exc)
        return 1
    print(f"ok: {args.file} (n={S.n})")
    return 0


def cmd_analyze(args) -> int:
    S = _load(args.file)
    report = classify(S)
    theorems = theorem_suite(S)
    green = {kind: _green_blocks(S, kind) for kind in GREEN_KINDS}
    mismatch = any(out.verdict == MISMATCH for out in theorems.values())

    if args.format == "json":
        payload = {
            "structure": S.label or "structure",
            "classes": {key: _verdict_json(report[key]) for key in CLASS_KEYS},
            "green": green,
            "theorems": {tid: outcome_to_json(theorems[tid]) for tid in THEOREM_IDS},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"structure: {S.label or 'structure'}")
        print("elements: " + " ".join(S.names))
        print("classes:")
        for key in CLASS_KEYS:
            print(f"  {key}: {_fmt_verdict(report[key])}")
        print("green:")
        for kind in GREEN_KINDS:
            blocks = " ".join("{" + ",".join(block) + "}" for block in green[kind])
            print(f"  {kind}: {blocks}")
        print("theorems:")
        for tid in THEOREM_IDS:
            out = theorems[tid]
            line = f"  {tid}: {out.verdict}"
            if out.witness:
                line += f"  witness={_fmt_witness(out.witness)}"
            print(line)
    return 1 if mismatch else 0


def cmd_theorems(args) -> int:
    S = _load(args.file)
    report = theorem_suite(S, eidem=args.eidem, linv_quant=args.linv_quant)
    mismatch = any(out.verdict == MISMATCH for out in report.values())
    if args.format == "json":
        payload = {
            "structure": S.label or "structure",
            "theorems": {tid: outcome_to_json(report[tid]) for tid in THEOREM_IDS},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"structure: {S.label or 'structure'}")
        for tid in THEOREM_IDS:
            out = report[tid]
            line = f"{tid}: {out.verdict}"
            if out.sides:
                sides = ", ".join(f"{name}={str(value).lower()}" for name, value in out.sides)
                line += f"  [{sides}]"
            if out.witness:
                line += f"  witness={_fmt_witness(out.witness)}"
            print(line)
    return 1 if mismatch else 0


def cmd_green(args) -> int:
    S = _load(args.file)
    print(f"relation: {args.relation}")
    for block in _green_blocks(S, args.relation):
        print("{" + ",".join(block) + "}")
    return 0


def cmd_enumerate(args) -> int:
    if args.emit:
        manifest = emit_corpus(
            args.n,
            Path(args.emit),
            expr=args.filter,
            workers=args.workers,
            allow_large=args.allow_large,
        )
        print(
            f"emitted {manifest['canonical']} canonical structures "
            f"({manifest['labeled']} labeled) to {args.emit}"
        )
        return 0

    pred = predicate_fn(args.filter) if args.filter else None
    names_cache: dict[int, tuple[str, ...]] = {}
    tables = 0
    ordered = 0
    seen: set[str] = set()
    for table in enumerate_tables(args.n, allow_large=args.allow_large):
        tables += 1
        for leq in compatible_orders(table):
            names = names_cache.setdefault(args.n, default_names(args.n))
            S = OrderedSemigroup(names, table, leq)
            if pred is not None and not pred(S):
                continue
            ordered += 1
            if args.up_to_iso:
                seen.add(canonical_key(S))
    line = f"tables: {tables}, ordered: {ordered}"
    if args.up_to_iso:
        line += f", up_to_iso: {len(seen)}"
    print(line)
    return 0


def cmd_search(args) -> int:
    found = 0
    for S in search(
        args.n,
        args.where,
        limit=args.limit,
        up_to_iso=args.up_to_iso,
        allow_large=args.allow_large,
    ):
        found += 1
        print(f"# match {found} key={canonical_key(S)}")
        sys.stdout.write(to_osg(S))
        print()
    print(f"# total: {found}")
    return 0


def cmd_power(args) -> int:
    S = _load(args.file)
    if not S.is_discrete():
        print("power construction needs a discrete (or absent) order section")
        return 1
    P = power_semigroup(S.table, S.names, label=S.label)
    text = to_osg(P)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output} (n={P.n})")
    else:
        sys.stdout.write(text)
    return 0


def cmd_corpus(args) -> int:
    summary = corpus_verify(
        args.n_max,
        theorems=args.theorems.split(",") if args.theorems else None,
        eidem=args.eidem,
        linv_quant=args.linv_quant,
        emit_dir=args.emit,
        workers=args.workers,
        allow_large=args.allow_large,
    )
    if args.format == "json":
        print(json.dumps(summary, indent=2))
    else:
        print(
            f"structures: {summary['structures']} (n <= {summary['n_max']}), "
            f"eidem={summary['eidem']}, linv_quant={summary['linv_quant']}"
        )
        for tid, counts in summary["theorems"].items():
            print(
                f"{tid}: consistent={counts['consistent']} "
                f"mismatch={counts['mismatch']} not_applicable={counts['not_applicable']}"
            )
        print(f"mismatches: {summary['mismatch_count']}")
    return 1 if summary["mismatch_count"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="osg", description="Finite ordered semigroup toolkit"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="check a structure file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="classes, Green relations, and theorem verdicts")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("theorems", help="theorem suite verdicts")
    p.add_argument("file")
    p.add_argument("--eidem", choices=("leq", "eq"), default="leq")
    p.add_argument("--linv-quant", choices=("forall", "exists"), default="forall")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_theorems)

    p = sub.add_parser("green", help="print the blocks of a Green relation")
    p.add_argument("file")
    p.add_argument("--relation", choices=GREEN_KINDS, required=True)
    p.set_defaults(fn=cmd_green)

    p = sub.add_parser("enumerate", help="count or emit all small structures")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--filter", default=None)
    p.add_argument("--count", action="store_true")
    p.add_argument("--emit", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("search", help="stream structures matching a predicate")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--where", required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("power", help="power semigroup of a plain (discrete) table")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_power)

    p = sub.add_parser("corpus", help="verify the theorem catalog over a corpus")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--theorems", default=None, help="comma-separated theorem ids")
    p.add_argument("--eidem", choices=("leq", "eq"), default="leq")
    p.add_argument("--linv-quant", choices=("forall", "exists"), default="forall")
    p.add_argument("--emit", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except StructureError as exc:
        print(f"invalid input: {exc.args[0] if exc.args else exc}")
        _print_diagnostics(exc)
        return 1
    except FileNotFoundError as exc:
        print(f"file not found: {exc.filename}")
        return 1
    except ValueError as exc:
        print(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
