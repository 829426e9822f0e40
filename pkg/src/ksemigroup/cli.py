"""``kseg``: command-line access to the analyses.

Exit codes: 0 success, 1 a negative answer was computed (not a K-semigroup,
failed checks, invalid table), 2 the input could not be processed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructors import (CategoryError, MorExtensionSpec, NilpotentSpec, ReesSemigroup, SmallCategory,
                           SpecError, mor_extension, nilpotent_from_spec, semigroup_of_category)
from .core import BoundExceeded, SemigroupError, find_violations, validate
from .enumeration import (EXHAUSTIVE_CAP, EnumerationRefused, EnumerationTask, candidate_count,
                          enumerate_semigroups, verify_corpus)
from .k_analysis import annihilators, categoricity_witness, check_lemma1, nilpotency_degree
from .structure import category_interpretation_check, decompose


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON ({exc})") from None


def _load_semigroup(path: str):
    try:
        return validate(_load(path))
    except SemigroupError as exc:
        raise UsageError(f"{path}: not a semigroup with zero: {exc}") from None


def render_text(doc, indent: int = 0) -> str:
    """Fixed plain-text rendering of a JSON payload."""
    pad = "  " * indent
    if isinstance(doc, dict) and {"elements", "zero", "table"} <= set(doc):
        els = doc["elements"]
        width = max(len(x) for x in els)
        lines = [pad + "*".rjust(width) + " | " + " ".join(x.rjust(width) for x in els)]
        lines.append(pad + "-" * (width + 3 + (width + 1) * len(els) - 1))
        for x, row in zip(els, doc["table"]):
            lines.append(pad + x.rjust(width) + " | " + " ".join(v.rjust(width) for v in row))
        return "\n".join(lines)
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (str, int, bool)) or x is None for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(render_text(x, indent) if isinstance(x, (dict, list)) else pad + json.dumps(x) for x in doc)
    return pad + json.dumps(doc)


class Emitter:
    def __init__(self, args):
        self.fmt = args.format
        self.path = args.output
        self.stream = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout

    def doc(self, payload):
        if self.fmt == "json":
            self.stream.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        else:
            self.stream.write(render_text(payload) + "\n")

    def line(self, payload):
        self.stream.write(json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n")

    def close(self):
        if self.stream is not sys.stdout:
            self.stream.close()


def cmd_validate(args, out: Emitter) -> int:
    doc = _load(args.input)
    try:
        violations = find_violations(doc)
    except SemigroupError as exc:
        violations = exc.violations
    if violations:
        out.doc({"valid": False, "violations": [v.to_json() for v in violations]})
        return 1
    out.doc({"valid": True, "semigroup": validate(doc).to_json()})
    return 0


def cmd_analyze(args, out: Emitter) -> int:
    S = _load_semigroup(args.input)
    w = categoricity_witness(S)
    out.doc({
        "order": S.order,
        "k_semigroup": w is None,
        "witness": None if w is None else list(w.as_tuple()),
        "annihilators": annihilators(S).to_json(S),
        "nilpotency_degree": nilpotency_degree(S),
        "lemma1_biconditional": check_lemma1(S),
    })
    return 0 if w is None else 1


def cmd_decompose(args, out: Emitter) -> int:
    S = _load_semigroup(args.input)
    w = categoricity_witness(S)
    if w is not None:
        out.doc({"k_semigroup": False, "witness": list(w.as_tuple())})
        return 1
    report = decompose(S)
    out.doc(report.to_json())
    return 0 if report.ok else 1


def cmd_construct(args, out: Emitter) -> int:
    doc = _load(args.input)
    try:
        if args.kind == "category":
            S = semigroup_of_category(SmallCategory.from_json(doc))
        elif args.kind == "nilpotent":
            S = nilpotent_from_spec(NilpotentSpec.from_json(doc))
        elif args.kind == "rees":
            S = ReesSemigroup.from_json(doc).materialize()
        else:
            S = mor_extension(MorExtensionSpec.from_json(doc))
    except (CategoryError, SpecError) as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    out.doc(S.to_json())
    return 0


def cmd_enumerate(args, out: Emitter) -> int:
    task = EnumerationTask(order=args.order, k_only=args.k_only, dedup=args.up_to_iso,
                           worker_count=args.jobs, sample=args.sample, seed=args.seed, cap=args.cap)
    try:
        task.check()
    except EnumerationRefused as exc:
        raise UsageError(str(exc)) from None
    stream = enumerate_semigroups(task)
    if args.count:
        count = sum(1 for _ in stream)
        scanned = args.sample if args.sample is not None else candidate_count(args.order)
        out.doc({"order": args.order, "k_only": args.k_only, "up_to_iso": args.up_to_iso,
                 "tables_scanned": scanned, "count": count})
    else:
        for S in stream:
            out.line(S.to_json())
    return 0


def cmd_verify(args, out: Emitter) -> int:
    try:
        verdict = verify_corpus(args.max_order, worker_count=args.jobs, cap=args.cap)
    except EnumerationRefused as exc:
        raise UsageError(str(exc)) from None
    payload = verdict.to_json()
    payload["lemma1_exhibit_count"] = len(payload["lemma1_exhibits"])
    if not args.exhibits:
        payload["lemma1_exhibits"] = payload["lemma1_exhibits"][:3]
    out.doc(payload)
    return 0 if verdict.ok else 1


def cmd_check_category(args, out: Emitter) -> int:
    S = _load_semigroup(args.semigroup)
    try:
        C = SmallCategory.from_json(_load(args.category))
    except CategoryError as exc:
        raise UsageError(f"{args.category}: {exc}") from None
    w = categoricity_witness(S)
    if w is not None:
        out.doc({"k_semigroup": False, "witness": list(w.as_tuple())})
        return 1
    checks = category_interpretation_check(S, C)
    out.doc({"passed": all(c.passed for c in checks), "checks": [c.to_json() for c in checks]})
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="kseg", description="Finite semigroups categorical at zero.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a semigroup table")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="categoricity, annihilators, nilpotency")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", parents=[common], help="full decomposition report")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", parents=[common], help="build a semigroup from a construction spec")
    p.add_argument("kind", choices=("category", "nilpotent", "rees", "mor-ext"))
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common], help="all semigroups with zero of one order (JSON lines)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--k-only", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--count", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=int, help="random tables to draw (required above the cap)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP, help="largest order scanned exhaustively")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check every law on all semigroups up to an order")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP)
    p.add_argument("--exhibits", action="store_true", help="list every non-K semigroup where 'Ann_q = S iff S^3 = 0' fails")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-category", parents=[common], help="read a decomposition in category terms")
    p.add_argument("--semigroup", required=True)
    p.add_argument("--category", required=True)
    p.set_defaults(func=cmd_check_category)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "jobs", 1) < 1:
        print("kseg: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        out = Emitter(args)
    except OSError as exc:
        print(f"kseg: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, BoundExceeded) as exc:
        print(f"kseg: {exc}", file=sys.stderr)
        return 2
    finally:
        out.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
