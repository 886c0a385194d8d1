"""Command-line front end.

One query per invocation.  Human-readable output goes to stdout; passing
--records PATH additionally writes one machine-readable JSON line per
query (overwriting the file).  Machine records are deterministic: same
input and version give byte-identical output, so wall-clock timing is
printed only on the human stream.

Exit codes: 0 success, 1 domain error (message names the failing check),
2 syntax or usage error, 3 enumeration resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional

from .coset_enumeration import EnumerationLimits, enumerate_cosets
from .double_cosets import DoubleCosetId, UnorderedPair, dc_all, dc_id
from .errors import (HandleCosetError, MissingPPlus, MissingSection,
                     ResourceExhausted, SkgSyntaxError)
from .finite_quotient import SeparationVerdict, quotient_separate
from .handle_classifier import (CaseLabel, ClassifierContext, HandleInvariant,
                                enumerate_classes, handle_invariant,
                                image_member, nonsurjectivity_witness)
from .knot_input import format_word, parse_input, parse_word, validate
from .word_algebra import Word

ENV_MAX_COSETS = "HANDLE_COSET_MAX_COSETS"


def _limits(max_cosets: Optional[int] = None) -> EnumerationLimits:
    if max_cosets is None:
        env = os.environ.get(ENV_MAX_COSETS)
        if env is not None:
            try:
                max_cosets = int(env)
            except ValueError:
                raise SkgSyntaxError(1, 1, f"{ENV_MAX_COSETS} must be an integer")
    if max_cosets is None:
        return EnumerationLimits()
    return EnumerationLimits(max_live_cosets=max_cosets,
                             max_total_defined=10 * max_cosets)


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SkgSyntaxError(1, 1, f"cannot read {path}: {exc.strerror}")
    return parse_input(text, label=Path(path).stem)


def _case(args) -> CaseLabel:
    return CaseLabel(args.case)


def _cords(args, presentation, expected: int) -> list[Word]:
    words = [parse_word(text, presentation) for text in args.cord]
    if len(words) != expected:
        raise SkgSyntaxError(1, 1, f"expected {expected} --cord option(s), got {len(words)}")
    return words


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _dc_json(d: DoubleCosetId, names) -> dict:
    return {"canonical": d.canonical, "orbit_size": d.orbit_size,
            "representative": format_word(d.representative(), names)}


def _value_json(value, names):
    if isinstance(value, DoubleCosetId):
        return _dc_json(value, names)
    return {"pair": [_value_json(value.first, names),
                     _value_json(value.second, names)]}


def _invariant_json(inv: HandleInvariant, names) -> dict:
    return {"kind": inv.kind, "case": inv.case.number,
            "core_oriented": inv.core_oriented,
            "value": _value_json(inv.value, names)}


def _value_text(value, names) -> str:
    if isinstance(value, DoubleCosetId):
        return f"[{format_word(value.representative(), names)}]"
    return "{" + ", ".join(_value_text(v, names) for v in value.elements) + "}"


def _emit(args, record: dict) -> None:
    if getattr(args, "records", None):
        line = json.dumps(record, sort_keys=True, separators=(",", ":"))
        with open(args.records, "w", encoding="utf-8") as fh:
            fh.write(line + "\n")


def _context(args, input) -> ClassifierContext:
    return ClassifierContext.build(input, _limits())


def _defined(ctx: ClassifierContext) -> int:
    total = ctx.p_table.total_defined
    if ctx.p_plus_table is not None:
        total += ctx.p_plus_table.total_defined
    return total


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_validate(args) -> int:
    input = _load(args.file)
    report = validate(input, _limits())
    for check in report.checks:
        print(f"[{check.status}] {check.name}: {check.detail}")
    failures = len(report.failures)
    print(f"{len(report.checks)} checks, {failures} failed")
    _emit(args, {"command": "validate", "input": input.label,
                 "checks": [{"name": c.name, "status": c.status,
                             "detail": c.detail} for c in report.checks]})
    return 0 if failures == 0 else 1


def _cmd_enumerate(args) -> int:
    input = _load(args.file)
    if args.subgroup == "P+":
        if input.p_plus_generators is None:
            raise MissingPPlus("this input has no P+ section")
        subgroup = input.p_plus_generators
    else:
        subgroup = input.p_generators
    start = time.perf_counter()
    table = enumerate_cosets(input.presentation, subgroup, _limits(args.max_cosets))
    elapsed = time.perf_counter() - start
    print(f"subgroup {args.subgroup}: index {table.index}")
    print(f"cosets defined: {table.total_defined}")
    print(f"time: {elapsed:.3f}s")
    _emit(args, {"command": "enumerate", "input": input.label,
                 "subgroup": args.subgroup, "index": table.index,
                 "cosets_defined": table.total_defined})
    return 0


def _cmd_invariant(args) -> int:
    input = _load(args.file)
    case = _case(args)
    g = _cords(args, input.presentation, 1)[0]
    start = time.perf_counter()
    ctx = _context(args, input)
    inv = handle_invariant(ctx, case, args.core_oriented, g)
    elapsed = time.perf_counter() - start
    names = input.presentation.generator_names
    core = "oriented core" if args.core_oriented else "unoriented core"
    print(f"case {case.number}, {core}")
    print(f"invariant: {_value_text(inv.value, names)}")
    print(f"time: {elapsed:.3f}s ({_defined(ctx)} cosets defined)")
    _emit(args, {"command": "invariant", "input": input.label,
                 "words": list(args.cord),
                 "result": _invariant_json(inv, names),
                 "cosets_defined": _defined(ctx)})
    return 0


def _cmd_equiv(args) -> int:
    input = _load(args.file)
    case = _case(args)
    g1, g2 = _cords(args, input.presentation, 2)
    ctx = _context(args, input)
    inv1 = handle_invariant(ctx, case, args.core_oriented, g1)
    inv2 = handle_invariant(ctx, case, args.core_oriented, g2)
    verdict = "equivalent" if inv1 == inv2 else "inequivalent"
    print(verdict)
    _emit(args, {"command": "equiv", "input": input.label,
                 "case": case.number, "core_oriented": args.core_oriented,
                 "words": list(args.cord), "verdict": verdict,
                 "cosets_defined": _defined(ctx)})
    return 0


def _cmd_classes(args) -> int:
    input = _load(args.file)
    case = _case(args)
    ctx = _context(args, input)
    classes = enumerate_classes(ctx, case, args.core_oriented)
    names = input.presentation.generator_names
    core = "oriented core" if args.core_oriented else "unoriented core"
    print(f"case {case.number}, {core}: {len(classes)} classes")
    for k, (inv, rep) in enumerate(classes, start=1):
        print(f"  class {k}: representative {format_word(rep, names)}  "
              f"value {_value_text(inv.value, names)}")
    _emit(args, {"command": "classes", "input": input.label,
                 "case": case.number, "core_oriented": args.core_oriented,
                 "count": len(classes),
                 "classes": [{"representative": format_word(rep, names),
                              "value": _invariant_json(inv, names)}
                             for inv, rep in classes],
                 "cosets_defined": _defined(ctx)})
    return 0


def _cmd_image_check(args) -> int:
    input = _load(args.file)
    case = _case(args)
    ctx = _context(args, input)
    parts = [p.strip() for p in args.candidate.split(";")]
    words = [parse_word(p, input.presentation) for p in parts]
    if case is CaseLabel.CASE3:
        table, acting = ctx.p_plus_table, input.p_plus_generators
    else:
        table, acting = ctx.p_table, input.p_generators
    expected = {("case3", False): 4, ("case3", True): 2,
                ("case12", True): 1, ("case12", False): 2}
    key = ("case3" if case is CaseLabel.CASE3 else "case12", args.core_oriented)
    if len(words) != expected[key]:
        raise SkgSyntaxError(1, 1, f"--candidate needs {expected[key]} words "
                             f"for case {case.number}"
                             f"{' with oriented core' if args.core_oriented else ''}")
    ids = [dc_id(table, acting, w) for w in words]
    if len(ids) == 1:
        value = ids[0]
    elif len(ids) == 2:
        value = UnorderedPair.of(ids[0], ids[1])
    else:
        value = UnorderedPair.of(UnorderedPair.of(ids[0], ids[1]),
                                 UnorderedPair.of(ids[2], ids[3]))
    candidate = HandleInvariant(case, args.core_oriented, value)
    verdict = "in-image" if image_member(ctx, case, args.core_oriented, candidate) \
        else "not-in-image"
    print(verdict)
    _emit(args, {"command": "image-check", "input": input.label,
                 "case": case.number, "core_oriented": args.core_oriented,
                 "words": parts, "verdict": verdict,
                 "cosets_defined": _defined(ctx)})
    return 0


def _cmd_separate(args) -> int:
    input = _load(args.file)
    case = _case(args)
    g1, g2 = _cords(args, input.presentation, 2)
    verdict = quotient_separate(input, case, args.core_oriented, g1, g2,
                                max_degree=args.max_degree)
    text = "distinct" if verdict is SeparationVerdict.DISTINCT else "unknown"
    print(text)
    _emit(args, {"command": "separate", "input": input.label,
                 "case": case.number, "core_oriented": args.core_oriented,
                 "words": list(args.cord), "max_degree": args.max_degree,
                 "verdict": text})
    return 0


def _cmd_selftest(args) -> int:
    from . import selftest

    results = selftest.run_all()
    failures = 0
    for result in results:
        tag = "PASS" if result.passed else "FAIL"
        print(f"{tag} {result.name}: {result.detail}")
        if not result.passed:
            failures += 1
    print(f"{len(results)} properties, {failures} failed")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="handlecoset",
        description="Classify cords and 1-handles attached to surface-knots "
                    "by double-coset invariants of the knot group.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--records", metavar="PATH",
                       help="write a machine-readable JSON record to PATH")
        return p

    p = add("validate", _cmd_validate, help="run the input side-condition checks")
    p.add_argument("file")

    p = add("enumerate", _cmd_enumerate, help="enumerate cosets of P or P+")
    p.add_argument("file")
    p.add_argument("--subgroup", choices=["P", "P+"], default="P")
    p.add_argument("--max-cosets", type=int, default=None, metavar="N")

    def case_options(p, cords: int):
        p.add_argument("--case", type=int, choices=[1, 2, 3], required=True)
        p.add_argument("--core-oriented", action="store_true")
        if cords:
            p.add_argument("--cord", action="append", default=[],
                           metavar="WORD", help="cord word (repeatable)")

    p = add("invariant", _cmd_invariant, help="invariant of one cord word")
    p.add_argument("file")
    case_options(p, 1)

    p = add("equiv", _cmd_equiv, help="decide equivalence of two cord words")
    p.add_argument("file")
    case_options(p, 2)

    p = add("classes", _cmd_classes, help="list all equivalence classes")
    p.add_argument("file")
    case_options(p, 0)

    p = add("image-check", _cmd_image_check,
            help="check whether a candidate value is realized by a 1-handle")
    p.add_argument("file")
    case_options(p, 0)
    p.add_argument("--candidate", required=True, metavar="W1;W2[;...]",
                   help="semicolon-separated cord words building the candidate")

    p = add("separate", _cmd_separate,
            help="try to separate two cords in finite quotients")
    p.add_argument("file")
    case_options(p, 2)
    p.add_argument("--max-degree", type=int, default=6, metavar="D")

    add("selftest", _cmd_selftest, help="run the built-in oracle suite")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    try:
        return args.func(args)
    except ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SkgSyntaxError, MissingSection) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HandleCosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
