"""Command-line front end.

Exit codes: 0 success (a formula mismatch is a finding, not a failure),
2 input errors (unreadable or invalid space files), 3 usage errors
(bad flags, unknown fixtures, zero length).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .complexes import cochain
from .fixtures import FIXTURES, random_space
from .homology import GroupPresentation, all_groups
from .io import (
    REPORT_FORMAT,
    SpaceFormatError,
    dump_space,
    dumps,
    load_space,
    space_to_dict,
)
from .pipeline import POSET_WARNING, PipelineData, build_pipeline
from .spaces import FiniteSpace, InvalidPreorder, TopologyError
from .splice import compare, splice, splice_negative, spliced_cohomology, theorem_claimed_groups

USAGE_ERROR = 3
INPUT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input")
    group.add_argument("--fixture", metavar="NAME", help="bundled example space")
    group.add_argument("--input", metavar="PATH", help="space file (JSON)")
    group.add_argument("--random", metavar="K", type=int, help="random space on K points")
    group.add_argument("--seed", metavar="S", type=int, default=0, help="seed for --random")
    parser.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> _Parser:
    parser = _Parser(prog="finsplice", description="(co)homology of finite topological spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="poset part, complementary part, classes")
    _input_options(p)

    p = sub.add_parser("homology", help="(co)homology table of one pipeline complex")
    _input_options(p)
    p.add_argument("--complex", dest="which", choices=("poset", "ambient", "relative"), default="poset")
    p.add_argument("--theory", choices=("homology", "cohomology"), default="homology")

    p = sub.add_parser("spliced", help="spliced cohomology, optionally verified against the formula table")
    _input_options(p)
    p.add_argument("--length", type=int, default=3, help="block length, nonzero; negative swaps the sources")
    p.add_argument("--max-degree", type=int, default=11)
    p.add_argument("--verify-theorem", action="store_true")

    p = sub.add_parser("fixtures", help="list, show, or export bundled spaces")
    fix_sub = p.add_subparsers(dest="action", required=True)
    fix_sub.add_parser("list")
    show = fix_sub.add_parser("show")
    show.add_argument("name")
    export = fix_sub.add_parser("export")
    export.add_argument("name")
    export.add_argument("path")
    return parser


def _resolve_space(args, parser: _Parser) -> FiniteSpace:
    chosen = [
        name
        for name, value in (("--fixture", args.fixture), ("--input", args.input), ("--random", args.random))
        if value is not None
    ]
    if len(chosen) != 1:
        parser.error("exactly one of --fixture, --input, or --random is required")
    if args.fixture is not None:
        if args.fixture not in FIXTURES:
            parser.error(f"unknown fixture {args.fixture!r} (see 'finsplice fixtures list')")
        return FIXTURES[args.fixture]
    if args.random is not None:
        if args.random < 1:
            parser.error("--random needs at least one point")
        return random_space(args.random, seed=args.seed)
    return load_space(args.input)


def _group_row(degree: int, group: GroupPresentation) -> str:
    return f"{degree:>6}  {group}"


def _space_block(data: PipelineData) -> dict:
    return {
        "points": list(data.space.points),
        "point_count": len(data.space.points),
        "t0": data.t0,
        "poset_warning": POSET_WARNING if data.t0 else None,
    }


def _decomposition_block(data: PipelineData) -> dict:
    dec = data.decomposition
    return {
        "classes": [list(cls) for cls in dec.classes],
        "representatives": list(dec.representatives),
        "complementary": list(dec.complementary),
    }


def _sizes_block(data: PipelineData) -> dict:
    return {
        "poset": [data.poset_chain.dim(k) for k in range(data.poset_chain.top_degree + 1)],
        "ambient": [data.ambient_chain.dim(k) for k in range(data.ambient_chain.top_degree + 1)],
        "relative": [data.relative_chain.dim(k) for k in range(data.relative_chain.top_degree + 1)],
    }


def _warning_lines(data: PipelineData) -> list[str]:
    return [f"warning: {POSET_WARNING}"] if data.t0 else []


def cmd_decompose(args, parser: _Parser) -> int:
    data = build_pipeline(_resolve_space(args, parser))
    report = {
        "format": REPORT_FORMAT,
        "command": "decompose",
        "space": _space_block(data),
        "decomposition": _decomposition_block(data),
        "complex_sizes": _sizes_block(data),
    }
    if args.format == "json":
        sys.stdout.write(dumps(report))
        return 0
    lines = [f"points: {len(data.space.points)} (T0: {'yes' if data.t0 else 'no'})"]
    lines += _warning_lines(data)
    dec = data.decomposition
    lines.append("classes: " + " ".join("{" + ", ".join(cls) + "}" for cls in dec.classes))
    lines.append("representatives: " + ", ".join(dec.representatives))
    lines.append("complementary: " + (", ".join(dec.complementary) or "(none)"))
    print("\n".join(lines))
    return 0


def cmd_homology(args, parser: _Parser) -> int:
    data = build_pipeline(_resolve_space(args, parser))
    chain = {
        "poset": data.poset_chain,
        "ambient": data.ambient_chain,
        "relative": data.relative_chain,
    }[args.which]
    if args.theory == "cohomology":
        chain = cochain(chain)
    groups = all_groups(chain)
    report = {
        "format": REPORT_FORMAT,
        "command": "homology",
        "space": _space_block(data),
        "complex": args.which,
        "theory": args.theory,
        "complex_sizes": _sizes_block(data),
        "groups": [g.as_dict() for g in groups],
    }
    if args.format == "json":
        sys.stdout.write(dumps(report))
        return 0
    lines = _warning_lines(data)
    lines.append(f"complex: {args.which}  theory: {args.theory}")
    lines.append("degree  group")
    if groups:
        lines.extend(_group_row(k, g) for k, g in enumerate(groups))
    else:
        lines.append("(zero complex)")
    print("\n".join(lines))
    return 0


def cmd_spliced(args, parser: _Parser) -> int:
    if args.length == 0:
        parser.error("--length must be nonzero")
    if args.max_degree < 0:
        parser.error("--max-degree must be nonnegative")
    data = build_pipeline(_resolve_space(args, parser))
    if args.length > 0:
        spliced = splice(data.sources, args.length)
    else:
        spliced = splice_negative(data.sources, args.length)
    direct = spliced_cohomology(spliced, args.max_degree)
    report = {
        "format": REPORT_FORMAT,
        "command": "spliced",
        "space": _space_block(data),
        "decomposition": _decomposition_block(data),
        "complex_sizes": _sizes_block(data),
        "length": args.length,
        "max_degree": args.max_degree,
        "groups": [g.as_dict() for g in direct],
    }
    comparison = None
    if args.verify_theorem:
        claimed = theorem_claimed_groups(*data.sources, p_max=args.max_degree // 6)
        comparison = compare(direct, claimed, range(args.max_degree + 1))
        report["theorem"] = comparison.as_dict()
    if args.format == "json":
        sys.stdout.write(dumps(report))
        return 0
    lines = _warning_lines(data)
    lines.append(f"spliced cohomology, length {args.length}, max degree {args.max_degree}")
    lines.append("degree  group")
    lines.extend(_group_row(k, g) for k, g in enumerate(direct))
    if comparison is not None:
        width = max(len(str(row.direct)) for row in comparison.rows)
        width = max(width, len("direct"))
        lines.append("")
        lines.append(f"degree  {'direct':<{width}}  claimed     verdict")
        for row in comparison.rows:
            claimed_text = "(uncovered)" if row.claimed is None else str(row.claimed)
            lines.append(f"{row.degree:>6}  {str(row.direct):<{width}}  {claimed_text:<10}  {row.verdict}")
        lines.append(f"summary: {comparison.summary()}")
    print("\n".join(lines))
    return 0


def cmd_fixtures(args, parser: _Parser) -> int:
    if args.action == "list":
        for name in FIXTURES:
            print(name)
        return 0
    if args.name not in FIXTURES:
        parser.error(f"unknown fixture {args.name!r}")
    space = FIXTURES[args.name]
    if args.action == "show":
        sys.stdout.write(dumps(space_to_dict(space)))
        return 0
    dump_space(space, args.path)
    print(f"wrote {args.path}")
    return 0


_COMMANDS = {
    "decompose": cmd_decompose,
    "homology": cmd_homology,
    "spliced": cmd_spliced,
    "fixtures": cmd_fixtures,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    except (SpaceFormatError, TopologyError, InvalidPreorder, OSError) as exc:
        print(f"finsplice: input error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
