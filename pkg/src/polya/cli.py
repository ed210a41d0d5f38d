"""Command-line front end.

Examples::

    polya count --group cyclic:4 --colors r,w,b
    polya coeff --group cyclic:4 --colors r,w,b --composition r=2,w=1,b=1
    polya cycle-index --group "gens:(1 2 3 4);(1 4)(2 3)@4" --format json
    polya orbits --group dihedral:4 --num-colors 2

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 for usage and input errors, 2 when a size limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .errors import LimitExceededError, PolyaError
from .group import DEFAULT_MAX_ORDER, PermutationGroup, parse_group_spec
from .inventory import ColorSet, count_by_composition, count_distinct, cycle_index, pattern_inventory
from .oracle import DEFAULT_LIMIT, enumerate_orbits, format_coloring
from .perm import format_permutation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2

COMMANDS = ("cycle-index", "inventory", "count", "coeff", "orbits", "group")


class UsageError(PolyaError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--group", required=True, help="cyclic:N, dihedral:N, symmetric:N, trivial:N or gens:<perm>[;<perm>...]@N")
    colors = common.add_mutually_exclusive_group()
    colors.add_argument("--colors", help="comma-separated color names, e.g. r,w,b")
    colors.add_argument("--num-colors", type=_positive_int, help="number of colors")
    common.add_argument("--composition", help="color counts, e.g. r=2,w=1,b=1")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--limit", type=_positive_int, default=DEFAULT_LIMIT, help="max colorings the orbit enumerator may visit")
    common.add_argument("--max-order", type=_positive_int, default=DEFAULT_MAX_ORDER, help="max group order accepted from closure")

    parser = _Parser(prog="polya", description="Pólya pattern inventories and orbit counts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "cycle-index": "print the cycle index of the group",
        "inventory": "print the pattern inventory in the named colors",
        "count": "number of distinct colorings",
        "coeff": "number of distinct colorings with a given color composition",
        "orbits": "list orbits of colorings by brute force",
        "group": "list the group elements in cycle notation",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def parse_composition(text: str, colors: ColorSet) -> dict[str, int]:
    comp = {c: 0 for c in colors}
    seen = set()
    for item in text.split(","):
        name, eq, count = item.partition("=")
        name = name.strip()
        if not eq or not count.strip().isdigit():
            raise UsageError(f"bad composition entry {item!r}; expected color=count")
        if name not in comp:
            raise UsageError(f"unknown color {name!r} in composition; colors are {','.join(colors)}")
        if name in seen:
            raise UsageError(f"color {name!r} repeated in composition")
        seen.add(name)
        comp[name] = int(count)
    return comp


def _color_set(args, required: bool) -> ColorSet | None:
    if args.colors is not None:
        return ColorSet.of(args.colors)
    if args.num_colors is not None:
        return ColorSet.generic(args.num_colors)
    if required:
        raise UsageError(f"{args.command} needs --colors or --num-colors")
    return None


def execute(args) -> tuple[PermutationGroup, dict, str]:
    """Run a parsed request; returns the group, the JSON result and the text rendering."""
    group = parse_group_spec(args.group, max_order=args.max_order)
    cmd = args.command

    if cmd == "group":
        elements = [format_permutation(g) for g in group]
        return group, {"elements": elements}, "\n".join(elements)

    if cmd == "cycle-index":
        poly = cycle_index(group)
        return group, {"polynomial": poly.to_json()}, poly.render()

    if cmd == "inventory":
        if args.colors is None:
            raise UsageError("inventory needs named colors (--colors)")
        colors = ColorSet.of(args.colors)
        poly = pattern_inventory(group, colors)
        order = list(colors)
        return group, {"polynomial": poly.to_json(order)}, poly.render(order)

    if cmd == "count":
        if args.colors is not None:
            colors = ColorSet.of(args.colors)
            n = count_distinct(group, len(colors), pattern_inventory(group, colors))
        elif args.num_colors is not None:
            n = count_distinct(group, args.num_colors)
        else:
            raise UsageError("count needs --colors or --num-colors")
        return group, {"count": n}, str(n)

    if cmd == "coeff":
        if args.composition is None:
            raise UsageError("coeff needs --composition")
        colors = _color_set(args, required=True)
        comp = parse_composition(args.composition, colors)
        n = count_by_composition(group, colors, comp)
        return group, {"count": n}, str(n)

    if cmd == "orbits":
        colors = _color_set(args, required=True)
        orbits = enumerate_orbits(group, len(colors), args.limit)
        rows = []
        lines = []
        for orbit in orbits:
            rep = format_coloring(orbit.representative, colors)
            comp = dict(zip(colors, orbit.composition(len(colors))))
            rows.append({"representative": rep, "size": orbit.size, "composition": comp})
            comp_text = ",".join(f"{c}={k}" for c, k in comp.items())
            lines.append(f"{rep}\t{orbit.size}\t{comp_text}")
        return group, {"orbits": rows}, "\n".join(lines)

    raise UsageError(f"unknown command {cmd!r}")


def render_json(command: str, spec: str, group: PermutationGroup, result: dict) -> str:
    doc = {
        "command": command,
        "group": {"spec": spec, "order": group.order, "degree": group.degree},
        "result": result,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False)


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        group, result, text = execute(args)
    except LimitExceededError as exc:
        print(f"polya: limit exceeded: {exc}", file=stderr)
        return EXIT_LIMIT
    except (PolyaError, ValueError) as exc:
        print(f"polya: error: {exc}", file=stderr)
        return EXIT_USAGE

    if args.format == "json":
        print(render_json(args.command, args.group, group, result), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
