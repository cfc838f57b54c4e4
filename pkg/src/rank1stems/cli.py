"""Command-line front end.

    rank1-stems --group o2 --rep "delta - sigma(1)" --degrees 0..4 --format json

Representation expressions::

    expr := term (('+'|'-') term)*        a leading '-' is allowed
    term := [uint '*'] irr
    irr  := z(n) | sigma(n) | delta | W(odd >= 3) | V(even >= 2) | h(odd)

W and V take dimensions, so W(2i+1) is the irreducible of highest weight i.
The empty sum is written ``0``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .groups import GroupId, Irreducible, RepError, Subgroup, VirtualRep, in_catalog, render_rep
from .lines import GENERIC, INF, SECTIONS, InvariantError, Line, LineSet
from .stems import BlockAnswer, BlockId, stems

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class RepSyntaxError(RepError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+)|(?P<op>[-+*()]))")
_NO_INDEX = {"delta", "trivial"}
_INDEXED = {"z", "sigma", "W", "V", "h"}


@dataclass(frozen=True)
class RepExpression:
    source: str
    terms: tuple[tuple[int, Irreducible | None], ...]  # None marks the trivial rep


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise RepSyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup)
        yield m.lastgroup, m.group(m.lastgroup), start
        pos = m.end()
    yield "end", "", len(text)


def parse_expression(text: str) -> RepExpression:
    toks = list(_tokens(text))
    i = 0

    def peek():
        return toks[i]

    def take(kind, value=None):
        nonlocal i
        k, v, p = toks[i]
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise RepSyntaxError(f"expected {want!r}, found {v or 'end of input'!r}", p)
        i += 1
        return v, p

    terms = []
    sign = 1
    if peek()[:2] == ("op", "-"):
        sign = -1
        take("op")
    while True:
        if peek()[0] == "num" and toks[i + 1][1] != "*":
            # a bare integer is that many copies of the trivial representation
            num, _ = take("num")
            if int(num):
                terms.append((sign * int(num), None))
        else:
            coeff = 1
            if peek()[0] == "num":
                coeff = int(take("num")[0])
                take("op", "*")
            name, p = take("name")
            index = None
            if name not in _NO_INDEX:
                if name not in _INDEXED:
                    raise RepSyntaxError(f"unknown irreducible {name!r}", p)
                take("op", "(")
                index = int(take("num")[0])
                take("op", ")")
            if name == "trivial" or _is_trivial(name, index):
                terms.append((sign * coeff, None))
            else:
                try:
                    irr = Irreducible(name, index)
                except RepError as exc:
                    raise RepSyntaxError(str(exc), p) from None
                terms.append((sign * coeff, irr))
        k, v, p = peek()
        if k == "end":
            break
        if k == "op" and v in "+-":
            take("op")
            sign = 1 if v == "+" else -1
            continue
        raise RepSyntaxError(f"unexpected {v!r}", p)
    return RepExpression(text, tuple(terms))


def _is_trivial(name: str, n: int | None) -> bool:
    return (name == "z" and n == 0) or (name == "W" and n == 1) or (name == "sigma" and n == 0)


def parse_rep(text: str, group: GroupId | str) -> VirtualRep:
    group = GroupId(group)
    expr = parse_expression(text)
    pairs = []
    for coeff, irr in expr.terms:
        if irr is None:
            raise RepError("the trivial representation is excluded (U^G = 0); use --shift for integer suspensions")
        if not in_catalog(group, irr):
            raise RepError(f"{irr} is not an irreducible of {group.name}")
        pairs.append((irr, coeff))
    rep = VirtualRep(group, tuple(pairs))
    if rep.trivial:
        raise RepError("representation has nonzero G-fixed points")
    return rep


# -- JSON --------------------------------------------------------------------------

JSON_SCHEMA = {
    "type": "object",
    "required": ["group", "rep", "range", "blocks", "table"],
    "properties": {
        "group": {"enum": [g.value for g in GroupId]},
        "rep": {"type": "string"},
        "range": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["block", "lines", "corrections"],
                "properties": {
                    "block": {"type": "string"},
                    "lines": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["start", "step", "mult", "label"],
                            "properties": {
                                "start": {"type": "integer"},
                                "step": {"enum": [0, 2, 4]},
                                "mult": {"anyOf": [{"type": "integer", "minimum": 1}, {"const": "inf"}]},
                                "label": {"type": ["string", "null"]},
                            },
                        },
                    },
                    "corrections": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["degree", "amount"],
                            "properties": {"degree": {"type": "integer"}, "amount": {"type": "integer", "minimum": 1}},
                        },
                    },
                },
            },
        },
        "table": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "dim"],
                "properties": {
                    "degree": {"type": "integer"},
                    "dim": {"anyOf": [{"type": "integer", "minimum": 0}, {"const": "inf"}]},
                },
            },
        },
    },
}


def _dim_json(x):
    return "inf" if x is INF else x


def _dim_from_json(x):
    return INF if x == "inf" else int(x)


def _label_json(label):
    return None if label is None else str(label)


def _label_from_json(text):
    if text is None or text in (GENERIC, SECTIONS):
        return text
    return Subgroup.parse(text)


def answer_to_json(ans: BlockAnswer, degrees: tuple[int, int]) -> dict:
    a, b = degrees
    return {
        "group": ans.group.value,
        "rep": render_rep(ans.rep),
        "range": list(ans.range),
        "blocks": [
            {
                "block": str(bid),
                "lines": [
                    {"start": ln.start, "step": ln.step, "mult": _dim_json(ln.mult), "label": _label_json(ln.label)}
                    for ln in ls.lines
                ],
                "corrections": [{"degree": k, "amount": amt} for k, amt in ls.corrections],
            }
            for bid, ls in ans.blocks
        ],
        "table": [{"degree": k, "dim": _dim_json(v)} for k, v in ans.window(a, b).items()],
    }


def answer_from_json(doc: dict) -> BlockAnswer:
    group = GroupId(doc["group"])
    blocks = []
    for blk in doc["blocks"]:
        lines = tuple(
            Line(ln["start"], ln["step"], _dim_from_json(ln["mult"]), _label_from_json(ln["label"]))
            for ln in blk["lines"]
        )
        corr = tuple((c["degree"], c["amount"]) for c in blk["corrections"])
        blocks.append((BlockId.parse(blk["block"]), LineSet(lines, corr)))
    return BlockAnswer(group, parse_rep(doc["rep"], group), tuple(blocks), tuple(doc["range"]))


# -- rendering --------------------------------------------------------------------


def _format_line(ln: Line) -> str:
    mult = "inf" if ln.mult is INF else str(ln.mult)
    label = "" if ln.label is None else f"  [{ln.label}]"
    if ln.step == 0:
        return f"spot  degree {ln.start:>4}  x{mult}{label}"
    return f"line  from {ln.start:>4} step {ln.step}  x{mult}{label}"


def render_table(ans: BlockAnswer, degrees: tuple[int, int], show_blocks: bool) -> str:
    lo, hi = ans.range
    out = [f"group {ans.group.value}   U = {render_rep(ans.rep)}   range [{lo}, {hi}]", ""]
    out.append(f"{'degree':>6}  dim")
    for k, v in ans.window(*degrees).items():
        out.append(f"{k:>6}  {'inf' if v is INF else v}")
    if show_blocks:
        for bid, ls in ans.blocks:
            out.append("")
            out.append(f"{bid}:")
            if not ls.lines:
                out.append("  (empty)")
            out.extend(f"  {_format_line(ln)}" for ln in ls.lines)
            out.extend(f"  minus {amt} in degree {k} (diagonal)" for k, amt in ls.corrections)
    for note in ans.notes:
        out.append(f"note: {note}")
    return "\n".join(out)


# -- oracle check -----------------------------------------------------------------


def check_oracle(ans: BlockAnswer, degrees: tuple[int, int], s_max: int) -> list[str]:
    """Compare the cyclic block with the truncated-resolution oracle; return mismatches."""
    from .characters import fixed_dim
    from .groups import restrict
    from .oracle import oracle_char_matrix, oracle_o2_cyclic, oracle_torus

    rep, g = ans.rep, ans.group
    cyclic = ans.block("cyclic")
    problems = []
    if g.is_torus:
        expected = oracle_torus(rep, degrees, s_max)
        shift = 0
    else:
        sub, shift = rep, 0
        if g in (GroupId.SO3, GroupId.SU2):
            sub = restrict(rep, GroupId.O2 if g == GroupId.SO3 else GroupId.PIN2)
            sub, shift = sub.without_trivial(), sub.trivial
        expected = oracle_o2_cyclic(sub, (degrees[0] - shift, degrees[1] - shift), s_max)
    for k in range(degrees[0], degrees[1] + 1):
        got, want = cyclic.query(k), expected[k - shift]
        if got != want:
            problems.append(f"cyclic block degree {k}: calculator {got}, oracle {want}")
    if g in (GroupId.SO3, GroupId.SU2):
        for irr, _ in rep.terms:
            if irr.kind != "W":
                continue
            for tag in ("A4", "S4", "A5", "KleinD4", "D8"):
                if irr.half <= 20 and fixed_dim(irr.half, tag) != oracle_char_matrix(tag, irr.half):
                    problems.append(f"fixed points of {irr} on {tag} disagree with the matrix oracle")
    return problems


# -- entry point ------------------------------------------------------------------


def parse_degrees(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"degrees must look like a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise argparse.ArgumentTypeError(f"empty degree range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rank1-stems", description="Rational RO(G)-graded stable stems of rank-1 groups.")
    p.add_argument("--group", required=True, choices=[g.value for g in GroupId])
    p.add_argument("--rep", required=True, help='virtual representation, e.g. "2*sigma(1) - sigma(3) + delta"')
    p.add_argument("--degrees", type=parse_degrees, default=(-5, 10), help="degree window a..b (default -5..10)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--blocks", action="store_true", help="list the lines of every block")
    p.add_argument("--shift", type=int, default=0, help="suspend by k trivial dimensions")
    p.add_argument("--check-oracle", action="store_true", help="verify against the resolution oracle")
    p.add_argument("--smax", type=int, default=64, help="subgroup cutoff for the oracle (default 64)")
    return p


_VALUE_FLAGS = ("--rep", "--degrees", "--shift", "--smax")


def _glue_values(argv: list[str]) -> list[str]:
    # values such as "-z(1)" or "-3..3" would otherwise be read as options
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        rep = parse_rep(args.rep, args.group)
    except RepError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE

    try:
        base = stems(rep)
        if args.check_oracle:
            lo, hi = args.degrees
            problems = check_oracle(base, (lo - args.shift, hi - args.shift), args.smax)
            if problems:
                for msg in problems:
                    print(f"oracle mismatch: {msg}", file=stderr)
                return EXIT_FAILURE
        ans = base.shift(args.shift) if args.shift else base
        if args.format == "json":
            print(json.dumps(answer_to_json(ans, args.degrees)), file=stdout)
        else:
            print(render_table(ans, args.degrees, args.blocks), file=stdout)
    except (InvariantError, AssertionError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
