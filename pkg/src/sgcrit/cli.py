"""Command line entry point: ``sgcrit <command> ...``.

Exit status 0 means the property holds (a homomorphism exists, the graph is
critical, ...), 1 means it fails, 2 means bad input, bad usage, or a search
that ran out of budget before reaching a verdict.

Anywhere a graph file is expected, ``-`` reads standard input and
``gallery:<id>`` loads a named graph (``gallery:what``, ``gallery:cminus:4``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import coloring, constructions, sgio
from .canon import switching_isomorphic
from .census import DEFAULT_CAP, LONG_RUN_CAP, is_w_hat, run_census
from .criticality import degree3_with_two_degree2, is_critical_C4, structural_check
from .errors import BudgetExceeded, SignedGraphError
from .homsolver import DEFAULT_BUDGET, hom_C4, hom_to_target, sp_hom_C4
from .sgraph import girth_vector, max_average_degree, potential


class _Out:
    def __init__(self, stream, as_json: bool):
        self.stream = stream
        self.as_json = as_json
        self.color = (not as_json and "NO_COLOR" not in os.environ
                      and hasattr(stream, "isatty") and stream.isatty())

    def verdict(self, word: str, good: bool) -> str:
        if not self.color:
            return word
        return f"\033[{32 if good else 31}m{word}\033[0m"

    def emit(self, text: str = "", data: Optional[dict] = None) -> None:
        if self.as_json:
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def read_graph(ref: str):
    if ref.startswith("gallery:"):
        return constructions.gallery(ref[len("gallery:"):])
    if ref == "-":
        return sgio.loads(sys.stdin.read())
    return sgio.load(ref)


def _target(ref: Optional[str]):
    """None for the default negative 4-cycle, else a target graph."""
    if ref is None or ref.lower() == "c-4":
        return None
    low = ref.lower()
    if low.startswith("c-") and low[2:].isdigit():
        l = int(low[2:])
        if l < 4 or l % 2:
            raise SignedGraphError("cycle targets are c-<2k> with 2k >= 4")
        return constructions.cycle(l, -1)
    return read_graph(ref)


def _hom_text(v) -> str:
    if v.mapped:
        return f"switch={sorted(v.hom.switch)} map={list(v.hom.map)}"
    return json.dumps(v.reason.to_json())


def cmd_hom(a, out: _Out) -> int:
    G = read_graph(a.file)
    H = _target(a.target)
    v = hom_C4(G) if H is None else hom_to_target(G, H, a.budget)
    out.emit(f"{out.verdict('mapped' if v.mapped else 'nohom', v.mapped)} {_hom_text(v)}", v.to_json())
    return 0 if v.mapped else 1


def cmd_sp_hom(a, out: _Out) -> int:
    v = sp_hom_C4(read_graph(a.file))
    out.emit(f"{out.verdict('mapped' if v.mapped else 'nohom', v.mapped)} {_hom_text(v)}", v.to_json())
    return 0 if v.mapped else 1


def cmd_girth(a, out: _Out) -> int:
    gv = girth_vector(read_graph(a.file))
    out.emit(str(gv), gv.as_dict())
    return 0


def cmd_critical(a, out: _Out) -> int:
    G = read_graph(a.file)
    v = is_critical_C4(G)
    viol = structural_check(G)
    data = dict(v.to_json())
    data["structural"] = [x.to_json() for x in viol]
    data["degree3_two_degree2"] = degree3_with_two_degree2(G)
    word = out.verdict("critical" if v.is_critical else "not critical", v.is_critical)
    lines = [f"{word}: {json.dumps(v.to_json())}",
             f"n={G.n} m={G.m} potential={potential(G)}"]
    lines += [f"structural: {x.kind} at {list(x.where)}" for x in viol]
    out.emit("\n".join(lines), data)
    return 0 if v.is_critical else 1


def _int(x: str) -> int:
    try:
        return int(x)
    except ValueError:
        raise SignedGraphError(f"expected an integer, got {x!r}") from None


def cmd_construct(a, out: _Out) -> int:
    what, args = a.what, a.args

    def need(k):
        if len(args) != k:
            raise SignedGraphError(f"construct {what} takes {k} argument(s)")

    if what.startswith("tl:"):
        need(1)
        G = constructions.t_subdivide(read_graph(args[0]), _int(what[3:]))
    elif what == "tilde":
        need(1)
        G = constructions.tilde(read_graph(args[0]))
    elif what == "splice":
        need(4)
        G = constructions.splice_F(read_graph(args[0]), _int(args[1]), read_graph(args[2]), _int(args[3]))
    elif what == "hajos":
        need(6)
        G = constructions.hajos_H(read_graph(args[0]), (_int(args[1]), _int(args[2])),
                                  read_graph(args[3]), (_int(args[4]), _int(args[5])))
    elif what.startswith("build:"):
        need(0)
        G = constructions.build_critical(_int(what[6:]))
    else:
        need(0)
        G = constructions.gallery(what)
    text = sgio.dumps(G)
    if a.output:
        with open(a.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if out.as_json:
        out.emit(data={"graph": text, "n": G.n, "m": G.m})
    elif not a.output:
        out.stream.write(text)
    return 0


def cmd_color4(a, out: _Out) -> int:
    c = coloring.four_color_via_C4(read_graph(a.file))
    out.emit("not 4-colorable" if c is None else json.dumps(list(c)),
             {"colorable": c is not None, "coloring": None if c is None else list(c)})
    return 0 if c is not None else 1


def cmd_x2k(a, out: _Out) -> int:
    if a.k < 1:
        raise SignedGraphError("--k must be at least 1")
    c = coloring.x2k_coloring(read_graph(a.file), a.k)
    out.emit(f"no X{2 * a.k}-coloring" if c is None else json.dumps(list(c)),
             {"colorable": c is not None, "coloring": None if c is None else list(c)})
    return 0 if c is not None else 1


def cmd_mad(a, out: _Out) -> int:
    G = read_graph(a.file)
    m = max_average_degree(G)
    out.emit(f"mad={m}", {"mad": str(m), "numerator": m.numerator, "denominator": m.denominator})
    return 0


def cmd_switch_iso(a, out: _Out) -> int:
    f = switching_isomorphic(read_graph(a.file1), read_graph(a.file2))
    out.emit("not switching isomorphic" if f is None else f"switching isomorphic via {list(f)}",
             {"isomorphic": f is not None, "bijection": None if f is None else list(f)})
    return 0 if f is not None else 1


def cmd_census(a, out: _Out) -> int:
    cap = LONG_RUN_CAP if a.long_run else DEFAULT_CAP
    report = run_census(a.n, jobs=a.jobs, cap=cap, prefilter=not a.no_prefilter)
    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.dumps())
    holds = all(is_w_hat(e.graph) for e in report.exceptions)
    lines = [f"n={report.n} underlying={report.underlying_graphs} "
             f"classes={report.classes_examined} critical={len(report.critical_found)}"]
    for c in report.critical_found:
        tag = "  (W-hat)" if is_w_hat(c.graph) else ""
        lines.append(f"  |E|={c.edges} potential={c.potential}{tag}")
    lines.append(out.verdict("density bound holds" if holds else "density bound violated", holds))
    out.emit("\n".join(lines), report.to_json())
    return 0 if holds else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgcrit", description="C4-critical signed graphs toolkit")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hom", help="decide a homomorphism")
    s.add_argument("file")
    s.add_argument("--target", help="c-4 (default), c-<2k>, or a graph file")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(run=cmd_hom)

    for name, fn, helptext in (("sp-hom", cmd_sp_hom, "edge-sign preserving map to C4"),
                               ("girth", cmd_girth, "girth vector"),
                               ("critical", cmd_critical, "certify C4-criticality"),
                               ("color4", cmd_color4, "4-coloring through T2 and C4"),
                               ("mad", cmd_mad, "maximum average degree")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file")
        s.set_defaults(run=fn)

    s = sub.add_parser("construct", help="emit a named or constructed graph")
    s.add_argument("what", help="gallery id, tl:<l>, tilde, splice, hajos, build:<n>")
    s.add_argument("args", nargs="*")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_construct)

    s = sub.add_parser("x2k", help="X_2k-coloring")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("file")
    s.set_defaults(run=cmd_x2k)

    s = sub.add_parser("switch-iso", help="switching isomorphism")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(run=cmd_switch_iso)

    s = sub.add_parser("census", help="enumerate critical graphs on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--long-run", action="store_true", help=f"allow n = {LONG_RUN_CAP}")
    s.add_argument("--no-prefilter", action="store_true")
    s.set_defaults(run=cmd_census)
    for s in sub.choices.values():
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="machine-readable output")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    out = _Out(sys.stdout, a.json)
    try:
        return a.run(a, out)
    except BudgetExceeded as e:
        print(f"sgcrit: no verdict: {e}", file=sys.stderr)
        return 2
    except (SignedGraphError, OSError) as e:
        print(f"sgcrit: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
