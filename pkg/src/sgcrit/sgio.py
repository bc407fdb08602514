"""The ``sg`` / ``sgm`` text formats.

::

    sg 1
    n 4
    e 0 1 +
    e 0 3 -

``#`` starts a comment, blank lines separate graphs in a stream, and
multigraphs use the magic ``sgm 1``. Parsing tolerates arbitrary whitespace;
:func:`dumps` always writes the canonical byte form.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Union

from .errors import FormatError, SignedGraphError
from .sgraph import SignedGraph, SignedMultiGraph, sign_char

AnyGraph = Union[SignedGraph, SignedMultiGraph]

MAGIC = {"sg": SignedGraph, "sgm": SignedMultiGraph}


def dumps(G: AnyGraph) -> str:
    magic = "sgm" if isinstance(G, SignedMultiGraph) else "sg"
    lines = [f"{magic} 1", f"n {G.n}"]
    lines += [f"e {u} {v} {sign_char(s)}" for u, v, s in G.edges]
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, list[str]]]) -> AnyGraph:
    lineno, head = lines[0]
    if len(head) != 2 or head[0] not in MAGIC:
        raise FormatError(f"line {lineno}: expected 'sg 1' or 'sgm 1'")
    if head[1] != "1":
        raise FormatError(f"line {lineno}: unsupported version {head[1]}")
    cls = MAGIC[head[0]]
    if len(lines) < 2 or lines[1][1][0] != "n" or len(lines[1][1]) != 2:
        raise FormatError(f"line {lineno + 1}: expected 'n <count>'")
    try:
        n = int(lines[1][1][1])
    except ValueError:
        raise FormatError(f"line {lines[1][0]}: bad vertex count") from None
    edges = []
    for ln, toks in lines[2:]:
        if toks[0] != "e" or len(toks) != 4 or toks[3] not in ("+", "-"):
            raise FormatError(f"line {ln}: expected 'e <u> <v> <+|->'")
        try:
            edges.append((int(toks[1]), int(toks[2]), toks[3]))
        except ValueError:
            raise FormatError(f"line {ln}: bad vertex id") from None
    try:
        return cls(n, tuple(edges))
    except SignedGraphError as exc:
        if isinstance(exc, FormatError):
            raise
        raise type(exc)(f"graph at line {lineno}: {exc}") from None


def iter_loads(text: str) -> Iterator[AnyGraph]:
    block: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            if not raw.strip() and block:
                yield _parse_block(block)
                block = []
            continue
        block.append((lineno, toks))
    if block:
        yield _parse_block(block)


def loads_all(text: str) -> list[AnyGraph]:
    return list(iter_loads(text))


def loads(text: str) -> AnyGraph:
    graphs = loads_all(text)
    if len(graphs) != 1:
        raise FormatError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def load(path: Union[str, Path]) -> AnyGraph:
    return loads(Path(path).read_text())


def dump(G: AnyGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(G), newline="\n")
