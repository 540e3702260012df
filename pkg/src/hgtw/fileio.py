"""Readers and writers for the shared text formats.

All formats are line-oriented with `c` comment lines and 1-indexed ids:

  graph          `p tw <n> <m>` then `<u> <v>` per edge
  hypergraph     `p htw <n> <m>` then `e <v1> ... <vk>` per edge
  decomposition  `s td <#bags> <maxbagsize> <n>`, `b <id> <v>...` bags,
                 bare `<a> <b>` tree edges; supertree files add
                 `l <id> <e>...` lines for the hyperedge bags
"""

from __future__ import annotations

from typing import Iterable, Optional, TextIO

from .core import Hypergraph, build_hypergraph
from .decomp import SupertreeDecomposition, TreeDecomposition
from .derive import Graph, make_graph
from .errors import ParseError


def _data_lines(stream: TextIO):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError("not an integer: %r" % tok, lineno)


def read_graph(stream: TextIO) -> Graph:
    n = m = None
    edges = []
    for lineno, toks in _data_lines(stream):
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "tw":
                raise ParseError("expected 'p tw <n> <m>'", lineno)
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
        else:
            if n is None:
                raise ParseError("edge before the problem line", lineno)
            if len(toks) != 2:
                raise ParseError("expected '<u> <v>'", lineno)
            u, v = _int(toks[0], lineno) - 1, _int(toks[1], lineno) - 1
            for w in (u, v):
                if not 0 <= w < n:
                    raise ParseError("vertex %d out of range" % (w + 1), lineno)
            edges.append((u, v))
    if n is None:
        raise ParseError("missing problem line", 0)
    if m is not None and len(edges) != m:
        raise ParseError("declared %d edges, found %d" % (m, len(edges)), 0)
    return make_graph(n, edges)


def write_graph(g: Graph, stream: TextIO) -> None:
    stream.write("p tw %d %d\n" % (g.n, g.m))
    for u, v in sorted(g.edges):
        stream.write("%d %d\n" % (u + 1, v + 1))


def read_hypergraph(stream: TextIO) -> Hypergraph:
    n = m = None
    edges = []
    for lineno, toks in _data_lines(stream):
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "htw":
                raise ParseError("expected 'p htw <n> <m>'", lineno)
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge before the problem line", lineno)
            vs = [_int(t, lineno) - 1 for t in toks[1:]]
            for v in vs:
                if not 0 <= v < n:
                    raise ParseError("vertex %d out of range" % (v + 1), lineno)
            edges.append(vs)
        else:
            raise ParseError("unexpected line", lineno)
    if n is None:
        raise ParseError("missing problem line", 0)
    if m is not None and len(edges) != m:
        raise ParseError("declared %d edges, found %d" % (m, len(edges)), 0)
    return build_hypergraph(n, edges)


def write_hypergraph(h: Hypergraph, stream: TextIO) -> None:
    stream.write("p htw %d %d\n" % (h.n, h.m))
    for f in h.edges:
        stream.write("e %s\n" % " ".join(str(v + 1) for v in sorted(f)))


def read_decomposition(stream: TextIO,
                       ) -> TreeDecomposition | SupertreeDecomposition:
    header: Optional[tuple[int, int, int]] = None
    bags: dict[int, frozenset[int]] = {}
    lambdas: dict[int, frozenset[int]] = {}
    tree_edges: list[tuple[int, int]] = []
    for lineno, toks in _data_lines(stream):
        if toks[0] == "s":
            if len(toks) != 5 or toks[1] != "td":
                raise ParseError("expected 's td <#bags> <maxbag> <n>'",
                                 lineno)
            header = tuple(_int(t, lineno) for t in toks[2:])
        elif toks[0] == "b":
            if len(toks) < 2:
                raise ParseError("bag line needs an id", lineno)
            tid = _int(toks[1], lineno) - 1
            bags[tid] = frozenset(_int(t, lineno) - 1 for t in toks[2:])
        elif toks[0] == "l":
            if len(toks) < 2:
                raise ParseError("lambda line needs an id", lineno)
            tid = _int(toks[1], lineno) - 1
            lambdas[tid] = frozenset(_int(t, lineno) - 1 for t in toks[2:])
        else:
            if len(toks) != 2:
                raise ParseError("expected '<a> <b>' tree edge", lineno)
            tree_edges.append((_int(toks[0], lineno) - 1,
                               _int(toks[1], lineno) - 1))
    if header is None:
        raise ParseError("missing solution line", 0)
    count, maxbag, _n = header
    if len(bags) != count:
        raise ParseError("declared %d bags, found %d" % (count, len(bags)), 0)
    if bags and max(len(b) for b in bags.values()) > maxbag:
        raise ParseError("a bag exceeds the declared maximum size", 0)
    nodes = sorted(bags)
    if lambdas:
        if set(lambdas) != set(bags):
            raise ParseError("lambda ids do not match bag ids", 0)
        return SupertreeDecomposition(nodes=nodes, tree_edges=tree_edges,
                                      vertex_bags=bags, edge_bags=lambdas)
    return TreeDecomposition(nodes=nodes, tree_edges=tree_edges, bags=bags)


def write_decomposition(d: TreeDecomposition | SupertreeDecomposition,
                        stream: TextIO, n: Optional[int] = None) -> None:
    if isinstance(d, SupertreeDecomposition):
        bags = d.vertex_bags
        lambdas: Optional[dict[int, frozenset[int]]] = d.edge_bags
    else:
        bags = d.bags
        lambdas = None
    if n is None:
        n = max((v for b in bags.values() for v in b), default=-1) + 1
    maxbag = max((len(b) for b in bags.values()), default=0)
    stream.write("s td %d %d %d\n" % (len(bags), maxbag, n))
    for t in sorted(d.nodes):
        stream.write("b %d %s\n"
                     % (t + 1, " ".join(str(v + 1) for v in sorted(bags[t]))))
    if lambdas is not None:
        for t in sorted(d.nodes):
            stream.write("l %d %s\n"
                         % (t + 1,
                            " ".join(str(e + 1) for e in sorted(lambdas[t]))))
    for a, b in sorted(tuple(sorted(e)) for e in d.tree_edges):
        stream.write("%d %d\n" % (a + 1, b + 1))


def sniff_format(first_lines: Iterable[str]) -> str:
    for line in first_lines:
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p" and len(toks) >= 2:
            return {"tw": "graph", "htw": "hypergraph"}.get(toks[1], "unknown")
        if toks[0] == "s":
            return "decomposition"
        return "unknown"
    return "unknown"
