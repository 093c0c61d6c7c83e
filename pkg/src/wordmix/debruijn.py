"""N-dimensional de Bruijn graphs and the walk/word correspondence.

Vertices are all length-N words over the alphabet, stored as base-|A|
integer codes (leftmost symbol most significant). A word w read from a
start vertex v induces the walk that tracks the trailing N-symbol window
of v.w, and that correspondence is a bijection between words and walks.
"""

from __future__ import annotations

from .errors import BadStartLengthError, DimensionCapError, NotAWalkError
from .words import (
    Alphabet,
    OccVector,
    ParamList,
    Word,
    add_vectors,
    occ_vector,
    suffix_indicator,
)

Vertex = int
Walk = tuple[Vertex, ...]

DEFAULT_MAX_VERTICES = 4096


class DeBruijnGraph:
    """Immutable after construction; every query is read-only."""

    def __init__(self, alphabet: Alphabet, dim: int,
                 max_vertices: int = DEFAULT_MAX_VERTICES):
        if dim < 1:
            raise ValueError("graph dimension must be at least 1")
        size = len(alphabet)
        count = size ** dim
        if count > max_vertices:
            raise DimensionCapError(
                f"{size}^{dim} = {count} vertices exceeds the cap of {max_vertices}")
        self.alphabet = alphabet
        self.dim = dim
        self._size = size
        self._window = size ** (dim - 1)
        self._count = count
        self._words = tuple(self._decode(code) for code in range(count))

    def _decode(self, code: int) -> Word:
        out = []
        for _ in range(self.dim):
            code, rem = divmod(code, self._size)
            out.append(self.alphabet.symbols[rem])
        return tuple(reversed(out))

    @property
    def vertex_count(self) -> int:
        return self._count

    @property
    def edge_count(self) -> int:
        return self._count * self._size

    def vertices(self) -> range:
        return range(self._count)

    def encode(self, word: Word) -> Vertex:
        if len(word) != self.dim:
            raise BadStartLengthError(
                f"vertex word must have length {self.dim}, got {len(word)}")
        code = 0
        for sym in word:
            code = code * self._size + self.alphabet.index(sym)
        return code

    def vertex_word(self, v: Vertex) -> Word:
        return self._words[v]

    def shift(self, v: Vertex, symbol: str) -> Vertex:
        """Successor of v along the edge labelled by symbol."""
        return (v % self._window) * self._size + self.alphabet.index(symbol)

    def successors(self, v: Vertex) -> tuple[Vertex, ...]:
        base = (v % self._window) * self._size
        return tuple(base + b for b in range(self._size))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        if not (0 <= u < self._count and 0 <= v < self._count):
            return False
        return v // self._size == u % self._window


def build(alphabet: Alphabet, dim: int,
          max_vertices: int = DEFAULT_MAX_VERTICES) -> DeBruijnGraph:
    return DeBruijnGraph(alphabet, dim, max_vertices)


def _check_edges(g: DeBruijnGraph, walk: Walk) -> None:
    if not walk:
        raise NotAWalkError("empty vertex sequence")
    for u, v in zip(walk, walk[1:]):
        if not g.has_edge(u, v):
            raise NotAWalkError(f"({u}, {v}) is not an edge")


def walk_of_word(g: DeBruijnGraph, start: Word, word: Word) -> Walk:
    """The walk from start whose step i lands on the trailing window of start.word[:i]."""
    cur = g.encode(start)
    out = [cur]
    for sym in word:
        cur = g.shift(cur, sym)
        out.append(cur)
    return tuple(out)


def word_of_walk(g: DeBruijnGraph, walk: Walk) -> Word:
    """Inverse of walk_of_word, prefixed with the start vertex's word."""
    _check_edges(g, walk)
    tail = tuple(g.alphabet.symbols[v % len(g.alphabet)] for v in walk[1:])
    return g.vertex_word(walk[0]) + tail


def walk_occ(g: DeBruijnGraph, walk: Walk, params: ParamList) -> OccVector:
    """Sum of suffix indicators over every vertex after the first.

    This is the occurrence count the walk contributes on top of its start
    vertex: occ(v.w) = occ(v) + walk_occ(walk_of_word(v, w)) whenever the
    parameter words fit inside the window (max_len <= dim).
    """
    if params.max_len > g.dim:
        raise ValueError(
            f"parameter words of length {params.max_len} do not fit in a "
            f"dimension-{g.dim} window")
    _check_edges(g, walk)
    counts = [0] * params.k
    for v in walk[1:]:
        for i, c in enumerate(suffix_indicator(g.vertex_word(v), params)):
            counts[i] += c
    return tuple(counts)


def occ_additivity_check(g: DeBruijnGraph, start: Word, word: Word,
                         params: ParamList) -> bool:
    """Test helper: does occ(start.word) equal occ(start) + walk_occ(walk)?"""
    whole = occ_vector(start + word, params)
    split = add_vectors(occ_vector(start, params),
                        walk_occ(g, walk_of_word(g, start, word), params))
    return whole == split


def to_dot(g: DeBruijnGraph, path: Walk = (), cycles: tuple[Walk, ...] = ()) -> str:
    """GraphViz rendering; a decomposition can be overlaid (path solid red,
    cycles dashed blue)."""
    styled: dict[tuple[Vertex, Vertex], str] = {}
    for cyc in cycles:
        for u, v in zip(cyc, cyc[1:]):
            styled[(u, v)] = ' [color="blue", style="dashed"]'
    for u, v in zip(path, path[1:]):
        styled[(u, v)] = ' [color="red", penwidth="2"]'
    lines = ["digraph debruijn {", "  rankdir=LR;"]
    for v in g.vertices():
        lines.append(f'  "{"".join(g.vertex_word(v))}";')
    for u in g.vertices():
        for v in g.successors(u):
            attrs = styled.get((u, v), "")
            lines.append(
                f'  "{"".join(g.vertex_word(u))}" -> "{"".join(g.vertex_word(v))}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"
