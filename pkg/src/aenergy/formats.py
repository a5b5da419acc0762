"""Graph interchange formats: graph6, edge-list text, and the family mini-language.

graph6 layout: an N(n) size prefix followed by the upper-triangle adjacency
bits x01, x02, x12, x03, ... (column-major), packed big-endian into 6-bit
groups, each group stored as one printable byte (value + 63) and zero-padded
to a multiple of 6 bits. The optional ">>graph6<<" header emitted by common
enumeration tools is tolerated on input and never written.
"""

from __future__ import annotations

from .graphs import FamilySpec, Graph, InvalidFamilyParam, make_graph, validate_family_spec

_HEADER = ">>graph6<<"


class MalformedGraph6(ValueError):
    """Input is not a valid graph6 string."""


class ParseError(ValueError):
    """Malformed edge-list or family-spec text."""


class EdgeCountMismatch(ParseError):
    """Edge-list header count disagrees with the normalized edge count."""


class UnknownFamily(ParseError):
    """Family mini-language name is not recognized."""


def _pairs_column_major(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    """Encode a graph in canonical graph6 form."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    elif n <= 68719476735:
        prefix = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    else:
        raise ValueError(f"graph too large for graph6: n={n}")
    edge_set = set(g.edges)
    group = 0
    filled = 0
    body = []
    for i, j in _pairs_column_major(n):
        group = (group << 1) | ((i, j) in edge_set)
        filled += 1
        if filled == 6:
            body.append(group + 63)
            group = 0
            filled = 0
    if filled:
        body.append((group << (6 - filled)) + 63)
    return bytes(prefix + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (strict except for the optional header)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedGraph6("non-ASCII byte in graph6 input") from exc
    if not data:
        raise MalformedGraph6("empty graph6 string")
    for byte in data:
        if not 63 <= byte <= 126:
            raise MalformedGraph6(f"byte {byte} outside graph6 range 63..126")
    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated size prefix")
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise MalformedGraph6("truncated size prefix")
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        pos = 8
    bit_count = n * (n - 1) // 2
    need = (bit_count + 5) // 6
    if len(data) - pos != need:
        raise MalformedGraph6(
            f"expected {need} adjacency bytes for n={n}, got {len(data) - pos}"
        )
    edges = []
    for idx, (i, j) in enumerate(_pairs_column_major(n)):
        byte = data[pos + idx // 6] - 63
        if (byte >> (5 - idx % 6)) & 1:
            edges.append((i, j))
    return make_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: a header line "n m" then one "u v" line per edge
    (0-based). The declared m must equal the edge count after normalization."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"non-integer token in header {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer token in edge line {ln!r}") from exc
    g = make_graph(n, edges)
    if g.m != m:
        raise EdgeCountMismatch(f"header declares m={m}, normalized edge count is {g.m}")
    return g


# mini-language name -> canonical family tag
_FAMILY_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "bipartite": "complete_bipartite",
    "star": "star",
    "doublestar": "double_star",
    "wheel": "wheel",
    "ladder": "ladder",
    "book": "book",
    "friendship": "friendship",
    "comb": "comb",
}

FAMILY_NAMES = tuple(sorted(_FAMILY_NAMES))


def parse_family_spec(text: str) -> FamilySpec:
    """Parse 'name:int[,int...]' into a validated FamilySpec."""
    s = text.strip()
    name, sep, rest = s.partition(":")
    name = name.strip().lower()
    if not sep or not rest.strip():
        raise ParseError(f"family spec must be 'name:params', got {text!r}")
    if name not in _FAMILY_NAMES:
        raise UnknownFamily(f"unknown family {name!r} (known: {', '.join(FAMILY_NAMES)})")
    params = []
    for token in rest.split(","):
        token = token.strip()
        try:
            params.append(int(token))
        except ValueError as exc:
            raise ParseError(f"non-integer family parameter {token!r}") from exc
    spec = FamilySpec(_FAMILY_NAMES[name], tuple(params))
    validate_family_spec(spec)
    return spec


__all__ = [
    "EdgeCountMismatch",
    "FAMILY_NAMES",
    "InvalidFamilyParam",
    "MalformedGraph6",
    "ParseError",
    "UnknownFamily",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "write_graph6",
]
