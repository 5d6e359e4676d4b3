"""
Utilities for reading and writing the edge-list text format.

One edge per line, ``<u> <v> <w>``, whitespace separated. ``<w>`` is an
integer, a ``p/q`` rational or a finite decimal. Lines starting with ``#``
are comments, except that a ``# vertices: a b c`` line fixes the vertex
order (and allows isolated vertices such as the one-vertex tree).
"""
import re
from fractions import Fraction

from app.exceptions import ParseError
from app.utils.rationals import format_rational, parse_rational

VERTICES_HEADER = re.compile(r"^#\s*vertices\s*:(.*)$", re.IGNORECASE)


def parse_edge_list(text: str) -> tuple[tuple[str, ...] | None, list[tuple[str, str, Fraction]]]:
    """
    Split an edge-list document into its declared vertices and its edges.

    Args:
        text: the document

    Returns:
        (declared vertex labels or None, list of (u, v, weight))
    """
    declared: tuple[str, ...] | None = None
    edges: list[tuple[str, str, Fraction]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = VERTICES_HEADER.match(line)
            if header:
                if declared is not None:
                    raise ParseError(f"line {line_no}: second vertices header")
                declared = tuple(header.group(1).split())
            continue

        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {line_no}: expected '<u> <v> <w>', got {raw!r}")
        u, v, w = fields
        try:
            weight = parse_rational(w)
        except ParseError as exc:
            raise ParseError(f"line {line_no}: {exc}") from exc
        edges.append((u, v, weight))

    if declared is None and not edges:
        raise ParseError("document has no edges and no vertices header")
    return declared, edges


def format_edge_list(edges, vertices=None) -> str:
    """
    Render (u, v, w) triples in the edge-list format.

    Args:
        edges: iterable of (u, v, w)
        vertices: when given, emitted as a vertices header

    Returns:
        The document, newline terminated
    """
    lines = []
    if vertices is not None:
        lines.append("# vertices: " + " ".join(vertices))
    for u, v, w in edges:
        lines.append(f"{u} {v} {format_rational(w)}")
    return "\n".join(lines) + "\n"
