"""DIMACS ``.col`` instance parsing and rendering.

Grammar accepted: ``c`` comment lines anywhere, exactly one ``p edge N M``
header, and ``e u v`` lines with 1-indexed endpoints separated by one or more
spaces. Unknown line types are ignored with a warning; an ``e``-line count
that disagrees with the header is a warning, not an error, because duplicate
edges legitimately collapse.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Mapping, Optional

from .graph import Graph, build_graph

log = logging.getLogger(__name__)

# Reference color counts for the DSJC benchmark instances used in the
# comparison tables; overridable via read_reference_table().
BEST_KNOWN_COLORS: dict[str, int] = {
    "DSJC125.1": 5,
    "DSJC125.5": 17,
    "DSJC125.9": 44,
    "DSJC250.1": 8,
    "DSJC250.5": 28,
    "DSJC250.9": 72,
}


class DimacsError(ValueError):
    """Malformed DIMACS input. Carries the offending line number when known."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass
class ParsedDimacs:
    """Raw parse result: 0-indexed edge pairs, duplicates not yet collapsed."""

    vertex_count: int
    edges: list[tuple[int, int]]
    declared_edge_count: int
    warnings: list[str] = field(default_factory=list)


@dataclass
class InstanceRecord:
    name: str
    graph: Graph
    best_known_colors: Optional[int] = None


def parse_dimacs(text: str | IO[str]) -> ParsedDimacs:
    """Parse a DIMACS .col stream into (vertex count, edge pairs, warnings)."""
    lines = text.splitlines() if isinstance(text, str) else text
    vertex_count = -1
    declared = 0
    edges: list[tuple[int, int]] = []
    warnings: list[str] = []
    for line_no, raw in enumerate(lines, start=1):
        if raw.startswith("c"):
            continue
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "p":
            if vertex_count >= 0:
                raise DimacsError("duplicate p line", line_no)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise DimacsError(f"malformed p line: {raw.rstrip()!r}", line_no)
            try:
                vertex_count = int(tokens[2])
                declared = int(tokens[3])
            except ValueError:
                raise DimacsError(f"non-integer p line fields: {raw.rstrip()!r}", line_no)
            if vertex_count < 0 or declared < 0:
                raise DimacsError("negative count in p line", line_no)
        elif kind == "e":
            if vertex_count < 0:
                raise DimacsError("e line before p line", line_no)
            if len(tokens) != 3:
                raise DimacsError(f"malformed e line: {raw.rstrip()!r}", line_no)
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise DimacsError(f"non-integer endpoint: {raw.rstrip()!r}", line_no)
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise DimacsError(
                    f"endpoint out of range [1, {vertex_count}]: e {u} {v}", line_no
                )
            edges.append((u - 1, v - 1))
        else:
            warnings.append(f"line {line_no}: ignored unknown line type {kind!r}")
    if vertex_count < 0:
        raise DimacsError("missing p line")
    if len(edges) != declared:
        warnings.append(
            f"header declares {declared} edges but file has {len(edges)} e lines"
        )
    return ParsedDimacs(vertex_count, edges, declared, warnings)


def render_dimacs(vertex_count: int, edges: Iterable[tuple[int, int]],
                  comment: Optional[str] = None) -> str:
    """Render a 0-indexed edge list as DIMACS .col text (1-indexed output)."""
    canonical = sorted({(u, v) if u < v else (v, u) for u, v in edges})
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {vertex_count} {len(canonical)}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in canonical)
    return "\n".join(out) + "\n"


def read_reference_table(path: str | Path) -> dict[str, int]:
    """Read a user-supplied ``name colors`` table (one pair per line, # comments)."""
    table: dict[str, int] = {}
    for line_no, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{line_no}: expected 'name colors', got {raw!r}")
        table[parts[0]] = int(parts[1])
    return table


def load_instance(path: str | Path,
                  reference_table: Optional[Mapping[str, int]] = None) -> InstanceRecord:
    """Load a .col file; best-known colors looked up by file stem.

    With no reference table the built-in DSJC table is consulted. Parse
    warnings (edge-count mismatch, unknown line types) are logged, not raised.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise OSError(f"cannot read instance file {path}: {exc}") from exc
    try:
        parsed = parse_dimacs(text)
    except DimacsError as exc:
        raise DimacsError(f"{path}: {exc}") from exc
    for warning in parsed.warnings:
        log.warning("%s: %s", path, warning)
    graph = build_graph(parsed.vertex_count, parsed.edges)
    table = BEST_KNOWN_COLORS if reference_table is None else reference_table
    return InstanceRecord(
        name=path.stem,
        graph=graph,
        best_known_colors=table.get(path.stem),
    )
