"""Text formats: .hrlq instances, .g edge-list graphs, .match matchings.

Instance grammar (one declaration per line, `#` starts a comment, names are
non-whitespace tokens):

    resident <name>: <hospital> <hospital> ...     # most-preferred first
    hospital <name> [<l>,<u>]: <resident> ...

Graph grammar: a `p <n> <m>` header followed by exactly m `e <i> <j>` lines,
1-based with i < j.  Matching grammar: `match <resident> <hospital>` lines;
unmatched residents are omitted.  Serialization is the canonical form:
parse(serialize(x)) == x and repeated serialization is byte-identical.
"""

from __future__ import annotations

import re

from .core import Instance, InvalidMatchingError, Matching, make_matching, validate_instance
from .reductions import SourceGraph

_QUOTA_RE = re.compile(r"^\[(\d+),(\d+)\]$")


class ParseError(ValueError):
    """A malformed input file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_instance(text: str) -> Instance:
    """Parse an .hrlq document into a validated Instance."""
    residents: list[str] = []
    hospitals: list[str] = []
    resident_prefs: dict[str, tuple[str, ...]] = {}
    hospital_prefs: dict[str, tuple[str, ...]] = {}
    quotas: dict[str, tuple[int, int]] = {}
    decl_line: dict[str, int] = {}

    for lineno, line in _content_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected ':' after the declaration head", lineno)
        fields = head.split()
        prefs = tuple(tail.split())
        if len(set(prefs)) != len(prefs):
            dup = next(p for i, p in enumerate(prefs) if p in prefs[:i])
            raise ParseError(f"duplicate preference entry {dup}", lineno)
        if fields[0] == "resident" and len(fields) == 2:
            name = fields[1]
            if name in decl_line:
                raise ParseError(f"{name} already declared on line {decl_line[name]}", lineno)
            decl_line[name] = lineno
            residents.append(name)
            resident_prefs[name] = prefs
        elif fields[0] == "hospital" and len(fields) == 3:
            name = fields[1]
            match = _QUOTA_RE.match(fields[2])
            if not match:
                raise ParseError(f"malformed quota token {fields[2]} (expected [l,u])", lineno)
            low, up = int(match.group(1)), int(match.group(2))
            if low > up:
                raise ParseError(f"quota inversion at {name}: lower {low} exceeds upper {up}", lineno)
            if name in decl_line:
                raise ParseError(f"{name} already declared on line {decl_line[name]}", lineno)
            decl_line[name] = lineno
            hospitals.append(name)
            hospital_prefs[name] = prefs
            quotas[name] = (low, up)
        else:
            raise ParseError(f"unrecognized declaration: {line!r}", lineno)

    for name in residents:
        for h in resident_prefs[name]:
            if h not in quotas:
                raise ParseError(
                    f"preference list of resident {name} names undeclared hospital {h}",
                    decl_line[name],
                )
    for name in hospitals:
        for r in hospital_prefs[name]:
            if r not in resident_prefs:
                raise ParseError(
                    f"preference list of hospital {name} names undeclared resident {r}",
                    decl_line[name],
                )
    return validate_instance(residents, hospitals, resident_prefs, hospital_prefs, quotas)


def serialize_instance(instance: Instance) -> str:
    """Canonical .hrlq form: residents in index order, then hospitals."""
    lines = []
    for r in instance.residents:
        prefs = " ".join(instance.resident_prefs[r])
        lines.append(f"resident {r}:" + (f" {prefs}" if prefs else ""))
    for h in instance.hospitals:
        low, up = instance.quotas[h]
        prefs = " ".join(instance.hospital_prefs[h])
        lines.append(f"hospital {h} [{low},{up}]:" + (f" {prefs}" if prefs else ""))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SourceGraph:
    """Parse a `p n m` / `e i j` edge-list document.

    The target parameter is not part of the format; the returned graph has
    k = 0 and callers set it (the CLI uses --k).
    """
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, line in _content_lines(text):
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate p header", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'p <n> <m>'", lineno)
            try:
                n, declared_m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("p header fields must be integers", lineno) from None
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before the p header", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'e <i> <j>'", lineno)
            try:
                i, j = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not 1 <= i < j <= n:
                raise ParseError(f"edge ({i},{j}) is not 1 <= i < j <= {n}", lineno)
            if (i, j) in edges:
                raise ParseError(f"duplicate edge ({i},{j})", lineno)
            edges.append((i, j))
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
    if n is None:
        raise ParseError("missing p header")
    if len(edges) != declared_m:
        raise ParseError(f"p header declares {declared_m} edges but {len(edges)} were given")
    return SourceGraph(n=n, edges=tuple(edges))


def serialize_graph(graph: SourceGraph) -> str:
    lines = [f"p {graph.n} {graph.m}"]
    lines.extend(f"e {i} {j}" for i, j in graph.edges)
    return "\n".join(lines) + "\n"


def parse_matching(text: str, instance: Instance) -> Matching:
    """Parse `match <resident> <hospital>` lines, validated against the instance."""
    pairs = []
    for lineno, line in _content_lines(text):
        fields = line.split()
        if fields[0] != "match" or len(fields) != 3:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
        pairs.append((fields[1], fields[2]))
    try:
        return make_matching(instance, pairs)
    except InvalidMatchingError as exc:
        raise ParseError(str(exc)) from exc


def serialize_matching(instance: Instance, matching: Matching) -> str:
    """Canonical .match form: matched residents in index order."""
    lines = [
        f"match {r} {matching.assignment[r]}"
        for r in instance.residents
        if r in matching.assignment
    ]
    return "\n".join(lines) + ("\n" if lines else "")
