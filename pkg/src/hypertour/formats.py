"""Text formats.

``.kht`` (k-tournament)::

    kht 1
    k n
    <one line per k-subset, ids in precedence order, canonical subset order>

``.khd`` is the same layout for a k-hyperdigraph (header ``khd 1``), where
rows may skip subsets but must still appear in canonical order.

``.cert`` (generation certificate)::

    cert 1
    n
    u v <0-based canonical index of the generating hyperarc's subset>

``.trn`` (tournament or digraph)::

    trn 1
    n
    u v

Every format uses LF line endings and ends with a newline; rows are sorted.
"""
from __future__ import annotations

from math import comb

from .degenerate import GenerationCertificate
from .errors import DuplicateSubset, ParseError
from .hypercore import (
    Digraph,
    HyperArc,
    HyperDigraph,
    HyperTournament,
    Tournament,
    build_hyperdigraph,
    build_hypertournament,
    subset_rank,
)


def serialize_kht(H: HyperDigraph) -> str:
    magic = "kht" if isinstance(H, HyperTournament) or H.is_tournament() else "khd"
    lines = [f"{magic} 1", f"{H.k} {H.n}"]
    lines += [" ".join(map(str, a.seq)) for a in H.arcs]
    return "\n".join(lines) + "\n"


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    if "\r" in data:
        raise ParseError("CR characters are not allowed", line=data[: data.index("\r")].count("\n") + 1)
    if not data.endswith("\n"):
        raise ParseError("missing trailing newline", line=data.count("\n") + 1)
    return data


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split(" ")]
    except ValueError:
        raise ParseError(f"expected space-separated integers, got {line!r}", line=lineno) from None


def parse_kht(data: bytes | str) -> HyperDigraph:
    """Strict parser for ``.kht`` and ``.khd`` text."""
    lines = _decode(data)[:-1].split("\n")
    if lines[0] not in ("kht 1", "khd 1"):
        raise ParseError(f"unknown header {lines[0]!r}", line=1)
    if len(lines) < 2:
        raise ParseError("missing 'k n' line", line=2)
    kn = _ints(lines[1], 2)
    if len(kn) != 2:
        raise ParseError("expected 'k n'", line=2)
    k, n = kn
    rows = [_ints(line, i + 3) for i, line in enumerate(lines[2:])]
    if lines[0] == "kht 1":
        H = build_hypertournament(k, n, rows)
    else:
        H = build_hyperdigraph(k, n, rows)
    keys = [tuple(sorted(r)) for r in rows]
    for i in range(1, len(keys)):
        if keys[i] <= keys[i - 1]:
            raise ParseError("rows out of canonical subset order", line=i + 3)
    return H


def serialize_trn(T: Digraph) -> str:
    lines = ["trn 1", str(T.n)] + [f"{u} {v}" for u, v in T.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_trn(data: bytes | str) -> Digraph:
    lines = _decode(data)[:-1].split("\n")
    if lines[0] != "trn 1":
        raise ParseError(f"unknown header {lines[0]!r}", line=1)
    n = _ints(lines[1], 2)
    if len(n) != 1:
        raise ParseError("expected vertex count", line=2)
    arcs = []
    for i, line in enumerate(lines[2:]):
        pair = _ints(line, i + 3)
        if len(pair) != 2:
            raise ParseError("expected 'u v'", line=i + 3)
        arcs.append(tuple(pair))
    if arcs != sorted(set(arcs)):
        raise ParseError("arcs not sorted or duplicated")
    n = n[0]
    D = Digraph(n, frozenset(arcs))
    if len(arcs) == comb(n, 2) and len({frozenset(a) for a in arcs}) == len(arcs):
        return Tournament(n, frozenset(arcs))
    return D


def serialize_cert(cert: GenerationCertificate, n: int) -> str:
    lines = ["cert 1", str(n)]
    for (u, v), a in sorted(cert.assignment.items()):
        lines.append(f"{u} {v} {subset_rank(a.key, n)}")
    return "\n".join(lines) + "\n"


def parse_cert(data: bytes | str, H: HyperDigraph) -> GenerationCertificate:
    """Read a certificate, resolving subset indices against ``H``."""
    lines = _decode(data)[:-1].split("\n")
    if lines[0] != "cert 1":
        raise ParseError(f"unknown header {lines[0]!r}", line=1)
    if _ints(lines[1], 2) != [H.n]:
        raise ParseError("vertex count does not match the hypertournament", line=2)
    by_rank = {subset_rank(key, H.n): a for key, a in H.by_key.items()}
    assignment: dict[tuple[int, int], HyperArc] = {}
    for i, line in enumerate(lines[2:]):
        row = _ints(line, i + 3)
        if len(row) != 3:
            raise ParseError("expected 'u v index'", line=i + 3)
        u, v, r = row
        if r not in by_rank:
            raise ParseError(f"no hyperarc with subset index {r}", line=i + 3)
        if (u, v) in assignment:
            raise DuplicateSubset(f"arc {u}->{v} certified twice")
        assignment[(u, v)] = by_rank[r]
    if list(assignment) != sorted(assignment):
        raise ParseError("rows not sorted by (u, v)")
    return GenerationCertificate(assignment)
