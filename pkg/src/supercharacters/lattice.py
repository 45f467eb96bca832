"""Refinement order on a family of theories and its DOT rendering."""

from __future__ import annotations

from .theories import TheoryRecord, refines, sort_key


def refinement_edges(theories) -> list[tuple[int, int]]:
    """Covering pairs (i, j): theory i refines theory j with nothing strictly
    between; indices follow the canonical (block count, key) order."""
    ts = sorted(theories, key=sort_key)
    n = len(ts)
    rel = [
        [i != j and refines(ts[i], ts[j]) for j in range(n)]
        for i in range(n)
    ]
    edges = []
    for i in range(n):
        for j in range(n):
            if rel[i][j] and not any(rel[i][k] and rel[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def _color(tags: set[str]) -> str:
    if "wedge" in tags:
        return "lightblue"
    if "direct" in tags and "automorphic" in tags:
        return "orange"
    if "direct" in tags:
        return "gold"
    if "automorphic" in tags:
        return "palegreen"
    if "maximal" in tags:
        return "lightcoral"
    return "white"


def lattice_dot(records: list[TheoryRecord]) -> str:
    """DOT digraph of covering refinements, nodes colored by tags."""
    recs = sorted(records, key=lambda r: sort_key(r.theory))
    edges = refinement_edges([r.theory for r in recs])
    lines = ["digraph refinement {", "  rankdir=BT;"]
    for i, rec in enumerate(recs):
        tags = ",".join(sorted(rec.tags))
        k = len(rec.theory.classes)
        lines.append(
            f'  n{i} [label="{k} classes" tags="{tags}" style=filled '
            f'fillcolor="{_color(rec.tags)}"];'
        )
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
