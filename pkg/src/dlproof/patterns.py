"""Canonical forms of (goal, axiom set) tasks up to predicate renaming.

A task is encoded as a vertex-colored, edge-labeled graph: one vertex per
axiom (the goal marked), one per syntax-tree occurrence, and one per
concept or role name. Name vertices of the same kind start with the same
color, so a graph isomorphism is exactly a bijective renaming that maps
goal to goal and axiom set to axiom set. Conjunction and disjunction
children hang off their parent under one shared edge label, which makes
the encoding independent of argument order.

The canonical form is computed by iterated color refinement with
backtracking individualization on the first ambiguous color class,
taking the minimal certificate over all choices. Exact, worst-case
exponential, fine at justification scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    And, Atomic, Bottom, ConceptInclusion, Exists, Forall, Not, Or,
    RoleInclusion, Top,
)


@dataclass(frozen=True)
class CanonicalPattern:
    key: str
    names: int
    axioms: int

    def __repr__(self):
        return f"CanonicalPattern({self.axioms} axioms, {self.names} names)"


class _Graph:
    def __init__(self):
        self.colors = []          # initial color label per vertex
        self.out = []             # vertex -> list of (edge label, vertex)
        self.ins = []             # vertex -> list of (edge label, vertex)

    def vertex(self, color) -> int:
        v = len(self.colors)
        self.colors.append(color)
        self.out.append([])
        self.ins.append([])
        return v

    def edge(self, u, label, v):
        self.out[u].append((label, v))
        self.ins[v].append((label, u))


def _build_graph(goal, axioms):
    g = _Graph()
    names = {}

    def name_vertex(kind, name):
        key = (kind, name)
        if key not in names:
            names[key] = g.vertex(("name", kind))
        return names[key]

    def expr_vertex(e):
        if isinstance(e, Top):
            return g.vertex(("expr", "top"))
        if isinstance(e, Bottom):
            return g.vertex(("expr", "bot"))
        if isinstance(e, Atomic):
            v = g.vertex(("expr", "atom"))
            g.edge(v, "name", name_vertex("C", e.name))
            return v
        if isinstance(e, Not):
            v = g.vertex(("expr", "not"))
            g.edge(v, "inner", expr_vertex(e.inner))
            return v
        if isinstance(e, (And, Or)):
            tag = "and" if isinstance(e, And) else "or"
            v = g.vertex(("expr", tag))
            for a in e.args:
                g.edge(v, "arg", expr_vertex(a))
            return v
        if isinstance(e, (Exists, Forall)):
            tag = "exists" if isinstance(e, Exists) else "forall"
            v = g.vertex(("expr", tag))
            g.edge(v, "role", name_vertex("R", e.role))
            g.edge(v, "filler", expr_vertex(e.filler))
            return v
        raise TypeError(f"not a concept: {e!r}")

    def axiom_vertex(a, is_goal):
        if isinstance(a, ConceptInclusion):
            v = g.vertex(("axiom", "ci", is_goal))
            g.edge(v, "lhs", expr_vertex(a.lhs))
            g.edge(v, "rhs", expr_vertex(a.rhs))
            return v
        if isinstance(a, RoleInclusion):
            v = g.vertex(("axiom", "ri", is_goal))
            g.edge(v, "sub", name_vertex("R", a.sub))
            g.edge(v, "sup", name_vertex("R", a.sup))
            return v
        raise TypeError(f"not an axiom: {a!r}")

    axiom_vertex(goal, True)
    for a in sorted(set(axioms), key=lambda x: x.key()):
        axiom_vertex(a, False)
    return g, len(names)


def _refine(g, coloring):
    """1-WL refinement with edge labels until the partition is stable."""
    n = len(coloring)
    while True:
        profiles = []
        for v in range(n):
            outp = sorted((lbl, coloring[u]) for (lbl, u) in g.out[v])
            inp = sorted((lbl, coloring[u]) for (lbl, u) in g.ins[v])
            profiles.append((coloring[v], tuple(outp), tuple(inp)))
        ranks = {p: i for i, p in enumerate(sorted(set(profiles)))}
        new = [ranks[p] for p in profiles]
        if new == coloring:
            return new
        coloring = new


def _certificate(g, coloring) -> str:
    order = sorted(range(len(coloring)), key=lambda v: coloring[v])
    rank = {v: i for i, v in enumerate(order)}
    vert = [repr(g.colors[v]) for v in order]
    edges = sorted((rank[u], lbl, rank[v])
                   for u in range(len(coloring)) for (lbl, v) in g.out[u])
    return "|".join(vert) + "#" + ";".join(f"{a}-{l}-{b}" for a, l, b in edges)


def _canon(g, coloring) -> str:
    coloring = _refine(g, coloring)
    classes = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    ambiguous = [c for c, vs in classes.items() if len(vs) > 1]
    if not ambiguous:
        return _certificate(g, coloring)
    target = min(ambiguous)
    best = None
    bump = max(coloring) + 1
    for v in classes[target]:
        branched = list(coloring)
        branched[v] = bump
        cert = _canon(g, branched)
        if best is None or cert < best:
            best = cert
    return best


def canonical_pattern(goal, axioms) -> CanonicalPattern:
    """Equal patterns iff some bijective renaming of concept and role names
    maps one task onto the other (goal to goal, axiom set to axiom set)."""
    axiom_list = sorted(set(axioms), key=lambda a: a.key())
    g, name_count = _build_graph(goal, axiom_list)
    labels = {lab: i for i, lab in enumerate(sorted(set(map(repr, g.colors))))}
    initial = [labels[repr(c)] for c in g.colors]
    key = _canon(g, initial)
    return CanonicalPattern(key=key, names=name_count, axioms=len(axiom_list))
