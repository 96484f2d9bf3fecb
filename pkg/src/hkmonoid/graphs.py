"""Finite simple digraphs and the Noetherian test for their monoids.

A graph has named vertices, oriented arrows and unoriented edges.  The
monoid algebra is Noetherian exactly when every weakly connected component
is acyclic or an oriented cycle; the test is only stated for graphs
without unoriented edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Dict, List, Optional, Sequence, Tuple

from hkmonoid.words import Word, check_rank

Pair = Tuple[str, str]

ACYCLIC = "acyclic"
ORIENTED_CYCLE = "oriented-cycle"
OTHER = "other"


class GraphError(ValueError):
    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class Digraph:
    vertices: Tuple[str, ...]
    arrows: Tuple[Pair, ...] = ()
    edges: Tuple[Pair, ...] = ()

    @classmethod
    def build(cls, vertices, arrows=(), edges=()) -> "Digraph":
        return cls(
            tuple(str(v) for v in vertices),
            tuple((str(a), str(b)) for a, b in arrows),
            tuple((str(a), str(b)) for a, b in edges),
        )

    @classmethod
    def from_json(cls, data) -> "Digraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls.build(data["vertices"], data.get("arrows", []), data.get("edges", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError([f"malformed graph document: {exc}"]) from None

    @classmethod
    def load(cls, path) -> "Digraph":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [list(a) for a in self.arrows],
            "edges": [list(e) for e in self.edges],
        }

    @property
    def oriented(self) -> bool:
        return not self.edges

    def index(self) -> Dict[str, int]:
        """Vertex name to generator index (1-based, in declared order)."""
        return {v: k + 1 for k, v in enumerate(self.vertices)}


def validate(g: Digraph) -> List[str]:
    """Every violated condition, by name; an empty list means the graph is fine."""
    errors = []
    names = set(g.vertices)
    if len(names) != len(g.vertices):
        errors.append("duplicate vertex")
    for a, b in g.arrows + g.edges:
        for v in (a, b):
            if v not in names:
                errors.append(f"unknown vertex {v!r}")
        if a == b:
            errors.append(f"loop at {a!r}")
    arrow_set = set(g.arrows)
    if len(arrow_set) != len(g.arrows):
        errors.append("duplicate arrow")
    edge_set = {frozenset(e) for e in g.edges}
    if len(edge_set) != len(g.edges):
        errors.append("duplicate edge")
    for a, b in sorted(arrow_set):
        if (b, a) in arrow_set and a < b:
            errors.append(f"opposite arrows; declare an edge between {a!r} and {b!r}")
        if frozenset((a, b)) in edge_set:
            errors.append(f"pair {a!r}, {b!r} is both an arrow and an edge")
    return errors


def ensure_valid(g: Digraph) -> Digraph:
    errors = validate(g)
    if errors:
        raise GraphError(errors)
    return g


def components(g: Digraph) -> List[List[str]]:
    """Weakly connected components, each in declared vertex order."""
    adj: Dict[str, set] = {v: set() for v in g.vertices}
    for a, b in g.arrows + g.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            for u in adj[stack.pop()]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append([u for u in g.vertices if u in comp])
    return out


@dataclass(frozen=True)
class ComponentClass:
    kind: str
    length: Optional[int] = None

    def __str__(self):
        return f"{self.kind}({self.length})" if self.kind == ORIENTED_CYCLE else self.kind


def classify_component(g: Digraph, component: Sequence[str]) -> ComponentClass:
    comp = set(component)
    if any(a in comp or b in comp for a, b in g.edges):
        raise ValueError("classification out of scope: theorem assumes oriented graph")
    arrows = [(a, b) for a, b in g.arrows if a in comp]
    sorter = TopologicalSorter({v: set() for v in comp})
    for a, b in arrows:
        sorter.add(b, a)
    try:
        sorter.prepare()
        return ComponentClass(ACYCLIC)
    except CycleError:
        pass
    outdeg = {v: 0 for v in comp}
    indeg = {v: 0 for v in comp}
    for a, b in arrows:
        outdeg[a] += 1
        indeg[b] += 1
    if len(comp) >= 3 and all(outdeg[v] == 1 and indeg[v] == 1 for v in comp):
        return ComponentClass(ORIENTED_CYCLE, len(comp))
    return ComponentClass(OTHER)


@dataclass
class NoetherianReport:
    verdict: str
    components: List[Tuple[List[str], Optional[ComponentClass]]] = field(default_factory=list)
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "components": [
                {"vertices": comp, "class": None if cls is None else str(cls)}
                for comp, cls in self.components
            ],
        }


def is_noetherian(g: Digraph) -> NoetherianReport:
    """``yes`` / ``no`` / ``out-of-scope``, with the class of each component."""
    ensure_valid(g)
    comps = components(g)
    if not g.oriented:
        return NoetherianReport("out-of-scope", [(c, None) for c in comps],
                                "graph has unoriented edges")
    classes = [(c, classify_component(g, c)) for c in comps]
    bad = [c for c, cls in classes if cls.kind == OTHER]
    if bad:
        return NoetherianReport("no", classes, f"component {bad[0]} is neither acyclic nor an oriented cycle")
    return NoetherianReport("yes", classes)


def relabel(g: Digraph, mapping: Dict[str, str], order: Optional[Sequence[str]] = None) -> Digraph:
    """Rename vertices; ``order`` optionally lists the new names in a new order."""
    vertices = [mapping[v] for v in g.vertices]
    if order is not None:
        if sorted(order) != sorted(vertices):
            raise ValueError("order must list the renamed vertices")
        vertices = list(order)
    return Digraph.build(
        vertices,
        [(mapping[a], mapping[b]) for a, b in g.arrows],
        [(mapping[a], mapping[b]) for a, b in g.edges],
    )


def cycle_graph(n: int, names: Optional[Sequence[str]] = None) -> Digraph:
    """Oriented cycle ``1 -> 2 -> ... -> n -> 1``; vertex ``k`` is generator ``x_k``."""
    check_rank(n)
    names = [str(k) for k in range(1, n + 1)] if names is None else list(names)
    return Digraph.build(names, [(names[k], names[(k + 1) % n]) for k in range(n)])


def path_graph(names: Sequence[str]) -> Digraph:
    return Digraph.build(names, [(a, b) for a, b in zip(names, names[1:])])


def disjoint_union(*graphs: Digraph) -> Digraph:
    vertices, arrows, edges = [], [], []
    for g in graphs:
        vertices += g.vertices
        arrows += g.arrows
        edges += g.edges
    return Digraph.build(vertices, arrows, edges)


def cycle_with_tail(n: int) -> Digraph:
    """The oriented ``n``-cycle with an extra vertex ``y`` and an arrow ``y -> 1``.

    ``y`` is the last vertex, so it becomes generator ``n + 1``.
    """
    base = cycle_graph(n)
    return Digraph.build(base.vertices + ("y",), base.arrows + (("y", "1"),))


def acc_witnesses(n: int, k: int) -> Tuple[List[Word], List[Word]]:
    """Words ``w_1..w_k`` and ``v_1..v_k`` on ``cycle_with_tail(n)`` (``y`` = ``n + 1``).

    ``w_m = (x_n ... x_1)^m y`` and ``v_m = x_1 x_2 y (x_1 x_n ... x_2)^m``.
    """
    check_rank(n)
    if k < 1:
        raise ValueError("k must be at least 1")
    y = n + 1
    down = tuple(range(n, 0, -1))
    turn = (1,) + tuple(range(n, 1, -1))
    ws = [down * m + (y,) for m in range(1, k + 1)]
    vs = [(1, 2, y) + turn * m for m in range(1, k + 1)]
    return ws, vs
