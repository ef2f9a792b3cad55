"""Edge ideals of simple graphs, induced matchings and forest regularity."""

from dataclasses import dataclass
import json

from ._validation import DomainError, ParseError, check_int
from .ideals import MonomialIdeal
from .monomials import Monomial

__all__ = [
    "Graph",
    "edge_ideal",
    "induced_matching_number",
    "is_forest",
    "forest_regularity",
    "corollary_graph",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``1..n``; edges are sorted pairs."""

    n: int
    edges: tuple

    def __post_init__(self):
        n = check_int(self.n, "n", 1)
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} does not have two endpoints")
            a, b = sorted(check_int(v, "vertex", 1) for v in e)
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if b > n:
                raise ValueError(f"edge {a}-{b} leaves the vertex set 1..{n}")
            if (a, b) in seen:
                raise ValueError(f"repeated edge {a}-{b}")
            seen.add((a, b))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def parse(cls, text, n=None):
        """Parse ``1-4,2-5,3-6``; ``n`` defaults to the largest vertex."""
        edges = []
        for token in text.split(","):
            parts = token.strip().split("-")
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise ParseError(f"bad edge token {token.strip()!r}", token.strip())
            edges.append((int(parts[0]), int(parts[1])))
        if n is None:
            n = max(max(e) for e in edges)
        try:
            return cls(n, tuple(edges))
        except ValueError as exc:
            raise ParseError(str(exc), text) from exc

    @classmethod
    def from_json(cls, data):
        """Build from ``{"n": 6, "edges": [[1, 4], [2, 5]]}`` (dict or string)."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"malformed JSON: {exc.msg} at char {exc.pos}", data[exc.pos:exc.pos + 10] or "<end of input>") from exc
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ParseError("graph JSON needs keys 'n' and 'edges'", str(data)[:40])
        try:
            return cls(data["n"], tuple(tuple(e) for e in data["edges"]))
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc), str(data["edges"])[:40]) from exc

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def edge_ideal(graph):
    if not graph.edges:
        raise DomainError("an edgeless graph has the zero edge ideal")
    return MonomialIdeal(graph.n, tuple(Monomial.from_support(e) for e in graph.edges))


def induced_matching_number(graph):
    """Size of the largest induced matching, by exhaustive backtracking over edges.

    Exponential in the number of edges; meant for small graphs.
    """
    if not graph.edges:
        raise DomainError("an edgeless graph has no matchings")
    masks = [1 << (a - 1) | 1 << (b - 1) for a, b in graph.edges]
    best = 0

    def induced(cover):
        # only the chosen edges may lie inside their vertex union
        return sum(1 for m in masks if m & cover == m)

    def extend(start, cover, size):
        nonlocal best
        best = max(best, size)
        if size + len(masks) - start <= best:
            return
        for k in range(start, len(masks)):
            m = masks[k]
            if m & cover:
                continue
            if induced(cover | m) == size + 1:
                extend(k + 1, cover | m, size + 1)

    extend(0, 0, 0)
    return best


def is_forest(graph):
    parent = list(range(graph.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in graph.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def forest_regularity(graph):
    """reg I(G) = im(G) + 1 for a forest with at least one edge."""
    if not is_forest(graph):
        raise DomainError("graph has a cycle")
    return induced_matching_number(graph) + 1


def corollary_graph(n):
    """Forest on [n] with edges {i, i + floor(n/2)}, plus {1, n} when n is odd."""
    n = check_int(n, "n", 2)
    half = n // 2
    edges = [(i, i + half) for i in range(1, half + 1)]
    if n % 2:
        edges.append((1, n))
    return Graph(n, tuple(edges))
