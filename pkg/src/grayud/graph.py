"""Combinatorial objects: graphs, LCF codes, grid configurations, Levi graphs."""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels

SOLID = "solid"
HOLLOW = "hollow"

GRAY_LCF = ((7, -7, 13, -13, 25, -25), 9)


class LcfError(ValueError):
    """Raised for an LCF code that does not describe a simple cubic graph."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


def _norm_edge(a, b):
    a, b = int(a), int(b)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``roles`` optionally tags each vertex ``"solid"`` or ``"hollow"``; when
    present every edge must join a solid vertex to a hollow one.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)
    roles: Optional[tuple] = None

    def __post_init__(self):
        edges = frozenset(_norm_edge(a, b) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("negative vertex count")
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if a < 0 or b >= self.n:
                raise ValueError(f"edge ({a}, {b}) has an undeclared endpoint")
        if self.roles is not None:
            roles = tuple(self.roles)
            object.__setattr__(self, "roles", roles)
            if len(roles) != self.n:
                raise ValueError("roles must cover every vertex")
            if any(r not in (SOLID, HOLLOW) for r in roles):
                raise ValueError("roles must be 'solid' or 'hollow'")
            for a, b in edges:
                if roles[a] == roles[b]:
                    raise ValueError(f"edge ({a}, {b}) joins two {roles[a]} vertices")

    @property
    def vertices(self):
        return range(self.n)

    def sorted_edges(self):
        return sorted(self.edges)

    @cached_property
    def neighbors(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    def degree(self, v):
        return len(self.neighbors[v])

    def has_edge(self, a, b):
        return _norm_edge(a, b) in self.edges

    @cached_property
    def csr(self):
        """Sorted CSR adjacency ``(indptr, indices)`` as int64 arrays."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(x) for x in self.neighbors])
        indices = np.fromiter(
            itertools.chain.from_iterable(self.neighbors), dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices

    @cached_property
    def adjacency_matrix(self):
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        for a, b in self.edges:
            m[a, b] = m[b, a] = 1
        return m

    @cached_property
    def distances(self):
        """All-pairs hop distances (-1 for unreachable pairs)."""
        return _kernels.bfs_distances(*self.csr)

    def with_roles(self, roles):
        return Graph(self.n, self.edges, tuple(roles))

    def to_json(self) -> str:
        doc = {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}
        if self.roles is not None:
            doc["roles"] = {str(v): r for v, r in enumerate(self.roles)}
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        doc = json.loads(text)
        roles = doc.get("roles")
        if roles is not None:
            roles = tuple(roles[str(v)] for v in range(doc["n"]))
        return cls(doc["n"], frozenset(tuple(e) for e in doc["edges"]), roles)


@dataclass(frozen=True)
class IncidenceConfiguration:
    """Point-line incidence structure with structured point and line labels."""

    points: tuple
    lines: tuple
    flags: frozenset

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lines", tuple(self.lines))
        flags = list(self.flags)
        if len(set(flags)) != len(flags):
            raise ValueError("repeated flag")
        object.__setattr__(self, "flags", frozenset(flags))
        pts, lns = set(self.points), set(self.lines)
        for p, l in self.flags:
            if p not in pts or l not in lns:
                raise ValueError(f"flag ({p!r}, {l!r}) references an undeclared id")

    def point_degrees(self):
        deg = dict.fromkeys(self.points, 0)
        for p, _ in self.flags:
            deg[p] += 1
        return deg

    def line_degrees(self):
        deg = dict.fromkeys(self.lines, 0)
        for _, l in self.flags:
            deg[l] += 1
        return deg

    def lines_through(self, point):
        return sorted(l for p, l in self.flags if p == point)


@dataclass(frozen=True)
class LcfCode:
    offsets: tuple
    repeats: int = 1

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(int(o) for o in self.offsets))
        if self.repeats < 1:
            raise LcfError("repeats must be positive")
        if not self.offsets:
            raise LcfError("empty offset list")

    @property
    def n(self):
        return len(self.offsets) * self.repeats

    def offset(self, i):
        return self.offsets[i % len(self.offsets)]

    def validate(self):
        """Raise :class:`LcfError` naming the first bad position, if any."""
        n = self.n
        for i in range(n):
            o = self.offset(i)
            if o % n in (0, 1, n - 1):
                raise LcfError(
                    f"position {i}: offset {o} is zero or duplicates a cycle edge (n={n})",
                    position=i,
                )
            j = (i + o) % n
            if (j + self.offset(j)) % n != i:
                raise LcfError(
                    f"position {i}: chord to {j} is not paired back "
                    f"(offset at {j} is {self.offset(j)}, expected {-o} mod {n})",
                    position=i,
                )


def lcf_graph(code: LcfCode) -> Graph:
    code.validate()
    n = code.n
    edges = {_norm_edge(i, (i + 1) % n) for i in range(n)}
    edges |= {_norm_edge(i, (i + code.offset(i)) % n) for i in range(n)}
    return Graph(n, frozenset(edges))


def gray_graph() -> Graph:
    """The Gray graph from its LCF code; vertex 0's class is hollow."""
    g = lcf_graph(LcfCode(*GRAY_LCF))
    a, _ = bipartition(g)
    roles = tuple(HOLLOW if v in a else SOLID for v in range(g.n))
    return g.with_roles(roles)


def grid3_configuration(k: int = 3) -> IncidenceConfiguration:
    """Points of the k x k x k grid and its 3k^2 axis-parallel lines.

    A line is labelled ``(axis, a, b)`` where ``a, b`` are the two fixed
    coordinates in increasing axis order.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    points = list(itertools.product(range(k), repeat=3))
    lines = [(axis, a, b) for axis in range(3) for a in range(k) for b in range(k)]
    flags = set()
    for p in points:
        for axis in range(3):
            fixed = tuple(c for i, c in enumerate(p) if i != axis)
            flags.add((p, (axis,) + fixed))
    return IncidenceConfiguration(tuple(points), tuple(lines), frozenset(flags))


def grid2_configuration(k: int = 3) -> IncidenceConfiguration:
    """The k x k grid: points ``(row, col)``, lines ``(0, row)`` and ``(1, col)``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    points = list(itertools.product(range(k), repeat=2))
    lines = [(0, r) for r in range(k)] + [(1, c) for c in range(k)]
    flags = {((r, c), (0, r)) for r, c in points} | {((r, c), (1, c)) for r, c in points}
    return IncidenceConfiguration(tuple(points), tuple(lines), frozenset(flags))


def levi_graph(config: IncidenceConfiguration) -> Graph:
    """Incidence graph: sorted points get ids first (solid), then sorted lines (hollow)."""
    points = sorted(config.points)
    lines = sorted(config.lines)
    pid = {p: i for i, p in enumerate(points)}
    lid = {l: len(points) + i for i, l in enumerate(lines)}
    edges = frozenset((pid[p], lid[l]) for p, l in config.flags)
    roles = (SOLID,) * len(points) + (HOLLOW,) * len(lines)
    return Graph(len(roles), edges, roles)


def girth(g: Graph) -> float:
    """Exact girth by BFS from every vertex; ``math.inf`` for forests."""
    if g.n == 0:
        return math.inf
    value = _kernels.girth(*g.csr)
    return math.inf if value == 0 else int(value)


def bipartition(g: Graph):
    """Proper 2-colouring ``(A, B)`` as frozensets, or None if an odd cycle exists.

    Each component's lowest vertex goes to A.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    return a, b


def verify_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    cycle = list(cycle)
    if len(cycle) != g.n or sorted(cycle) != list(range(g.n)):
        return False
    if g.n < 3:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def complete_bipartite(p: int, q: int) -> Graph:
    edges = frozenset((a, p + b) for a in range(p) for b in range(q))
    return Graph(p + q, edges)


def subdivide(g: Graph) -> Graph:
    """Insert one new vertex in the middle of every edge (in sorted edge order)."""
    edges = set()
    for k, (a, b) in enumerate(g.sorted_edges()):
        m = g.n + k
        edges.add((a, m))
        edges.add((b, m))
    return Graph(g.n + len(g.edges), frozenset(edges))


def graph_from_edges(n: int, edges: Iterable) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges))
