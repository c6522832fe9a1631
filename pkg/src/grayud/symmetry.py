"""Permutations, isomorphism certificates and automorphism-group orbits.

The search engine is individualise-by-backtracking over a refined colouring:
vertices are first split by degree, role and their distance profile, then by
iterated neighbour-colour refinement.  The backtracking itself lives in
:mod:`grayud._kernels`.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .graph import Graph

MAX_EXHAUSTIVE_N = 100


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    image: tuple

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError("image is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, cycles):
        image = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                image[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(image))

    def __call__(self, i):
        return self.image[i]

    def __len__(self):
        return len(self.image)

    def __mul__(self, other):
        """``(p * q)(i) == p(q(i))``."""
        return Permutation(tuple(self.image[j] for j in other.image))

    def __pow__(self, k):
        result = Permutation.identity(len(self))
        for _ in range(k):
            result = self * result
        return result

    def inverse(self):
        inv = [0] * len(self.image)
        for i, x in enumerate(self.image):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self):
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.image[i]
            out.append(tuple(cyc))
        return out

    def order(self):
        result = 1
        for cyc in self.cycles():
            result = np.lcm(result, len(cyc))
        return int(result)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.image))

    def to_json(self):
        return json.dumps(list(self.image))


@dataclass(frozen=True)
class IsomorphismCertificate:
    mapping: Permutation
    verified: bool

    def to_dict(self):
        return {"mapping": list(self.mapping.image), "verified": self.verified}


@dataclass(frozen=True)
class AutomorphismGroup:
    """Group order plus a generating set harvested along a stabiliser chain."""

    order: int
    generators: tuple
    n: int


def rho() -> Permutation:
    """The order-3 rotation of the Gray graph's LCF drawing: i -> i + 18 (mod 54)."""
    return Permutation(tuple((i + 18) % 54 for i in range(54)))


def is_automorphism(g: Graph, p: Permutation) -> bool:
    if len(p) != g.n:
        return False
    edges = g.edges
    return all(_edge(p(a), p(b)) in edges for a, b in edges)


def is_semiregular(p: Permutation, m: int) -> bool:
    return all(len(c) == m for c in p.cycles())


def verify_isomorphism(g: Graph, h: Graph, mapping) -> bool:
    """Independent edge-by-edge check that ``mapping`` carries g onto h."""
    image = tuple(mapping.image if isinstance(mapping, Permutation) else mapping)
    if g.n != h.n or len(g.edges) != len(h.edges) or len(image) != g.n:
        return False
    if sorted(image) != list(range(g.n)):
        return False
    return all(_edge(image[a], image[b]) in h.edges for a, b in g.edges)


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def refined_colors(graphs, respect_roles=False):
    """Joint stable colouring of several graphs; equal ids mean equal classes."""
    sigs = []
    for g in graphs:
        dist = g.distances
        for v in range(g.n):
            profile = tuple(np.bincount(dist[v] + 1, minlength=g.n + 1)) if g.n else ()
            role = g.roles[v] if (respect_roles and g.roles is not None) else ""
            sigs.append((g.degree(v), role, profile))
    colors = _relabel(sigs)
    ncls = len(set(colors))
    while True:
        sigs = []
        offset = 0
        for g in graphs:
            for v in range(g.n):
                nb = tuple(sorted(colors[offset + w] for w in g.neighbors[v]))
                sigs.append((colors[offset + v], nb))
            offset += g.n
        colors = _relabel(sigs)
        new = len(set(colors))
        if new == ncls:
            break
        ncls = new
    out = []
    offset = 0
    for g in graphs:
        out.append(np.array(colors[offset:offset + g.n], dtype=np.int64))
        offset += g.n
    return out


def _relabel(sigs):
    index = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [index[s] for s in sigs]


def _search_order(g: Graph, colors):
    """BFS visiting order; component roots taken from the smallest colour class."""
    class_size = np.bincount(colors) if len(colors) else np.zeros(0, dtype=np.int64)
    pos = [-1] * g.n
    order, parent = [], []
    remaining = sorted(range(g.n), key=lambda v: (class_size[colors[v]], v))
    for root in remaining:
        if pos[root] >= 0:
            continue
        pos[root] = len(order)
        order.append(root)
        parent.append(-1)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if pos[w] < 0:
                    pos[w] = len(order)
                    order.append(w)
                    parent.append(pos[u])
                    queue.append(w)
    return np.array(order, dtype=np.int64), np.array(parent, dtype=np.int64)


def _run_search(g, h, cg, ch, order, parent, prefix, limit):
    gp, gi = g.csr
    hp, hi = h.csr
    return _kernels.search(gp, gi, hp, hi, h.adjacency_matrix, order, parent,
                           cg, ch, np.asarray(prefix, dtype=np.int64), limit)


def find_isomorphism(g: Graph, h: Graph, respect_roles: bool = False) -> Optional[IsomorphismCertificate]:
    """Find a vertex bijection g -> h preserving adjacency, or None.

    With ``respect_roles`` the bijection must also carry solid to solid and
    hollow to hollow.
    """
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    if respect_roles and (g.roles is None) != (h.roles is None):
        return None
    cg, ch = refined_colors([g, h], respect_roles)
    if sorted(cg.tolist()) != sorted(ch.tolist()):
        return None
    order, parent = _search_order(g, cg)
    found = _run_search(g, h, cg, ch, order, parent, (), 1)
    if len(found) == 0:
        return None
    mapping = Permutation(tuple(found[0]))
    ok = verify_isomorphism(g, h, mapping)
    if respect_roles and g.roles is not None:
        ok = ok and all(g.roles[v] == h.roles[mapping(v)] for v in g.vertices)
    return IsomorphismCertificate(mapping, ok)


def _check_scale(g):
    if g.n > MAX_EXHAUSTIVE_N:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the exhaustive bound {MAX_EXHAUSTIVE_N}")


def iter_automorphisms(g: Graph, respect_roles: bool = False):
    """Every automorphism of g, by one exhaustive backtracking pass."""
    _check_scale(g)
    (c,) = refined_colors([g], respect_roles)
    order, parent = _search_order(g, c)
    for row in _run_search(g, g, c, c, order, parent, (), 0):
        yield Permutation(tuple(row))


def automorphism_group(g: Graph, respect_roles: bool = False) -> AutomorphismGroup:
    """Group order and generators via the pointwise stabiliser chain.

    At depth d the search fixes the first d vertices of the visiting order
    and asks, for every candidate image w of the next vertex, whether some
    automorphism realises it.  The group order is the product of these orbit
    sizes; one witness per non-trivial image is kept as a generator.
    """
    _check_scale(g)
    (c,) = refined_colors([g], respect_roles)
    order, parent = _search_order(g, c)
    total = 1
    generators = []
    nbrs = g.neighbors
    for d in range(g.n):
        u = int(order[d])
        fixed = [int(x) for x in order[:d]]
        if parent[d] >= 0:
            candidates = nbrs[int(order[parent[d]])]
        else:
            candidates = range(g.n)
        fixed_set = set(fixed)
        orbit = 1
        for w in candidates:
            if w == u or w in fixed_set or c[w] != c[u]:
                continue
            found = _run_search(g, g, c, c, order, parent, fixed + [w], 1)
            if len(found):
                orbit += 1
                generators.append(Permutation(tuple(found[0])))
        total *= orbit
    return AutomorphismGroup(total, tuple(generators), g.n)


def automorphism_count(g: Graph) -> int:
    return automorphism_group(g).order


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((sorted(v) for v in groups.values()), key=lambda s: s[0])


def vertex_orbits(g: Graph, group: Optional[AutomorphismGroup] = None):
    """Vertex orbits as sorted lists, ordered by their smallest member."""
    group = group or automorphism_group(g)
    uf = _UnionFind(range(g.n))
    for p in group.generators:
        for v in range(g.n):
            uf.union(v, p(v))
    return uf.classes()


def edge_orbits(g: Graph, group: Optional[AutomorphismGroup] = None):
    """Edge orbits as sorted lists of ``(a, b)`` pairs."""
    group = group or automorphism_group(g)
    uf = _UnionFind(g.sorted_edges())
    for p in group.generators:
        for a, b in g.edges:
            uf.union((a, b), _edge(p(a), p(b)))
    return uf.classes()


def transporter(group: AutomorphismGroup, x: int, y: int) -> Optional[Permutation]:
    """A product of recorded generators mapping vertex x to y, if one exists."""
    start = Permutation.identity(group.n)
    seen = {x: start}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if v == y:
            return seen[v]
        for p in group.generators:
            w = p(v)
            if w not in seen:
                seen[w] = p * seen[v]
                queue.append(w)
    return None
