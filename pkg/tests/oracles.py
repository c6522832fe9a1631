"""Brute-force reference computations, independent of the package's search code."""
import itertools
import math

import numpy as np


def adjacency(n, edges):
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    return a


def all_automorphisms(n, edges):
    """Every permutation p with A[p][:, p] == A, checked over all n! candidates."""
    a = adjacency(n, edges)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    ok = (a[perms[:, :, None], perms[:, None, :]] == a[None]).all(axis=(1, 2))
    return perms[ok]


def orbits_from(perms, items, act):
    """Orbit partition of ``items`` under an explicit list of group elements."""
    seen, out = set(), []
    for x in items:
        if x in seen:
            continue
        orb = sorted({act(p, x) for p in perms})
        seen.update(orb)
        out.append(orb)
    return sorted(out, key=lambda o: o[0])


def girth_by_cycles(n, edges, max_len=None):
    """Shortest cycle by enumerating vertex sequences; inf if none up to max_len."""
    a = adjacency(n, edges)
    max_len = n if max_len is None else max_len
    for k in range(3, max_len + 1):
        for combo in itertools.combinations(range(n), k):
            first = combo[0]
            for rest in itertools.permutations(combo[1:]):
                cyc = (first,) + rest
                if all(a[cyc[i], cyc[(i + 1) % k]] for i in range(k)):
                    return k
    return math.inf


def girth_by_paths(neighbors, max_len):
    """Shortest cycle up to ``max_len`` by DFS over simple paths from each start.

    Only paths whose start is their smallest vertex are extended, so each cycle
    is found from its minimum vertex.
    """
    best = math.inf
    n = len(neighbors)
    for s in range(n):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in neighbors[v]:
                if w == s and len(path) >= 3:
                    best = min(best, len(path))
                elif w > s and w not in path and len(path) < min(max_len, best):
                    stack.append((w, path + (w,)))
    return best


def is_bipartite_exhaustive(n, edges):
    for mask in range(1 << n):
        if all(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in edges):
            return True
    return False
