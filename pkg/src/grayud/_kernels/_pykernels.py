"""Pure-Python versions of the hot graph kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built.
"""
import numpy as np

BACKEND = "python"


def bfs_distances(indptr, indices):
    """All-pairs hop distances by one BFS per source; -1 marks unreachable."""
    n = len(indptr) - 1
    ptr = [int(x) for x in indptr]
    nbr = [int(x) for x in indices]
    out = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for k in range(ptr[u], ptr[u + 1]):
                w = nbr[k]
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        out[s] = dist
    return out


def girth(indptr, indices):
    """Shortest cycle length, or 0 when the graph is a forest."""
    n = len(indptr) - 1
    ptr = [int(x) for x in indptr]
    nbr = [int(x) for x in indices]
    best = 0
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best and 2 * dist[u] + 1 >= best:
                break
            for k in range(ptr[u], ptr[u + 1]):
                w = nbr[k]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best == 0 or length < best:
                        best = length
    return best


def search(g_indptr, g_indices, h_indptr, h_indices, h_adj, order, parent,
           color_g, color_h, prefix, limit):
    """Backtracking search for adjacency-preserving bijections g -> h.

    ``order`` is the g-vertex visiting order and ``parent[d]`` the position of
    an earlier vertex adjacent to ``order[d]`` (-1 for component roots).  The
    first ``len(prefix)`` positions are pinned to the given images.  Returns
    up to ``limit`` mappings (0 means all) as an int array of shape (k, n),
    row[i] being the image of g-vertex i.
    """
    n = len(order)
    gp = [int(x) for x in g_indptr]
    gi = [int(x) for x in g_indices]
    hp = [int(x) for x in h_indptr]
    hi = [int(x) for x in h_indices]
    hadj = np.asarray(h_adj, dtype=bool).tolist()
    order = [int(x) for x in order]
    parent = [int(x) for x in parent]
    cg = [int(x) for x in color_g]
    ch = [int(x) for x in color_h]
    prefix = [int(x) for x in prefix]
    limit = int(limit)

    image = [-1] * n
    used = [False] * n
    results = []

    def fits(u, w):
        if used[w] or cg[u] != ch[w]:
            return False
        mapped_u = 0
        row = hadj[w]
        for k in range(gp[u], gp[u + 1]):
            x = image[gi[k]]
            if x >= 0:
                if not row[x]:
                    return False
                mapped_u += 1
        mapped_w = 0
        for k in range(hp[w], hp[w + 1]):
            if used[hi[k]]:
                mapped_w += 1
        return mapped_u == mapped_w

    def extend(d):
        if d == n:
            results.append(list(image))
            return limit > 0 and len(results) >= limit
        u = order[d]
        if d < len(prefix):
            candidates = (prefix[d],)
        elif parent[d] >= 0:
            a = image[order[parent[d]]]
            candidates = hi[hp[a]:hp[a + 1]]
        else:
            candidates = range(n)
        for w in candidates:
            if fits(u, w):
                image[u] = w
                used[w] = True
                done = extend(d + 1)
                image[u] = -1
                used[w] = False
                if done:
                    return True
        return False

    extend(0)
    if not results:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(results, dtype=np.int64)
