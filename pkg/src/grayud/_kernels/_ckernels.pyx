# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; mirror of ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int64_t i64


def bfs_distances(indptr, indices):
    cdef i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    out_arr = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] out = out_arr
    cdef i64[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t s, head, tail, u, w, k
    for s in range(n):
        out[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(ptr[u], ptr[u + 1]):
                w = nbr[k]
                if out[s, w] < 0:
                    out[s, w] = out[s, u] + 1
                    queue[tail] = w
                    tail += 1
    return out_arr


def girth(indptr, indices):
    cdef i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef i64[::1] dist = np.empty(max(n, 1), dtype=np.int64)
    cdef i64[::1] parent = np.empty(max(n, 1), dtype=np.int64)
    cdef i64[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t s, head, tail, u, w, k, i
    cdef i64 best = 0, length
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            parent[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if best and 2 * dist[u] + 1 >= best:
                break
            for k in range(ptr[u], ptr[u + 1]):
                w = nbr[k]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best == 0 or length < best:
                        best = length
    return int(best)


cdef inline bint _fits(Py_ssize_t u, Py_ssize_t w,
                       i64[::1] gp, i64[::1] gi, i64[::1] hp, i64[::1] hi,
                       cnp.uint8_t[:, ::1] hadj, i64[::1] cg, i64[::1] ch,
                       i64[::1] image, cnp.uint8_t[::1] used):
    cdef Py_ssize_t k
    cdef i64 x
    cdef int mapped_u = 0, mapped_w = 0
    if used[w] or cg[u] != ch[w]:
        return False
    for k in range(gp[u], gp[u + 1]):
        x = image[gi[k]]
        if x >= 0:
            if not hadj[w, x]:
                return False
            mapped_u += 1
    for k in range(hp[w], hp[w + 1]):
        if used[hi[k]]:
            mapped_w += 1
    return mapped_u == mapped_w


def search(g_indptr, g_indices, h_indptr, h_indices, h_adj, order, parent,
           color_g, color_h, prefix, limit):
    cdef i64[::1] gp = np.ascontiguousarray(g_indptr, dtype=np.int64)
    cdef i64[::1] gi = np.ascontiguousarray(g_indices, dtype=np.int64)
    cdef i64[::1] hp = np.ascontiguousarray(h_indptr, dtype=np.int64)
    cdef i64[::1] hi = np.ascontiguousarray(h_indices, dtype=np.int64)
    cdef cnp.uint8_t[:, ::1] hadj = np.ascontiguousarray(h_adj, dtype=np.uint8)
    cdef i64[::1] od = np.ascontiguousarray(order, dtype=np.int64)
    cdef i64[::1] par = np.ascontiguousarray(parent, dtype=np.int64)
    cdef i64[::1] cg = np.ascontiguousarray(color_g, dtype=np.int64)
    cdef i64[::1] ch = np.ascontiguousarray(color_h, dtype=np.int64)
    cdef i64[::1] pre = np.ascontiguousarray(prefix, dtype=np.int64)
    cdef Py_ssize_t n = od.shape[0]
    cdef Py_ssize_t npre = pre.shape[0]
    cdef i64 lim = limit
    cdef i64[::1] image = np.full(max(n, 1), -1, dtype=np.int64)
    cdef cnp.uint8_t[::1] used = np.zeros(max(n, 1), dtype=np.uint8)
    # per-level candidate cursor: kind 0 = pinned, 1 = neighbours, 2 = all
    cdef i64[::1] kind = np.zeros(max(n, 1), dtype=np.int64)
    cdef i64[::1] cur = np.zeros(max(n, 1), dtype=np.int64)
    cdef i64[::1] end = np.zeros(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t d = 0, u, w, a
    cdef bint found
    results = []

    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)

    cur[0] = -1
    while d >= 0:
        if d == n:
            results.append(np.asarray(image).copy())
            if lim > 0 and len(results) >= lim:
                break
            d -= 1
            used[image[od[d]]] = 0
            image[od[d]] = -1
            continue
        if cur[d] == -1:
            # fresh level
            if d < npre:
                kind[d] = 0
                cur[d] = 0
                end[d] = 1
            elif par[d] >= 0:
                a = image[od[par[d]]]
                kind[d] = 1
                cur[d] = hp[a]
                end[d] = hp[a + 1]
            else:
                kind[d] = 2
                cur[d] = 0
                end[d] = n
        u = od[d]
        found = False
        while cur[d] < end[d]:
            if kind[d] == 0:
                w = pre[d]
            elif kind[d] == 1:
                w = hi[cur[d]]
            else:
                w = cur[d]
            cur[d] += 1
            if _fits(u, w, gp, gi, hp, hi, hadj, cg, ch, image, used):
                image[u] = w
                used[w] = 1
                found = True
                break
        if found:
            d += 1
            if d < n:
                cur[d] = -1
        else:
            d -= 1
            if d >= 0:
                used[image[od[d]]] = 0
                image[od[d]] = -1

    if not results:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(results, dtype=np.int64)
