# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bottleneck-path kernels.

Statement-for-statement twin of _bottleneck_py; see that module for the
semantics. Only comparisons and copies are performed on the double-precision
edge values, so both backends return bit-identical results.
"""

import numpy as np

cdef double NEG_INF = float("-inf")
cdef double POS_INF = float("inf")


def bottleneck_table(indptr, nbr, wts, int n, int target, int cap):
    """Best-bottleneck-to-target table as a (cap+1, n) float64 array."""
    cdef long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef long[::1] nb = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef double[::1] ws = np.ascontiguousarray(wts, dtype=np.float64)
    out = np.full((cap + 1, n), NEG_INF, dtype=np.float64)
    cdef double[:, ::1] t = out
    cdef int r, v
    cdef long e
    cdef double best, c, w
    t[0, target] = POS_INF
    for r in range(1, cap + 1):
        for v in range(n):
            best = t[r - 1, v]
            for e in range(ip[v], ip[v + 1]):
                c = t[r - 1, nb[e]]
                w = ws[e]
                if w < c:
                    c = w
                if c > best:
                    best = c
            t[r, v] = best
    return out


def shortest_lex_path(indptr, nbr, wts, table, int source, int target, int cap):
    """Deterministic optimal path; see _bottleneck_py.shortest_lex_path."""
    cdef double[:, ::1] t = table
    cdef double opt = t[cap, source]
    if opt == NEG_INF:
        return None
    cdef long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef long[::1] nb = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef double[::1] ws = np.ascontiguousarray(wts, dtype=np.float64)
    cdef int steps = 0
    while t[steps, source] < opt:
        steps += 1
    path = [source]
    cdef int v = source
    cdef int r, found
    cdef long e, u
    for r in range(steps, 0, -1):
        found = 0
        for e in range(ip[v], ip[v + 1]):
            u = nb[e]
            if ws[e] >= opt and t[r - 1, u] >= opt:
                v = <int> u
                path.append(v)
                found = 1
                break
        if not found:
            raise AssertionError("bottleneck table inconsistent with adjacency")
    return path


cdef int _dfs(
    long[::1] ip,
    long[::1] nb,
    double[::1] ws,
    double[:, ::1] t,
    int v,
    int depth,
    int target,
    int cap,
    double theta,
    int max_paths,
    char* visited,
    int* stack,
    list paths,
    int* truncated,
) except -1:
    """Returns 0 to abort the enumeration, 1 to continue."""
    cdef long e, u
    cdef int i, depth1
    if v == target:
        if len(paths) >= max_paths:
            truncated[0] = 1
            return 0
        out = []
        for i in range(depth + 1):
            out.append(stack[i])
        paths.append(tuple(out))
        return 1
    if depth == cap:
        return 1
    depth1 = depth + 1
    for e in range(ip[v], ip[v + 1]):
        u = nb[e]
        if ws[e] < theta or visited[u] or t[cap - depth1, u] < theta:
            continue
        visited[u] = 1
        stack[depth1] = <int> u
        if not _dfs(ip, nb, ws, t, <int> u, depth1, target, cap, theta,
                    max_paths, visited, stack, paths, truncated):
            visited[u] = 0
            return 0
        visited[u] = 0
    return 1


def enumerate_tied_paths(
    indptr, nbr, wts, table, int source, int target, int cap,
    double theta, int max_paths,
):
    """All simple tied paths; see _bottleneck_py.enumerate_tied_paths."""
    cdef long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef long[::1] nb = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef double[::1] ws = np.ascontiguousarray(wts, dtype=np.float64)
    cdef double[:, ::1] t = table
    cdef int n = t.shape[1]
    visited_arr = np.zeros(n, dtype=np.int8)
    stack_arr = np.zeros(cap + 1, dtype=np.int32)
    cdef char[::1] visited = visited_arr
    cdef int[::1] stack = stack_arr
    cdef int truncated = 0
    paths: list = []
    visited[source] = 1
    stack[0] = source
    _dfs(ip, nb, ws, t, source, 0, target, cap, theta, max_paths,
         &visited[0], &stack[0], paths, &truncated)
    return paths, bool(truncated)
