"""Pure-Python bottleneck-path kernels.

Reference implementation of the hot loops behind path intensities,
betweenness, and closeness. The compiled twin in _bottleneck_cy.pyx mirrors
these functions statement for statement; both only compare and copy edge
values (never combine them arithmetically), so results are bit-identical
across backends.

The graph enters as a CSR-style forward adjacency (indptr, neighbors,
weights) with every neighbor list presorted by the caller's tie-break order.
Weights are the crisp rank values of the edges (centre of gravity). A
"bottleneck" of a path is the minimum edge weight along it; kernels search
for simple paths that maximise the bottleneck within a step cap.

The bottleneck table T for a target t holds T[r][v] = best achievable
bottleneck over walks from v to t using at most r edges (+inf for v == t,
-inf when unreachable). Because dropping a cycle from a walk never lowers
its bottleneck, the same table is exact for simple paths, and it doubles as
an admissible pruning bound for the enumeration DFS.
"""

from __future__ import annotations

NEG_INF = float("-inf")
POS_INF = float("inf")


def _as_lists(indptr, nbr, wts):
    # numpy scalars are slow in tight Python loops; tolist() yields builtins
    def plain(a):
        return a.tolist() if hasattr(a, "tolist") else list(a)

    return plain(indptr), plain(nbr), plain(wts)


def _n_of(table) -> int:
    return len(table[0])


def bottleneck_table(indptr, nbr, wts, n: int, target: int, cap: int):
    """Best-bottleneck-to-target table, rows r = 0..cap."""
    indptr, nbr, wts = _as_lists(indptr, nbr, wts)
    prev = [NEG_INF] * n
    prev[target] = POS_INF
    table = [prev]
    for _ in range(cap):
        cur = prev[:]
        for v in range(n):
            best = cur[v]
            for e in range(indptr[v], indptr[v + 1]):
                c = prev[nbr[e]]
                w = wts[e]
                if w < c:
                    c = w
                if c > best:
                    best = c
            cur[v] = best
        table.append(cur)
        prev = cur
    return table


def shortest_lex_path(indptr, nbr, wts, table, source: int, target: int, cap: int):
    """The optimal-bottleneck path chosen by the deterministic tie-break.

    Among simple source->target paths within cap steps achieving the best
    bottleneck, returns the shortest one, and among those the first in the
    neighbor-list order (the caller presorts neighbor lists, so this is the
    lexicographically smallest node sequence). Returns None when no path
    exists. `table` must come from bottleneck_table for the same target.
    """
    opt = table[cap][source]
    if opt == NEG_INF:
        return None
    indptr, nbr, wts = _as_lists(indptr, nbr, wts)
    steps = 0
    while table[steps][source] < opt:
        steps += 1
    path = [source]
    v = source
    for r in range(steps, 0, -1):
        row = table[r - 1]
        for e in range(indptr[v], indptr[v + 1]):
            u = nbr[e]
            if wts[e] >= opt and row[u] >= opt:
                v = u
                path.append(u)
                break
        else:  # unreachable if the table matches the adjacency
            raise AssertionError("bottleneck table inconsistent with adjacency")
    return path


def enumerate_tied_paths(
    indptr,
    nbr,
    wts,
    table,
    source: int,
    target: int,
    cap: int,
    theta: float,
    max_paths: int,
):
    """All simple source->target paths with bottleneck >= theta, capped.

    Requires source != target and a `table` built for the target. Returns
    (paths, truncated): node-index tuples in DFS order following the
    presorted neighbor lists, and a flag set when a (max_paths + 1)-th path
    was found and enumeration stopped.
    """
    indptr, nbr, wts = _as_lists(indptr, nbr, wts)
    paths: list[tuple[int, ...]] = []
    visited = [False] * _n_of(table)
    stack = [source]
    visited[source] = True
    truncated = False

    def dfs(v: int, depth: int) -> bool:
        nonlocal truncated
        if v == target:
            if len(paths) >= max_paths:
                truncated = True
                return False
            paths.append(tuple(stack))
            return True
        if depth == cap:
            return True
        bound = table[cap - depth - 1]
        for e in range(indptr[v], indptr[v + 1]):
            u = nbr[e]
            if wts[e] < theta or visited[u] or bound[u] < theta:
                continue
            visited[u] = True
            stack.append(u)
            alive = dfs(u, depth + 1)
            stack.pop()
            visited[u] = False
            if not alive:
                return False
        return True

    dfs(source, 0)
    return paths, truncated
