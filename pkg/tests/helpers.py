"""Independent oracles and graph builders shared across test modules.

The path oracles are deliberately naive: recursive enumeration over
dict-of-dict adjacency, no step tables, no pruning, and no code shared with
the package. Slow but obviously correct, which is the point.
"""

from __future__ import annotations

import random

from fuzzysna import TFN, FuzzyDigraph


def oracle_simple_paths(adj, source, target, max_steps):
    """All simple source->target paths with at most max_steps edges.

    adj is {u: {v: weight}}. Returns [(path tuple, bottleneck weight)].
    """
    results = []

    def walk(node, path, bottleneck):
        if node == target:
            results.append((tuple(path), bottleneck))
            return
        if len(path) - 1 >= max_steps:
            return
        for nxt, w in adj.get(node, {}).items():
            if nxt in path:
                continue
            path.append(nxt)
            walk(nxt, path, w if bottleneck is None or w < bottleneck else bottleneck)
            path.pop()

    if source == target:
        raise ValueError("oracle expects distinct endpoints")
    walk(source, [source], None)
    return results


def oracle_best_paths(adj, source, target, max_steps, tie_eps=0.0):
    """(optimal bottleneck, tied paths sorted by length then labels).

    Returns (None, []) when the target is unreachable within the cap. A path
    is tied when its bottleneck is >= optimum - tie_eps.
    """
    found = oracle_simple_paths(adj, source, target, max_steps)
    if not found:
        return None, []
    opt = max(bn for _, bn in found)
    tied = sorted(
        (p for p, bn in found if bn >= opt - tie_eps),
        key=lambda p: (len(p), p),
    )
    return opt, tied


def oracle_betweenness(adj, nodes, max_steps, tie_eps):
    """Enumerate, filter optimal, count interior crossings."""
    acc = dict.fromkeys(nodes, 0.0)
    for s in nodes:
        for t in nodes:
            if s == t:
                continue
            _, tied = oracle_best_paths(adj, s, t, max_steps, tie_eps)
            if not tied:
                continue
            for v in nodes:
                crossing = sum(1 for p in tied if v in p[1:-1])
                if crossing:
                    acc[v] += crossing / len(tied)
    return acc


def cog_adjacency(g: FuzzyDigraph):
    """Oracle adjacency of a graph's defuzzified edge weights."""
    adj = {u: {} for u in g.nodes}
    for u, v, t in g.edges():
        adj[u][v] = t.cog()
    return adj


def random_graph_case(seed, n=None, density=0.5, scale_max=1.0, vagueness=0.5):
    """Seeded random graph plus the oracle adjacency of its CoG weights."""
    rng = random.Random(seed)
    if n is None:
        n = rng.randint(2, 8)
    labels = [f"n{i}" for i in range(n)]
    edges = {}
    for u in labels:
        for v in labels:
            if u == v or rng.random() >= density:
                continue
            mode = rng.uniform(0.0, scale_max)
            left = max(0.0, mode - rng.uniform(0.0, vagueness * scale_max))
            right = min(scale_max, mode + rng.uniform(0.0, vagueness * scale_max))
            edges[(u, v)] = TFN(left, mode, right)
    g = FuzzyDigraph(labels, edges, scale_max=scale_max)
    return g, cog_adjacency(g)
