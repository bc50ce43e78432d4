"""Independent reference implementations the tests compare against.

Everything here deliberately avoids the package's own algorithms: trees
come from Prufer sequences, line graphs from the textbook definition,
blocks from a recursive lowpoint DFS, and component counts from a
union-find.
"""

from __future__ import annotations

import heapq
import sys

import numpy as np

from spectree.graphs import Graph, from_edge_list


def prufer_to_tree(n: int, seq) -> Graph:
    if n < 2:
        raise ValueError("need n >= 2")
    seq = [int(x) for x in seq]
    assert len(seq) == n - 2
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [i for i in range(n) if deg[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return from_edge_list(n, edges)


def random_prufer_tree(rng: np.random.Generator, n: int) -> Graph:
    if n == 2:
        return prufer_to_tree(2, [])
    return prufer_to_tree(n, rng.integers(0, n, size=n - 2))


def line_graph_oracle(g: Graph) -> Graph:
    """Line graph straight from the definition, with the same vertex order
    convention (sorted endpoint pairs) as the package."""
    edges = sorted(
        (min(u, v), max(u, v))
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.adj[u, v]
    )
    le = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                le.append((i, j))
    return from_edge_list(max(len(edges), 1), le) if edges else from_edge_list(1, [])


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


def component_count(adj: np.ndarray) -> int:
    n = adj.shape[0]
    uf = _UnionFind(n)
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u, v]:
                uf.union(u, v)
    return len({uf.find(x) for x in range(n)})


def brute_cut_vertices(g: Graph) -> set[int]:
    base = component_count(g.adj)
    cuts = set()
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        if not keep:
            continue
        if component_count(g.adj[np.ix_(keep, keep)]) > base:
            cuts.add(v)
    return cuts


def recursive_blocks(g: Graph) -> set[frozenset]:
    """Blocks of a connected graph via the classic recursive formulation."""
    sys.setrecursionlimit(10000)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    counter = [0]
    stack: list[tuple[int, int]] = []
    blocks: list[frozenset] = []

    def dfs(u: int) -> None:
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for v in np.flatnonzero(g.adj[u]):
            v = int(v)
            if disc[v] == -1:
                parent[v] = u
                stack.append((u, v))
                dfs(v)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (u, v):
                            break
                    blocks.append(frozenset(comp))
            elif v != parent[u] and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    dfs(0)
    return set(blocks)


def kron_adjacency_oracle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product adjacency from the definition: (u,i)~(v,j) iff u~v
    and i~j, vertex (u,i) at index u*len(b)+i."""
    na, nb = a.shape[0], b.shape[0]
    out = np.zeros((na * nb, na * nb), dtype=bool)
    for u in range(na):
        for v in range(na):
            for i in range(nb):
                for j in range(nb):
                    if a[u, v] and b[i, j]:
                        out[u * nb + i, v * nb + j] = True
    return out


def cartesian_adjacency_oracle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = a.shape[0], b.shape[0]
    out = np.zeros((na * nb, na * nb), dtype=bool)
    for u in range(na):
        for v in range(na):
            for i in range(nb):
                for j in range(nb):
                    if (u == v and b[i, j]) or (i == j and a[u, v]):
                        out[u * nb + i, v * nb + j] = True
    return out
