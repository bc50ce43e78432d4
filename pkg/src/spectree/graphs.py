"""Simple undirected graphs on vertices 0..n-1, with block (biconnected
component) machinery used by the product-connectivity checks.

Graphs are immutable: an adjacency matrix plus optional vertex labels.
All constructors validate; everything downstream assumes a valid Graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "BlockDecomposition",
    "from_edge_list",
    "edge_list",
    "degrees",
    "min_degree",
    "is_connected",
    "is_bipartite",
    "is_tree",
    "is_star",
    "is_complete",
    "block_decomposition",
    "is_restricted",
    "blocks_all_complete",
    "block_structure_is_star",
    "graph_to_dict",
    "graph_from_dict",
    "load_graph",
    "save_graph",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    adj is a symmetric boolean (n, n) matrix with a zero diagonal; it is
    marked read-only at construction.
    """

    n: int
    adj: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        self.adj.flags.writeable = False

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def from_edge_list(n: int, edges, labels=None) -> Graph:
    """Build a Graph from an iterable of (u, v) pairs.

    Duplicate edges (either orientation) collapse; loops are rejected.
    """
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u, v] = adj[v, u] = True
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
    return Graph(n=n, adj=adj, labels=labels)


def edge_list(g: Graph) -> list[tuple[int, int]]:
    """Edges as sorted (u, v) pairs with u < v, lexicographic order."""
    iu, iv = np.nonzero(np.triu(g.adj))
    return list(zip(iu.tolist(), iv.tolist()))


def degrees(g: Graph) -> np.ndarray:
    return g.adj.sum(axis=1).astype(np.int64)


def min_degree(g: Graph) -> int:
    return int(degrees(g).min())


def _neighbors(g: Graph):
    return [np.flatnonzero(g.adj[v]).tolist() for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = g.adj[frontier].any(axis=0) & ~seen
        frontier = np.flatnonzero(nxt).tolist()
        seen |= nxt
    return bool(seen.all())


def is_bipartite(g: Graph) -> bool:
    color = np.full(g.n, -1, dtype=np.int8)
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w in np.flatnonzero(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(int(w))
                elif color[w] == color[v]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def is_star(g: Graph) -> bool:
    """K_{1,k} for some k >= 1 (so P_2 counts)."""
    return g.n >= 2 and is_tree(g) and int(degrees(g).max()) == g.n - 1


def is_complete(g: Graph) -> bool:
    return bool((g.adj | np.eye(g.n, dtype=bool)).all())


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges as K_2), cut vertices,
    and the block structure tree obtained by replacing each block with an
    edge between its cut vertices (fresh leaf nodes pad blocks with fewer
    than two cut vertices). block_tree is None when some block has three or
    more cut vertices.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    block_tree: Graph | None


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components, iteratively. Requires g
    connected."""
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    if n == 1:
        return BlockDecomposition(((0,),), (), _block_tree([(0,)], set()))

    nbrs = _neighbors(g)
    disc = [-1] * n
    low = [0] * n
    counter = 0
    edge_stack: list[tuple[int, int]] = []
    block_edge_sets: list[list[tuple[int, int]]] = []

    # explicit stack frames: (vertex, parent, iterator index)
    ptr = [0] * n
    parent = [-1] * n
    disc[0] = low[0] = counter
    counter += 1
    stack = [0]
    while stack:
        v = stack[-1]
        if ptr[v] < len(nbrs[v]):
            w = nbrs[v][ptr[v]]
            ptr[v] += 1
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append(w)
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if not stack:
                break
            u = stack[-1]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                # (u, v) closes a block
                block = []
                while edge_stack:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == (u, v):
                        break
                block_edge_sets.append(block)

    blocks = []
    for es in block_edge_sets:
        verts = sorted({x for e in es for x in e})
        blocks.append(tuple(verts))
    membership: dict[int, int] = {}
    for b in blocks:
        for v in b:
            membership[v] = membership.get(v, 0) + 1
    cut = tuple(sorted(v for v, c in membership.items() if c >= 2))
    return BlockDecomposition(tuple(blocks), cut, _block_tree(blocks, set(cut)))


def _block_tree(blocks, cut_set) -> Graph | None:
    node_of = {v: i for i, v in enumerate(sorted(cut_set))}
    labels = [f"cut:{v}" for v in sorted(cut_set)]
    edges = []
    nid = len(node_of)
    for b in blocks:
        ends = [node_of[v] for v in b if v in cut_set]
        if len(ends) > 2:
            return None
        while len(ends) < 2:
            ends.append(nid)
            labels.append(f"end:{nid}")
            nid += 1
        edges.append((ends[0], ends[1]))
    return from_edge_list(nid, edges, labels=labels)


def is_restricted(g: Graph) -> bool:
    """True iff every block contains at most two cut vertices."""
    dec = block_decomposition(g)
    cut = set(dec.cut_vertices)
    return all(sum(v in cut for v in b) <= 2 for b in dec.blocks)


def blocks_all_complete(g: Graph) -> bool:
    dec = block_decomposition(g)
    eye_ok = True
    for b in dec.blocks:
        sub = g.adj[np.ix_(b, b)]
        if not (sub | np.eye(len(b), dtype=bool)).all():
            eye_ok = False
            break
    return eye_ok


def block_structure_is_star(g: Graph) -> bool:
    tree = block_decomposition(g).block_tree
    return tree is not None and is_star(tree)


# ---- JSON ----

def graph_to_dict(g: Graph) -> dict:
    d = {"n": g.n, "edges": [[u, v] for u, v in edge_list(g)]}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    return d


def graph_from_dict(d: dict) -> Graph:
    return from_edge_list(int(d["n"]), d["edges"], labels=d.get("labels"))


def load_graph(path) -> Graph:
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_dict(g), fh)
        fh.write("\n")
