"""Constructors for the tree and clique-arrangement families under study,
graph products, line graphs, and exhaustive free-tree enumeration.

Family descriptors use a compact text form, e.g. "path:4", "tkst:1,2,3",
"diam4:3;2,2,1", "windmill:2,3", "wprime:3,3", "book:3".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, edge_list, from_edge_list, is_tree

__all__ = [
    "FamilyDescriptor",
    "parse_family",
    "format_family",
    "build",
    "path_graph",
    "star_graph",
    "complete_graph",
    "tkst_tree",
    "diam4_tree",
    "windmill_graph",
    "wprime_graph",
    "book_graph",
    "line_graph",
    "kronecker",
    "cartesian",
    "beta_m",
    "enumerate_free_trees",
    "tree_canonical_form",
]

_KINDS = ("path", "star", "complete", "tkst", "diam4", "windmill", "wprime", "book")
_ARITY = {"path": 1, "star": 1, "complete": 1, "book": 1, "windmill": 2, "wprime": 2, "tkst": 3}


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "diam4":
            # k followed by its k branch loads
            if len(self.params) < 2 or len(self.params) != self.params[0] + 1:
                raise ValueError("diam4 takes params (k, x1, .., xk)")
        elif len(self.params) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s)")


def parse_family(text: str) -> FamilyDescriptor:
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if not sep or not rest:
        raise ValueError(f"bad family descriptor {text!r}")
    if kind == "diam4":
        head, sep2, tail = rest.partition(";")
        if not sep2:
            raise ValueError("diam4 needs 'k;x1,..,xk'")
        params = (int(head), *(int(x) for x in tail.split(",")))
    else:
        params = tuple(int(x) for x in rest.split(","))
    return FamilyDescriptor(kind, params)


def format_family(desc: FamilyDescriptor) -> str:
    if desc.kind == "diam4":
        k, xs = desc.params[0], desc.params[1:]
        return f"diam4:{k};{','.join(str(x) for x in xs)}"
    return f"{desc.kind}:{','.join(str(p) for p in desc.params)}"


def build(desc: FamilyDescriptor) -> Graph:
    kind, p = desc.kind, desc.params
    if kind == "path":
        (n,) = p
        return path_graph(n)
    if kind == "star":
        (n,) = p
        return star_graph(n)
    if kind == "complete":
        (n,) = p
        return complete_graph(n)
    if kind == "tkst":
        k, s, t = p
        return tkst_tree(k, s, t)
    if kind == "diam4":
        return diam4_tree(p[0], p[1:])
    if kind == "windmill":
        eta, mu = p
        return windmill_graph(eta, mu)
    if kind == "wprime":
        eta, mu = p
        return wprime_graph(eta, mu)
    if kind == "book":
        (k,) = p
        return book_graph(k)
    raise ValueError(f"unknown family kind {kind!r}")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices, K_{1,n-1}, center 0."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    if n == 1:
        adj = np.zeros((1, 1), dtype=bool)
    return Graph(n=n, adj=adj)


def tkst_tree(k: int, s: int, t: int) -> Graph:
    """Path on k+1 vertices 0..k with s pendants at 0 and t pendants at k."""
    if k < 1 or s < 0 or t < 0:
        raise ValueError("tkst needs k >= 1, s >= 0, t >= 0")
    edges = [(i, i + 1) for i in range(k)]
    edges += [(0, k + 1 + i) for i in range(s)]
    edges += [(k, k + 1 + s + i) for i in range(t)]
    return from_edge_list(k + 1 + s + t, edges)


def diam4_tree(k: int, xs) -> Graph:
    """Root 0 joined to branch vertices 1..k; branch i carries xs[i-1]
    pendants. Needs the two largest branch loads positive (diameter 4)."""
    xs = tuple(int(x) for x in xs)
    if k < 2 or len(xs) != k:
        raise ValueError("diam4 needs k >= 2 and one x per branch")
    if any(x < 0 for x in xs):
        raise ValueError("branch loads must be >= 0")
    if sorted(xs, reverse=True)[1] < 1:
        raise ValueError("diam4 needs at least two branches with pendants")
    edges = [(0, i) for i in range(1, k + 1)]
    nxt = k + 1
    for i, x in enumerate(xs, start=1):
        for _ in range(x):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def windmill_graph(eta: int, mu: int) -> Graph:
    """eta copies of K_mu all sharing the hub vertex 0."""
    if eta < 2 or mu < 3:
        raise ValueError("windmill needs eta >= 2, mu >= 3")
    edges = []
    for j in range(eta):
        blade = [0] + [1 + j * (mu - 1) + i for i in range(mu - 1)]
        edges += [(u, v) for a, u in enumerate(blade) for v in blade[a + 1:]]
    return from_edge_list(1 + eta * (mu - 1), edges)


def wprime_graph(eta: int, mu: int) -> Graph:
    """K_eta on 0..eta-1 with a K_mu blade glued at each core vertex."""
    if eta < 2 or mu < 2:
        raise ValueError("wprime needs eta >= 2, mu >= 2")
    edges = [(u, v) for u in range(eta) for v in range(u + 1, eta)]
    nxt = eta
    for c in range(eta):
        blade = [c] + [nxt + i for i in range(mu - 1)]
        nxt += mu - 1
        edges += [(u, v) for a, u in enumerate(blade) for v in blade[a + 1:]]
    return from_edge_list(eta * mu, edges)


def book_graph(k: int) -> Graph:
    """K_{1,k} box K_2: k triangular pages sharing a spine edge, each page
    closed into a quadrilateral. 2k+2 vertices, 3k+1 edges."""
    if k < 1:
        raise ValueError("book needs k >= 1")
    return cartesian(star_graph(k + 1), complete_graph(2))


# ---- products and line graph ----

def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph with vertices ordered by the sorted edge list of g.

    Returns (L(g), edge_map) where edge_map[i] is the edge of g that became
    vertex i.
    """
    emap = tuple(edge_list(g))
    m = len(emap)
    if m == 0:
        raise ValueError("line graph needs at least one edge")
    inc = np.zeros((g.n, m), dtype=np.int64)
    for i, (u, v) in enumerate(emap):
        inc[u, i] = inc[v, i] = 1
    shared = inc.T @ inc  # off-diagonal entry = number of shared endpoints
    labels = tuple(f"{u}-{v}" for u, v in emap)
    return Graph(n=m, adj=(shared == 1), labels=labels), emap


def kronecker(g: Graph, h: Graph) -> Graph:
    """Tensor (categorical) product; vertex (u, x) is u * h.n + x."""
    return Graph(n=g.n * h.n, adj=np.kron(g.adj, h.adj))


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, x) is u * h.n + x."""
    eg = np.eye(g.n, dtype=bool)
    eh = np.eye(h.n, dtype=bool)
    adj = np.kron(g.adj, eh) | np.kron(eg, h.adj)
    return Graph(n=g.n * h.n, adj=adj)


def beta_m(tree: Graph, m: int) -> Graph:
    """Kronecker product of the tree's line graph with K_m."""
    if not is_tree(tree):
        raise ValueError("beta_m needs a tree")
    if m < 2:
        raise ValueError("beta_m needs m >= 2")
    lg, _ = line_graph(tree)
    return kronecker(lg, complete_graph(m))


# ---- free tree enumeration ----

def enumerate_free_trees(n: int) -> list[Graph]:
    """All unlabeled trees on n vertices, one representative each.

    Rooted trees are generated by the level-sequence successor rule and
    reduced to free trees by their center-rooted canonical encoding.
    Deterministic: output is sorted by that encoding.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return [from_edge_list(1, [])]
    reps: dict[str, Graph] = {}
    for seq in _rooted_level_sequences(n):
        g = _tree_from_levels(seq)
        key = tree_canonical_form(g)
        if key not in reps:
            reps[key] = g
    return [reps[k] for k in sorted(reps)]


def _rooted_level_sequences(n: int):
    """Canonical level sequences of all rooted trees on n vertices, in
    decreasing lexicographic order (path first, star last)."""
    seq = list(range(n))
    while True:
        yield seq
        p = n - 1
        while p > 0 and seq[p] < 2:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        seq = seq[:p]
        while len(seq) < n:
            seq.append(seq[-(p - q)])


def _tree_from_levels(seq) -> Graph:
    n = len(seq)
    edges = []
    stack = [0]  # ancestors; vertex at depth d sits at stack[d]
    for i in range(1, n):
        del stack[seq[i]:]
        edges.append((stack[-1], i))
        stack.append(i)
    return from_edge_list(n, edges)


def tree_canonical_form(tree: Graph) -> str:
    """Canonical encoding of an unlabeled tree: rooted encoding with sorted
    child encodings, rooted at the center (minimum over both centers when
    the tree is bicentral). Equal strings iff isomorphic."""
    if not is_tree(tree):
        raise ValueError("canonical form defined for trees")
    return min(_ahu_encode(tree, c) for c in _centers(tree))


def _centers(tree: Graph) -> list[int]:
    n = tree.n
    if n <= 2:
        return list(range(n))
    deg = tree.adj.sum(axis=1).astype(np.int64)
    alive = np.ones(n, dtype=bool)
    remaining = n
    layer = np.flatnonzero(deg == 1).tolist()
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
        remaining -= len(layer)
        for v in layer:
            for w in np.flatnonzero(tree.adj[v]):
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(int(w))
        layer = nxt
    return sorted(np.flatnonzero(alive).tolist())


def _ahu_encode(tree: Graph, root: int) -> str:
    # iterative post-order; children sorted by encoding
    enc: dict[int, str] = {}
    order = []
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in np.flatnonzero(tree.adj[v]):
            w = int(w)
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    for v in reversed(order):
        kids = sorted(enc[w] for w in np.flatnonzero(tree.adj[v]) if int(w) != parent[v])
        enc[v] = "(" + "".join(kids) + ")"
    return enc[root]
