"""Finite simple graphs: construction, named families, products, and edge-list IO.

Vertices are always the integers 0..n-1.  Adjacency is a symmetric boolean
numpy matrix with a false diagonal (no loops, no multi-edges, undirected).
Family constructors keep a descriptor string in ``label`` so downstream
analyses can recognise how a graph was built without isomorphism testing.

Family DSL accepted by :func:`build_family`:

    K:<n>        complete graph on n >= 1 vertices
    C:<n>        cycle on n >= 3 vertices
    P:<n>        path of length n (n+1 vertices)
    KG:<n>,<k>   Kneser graph: k-subsets of an n-set, adjacent iff disjoint
    O:<n>        odd graph KG:2n-1,n-1 (n >= 2)
    petersen     KG:5,2
    diamond      4-cycle plus one chord
    dprime       C:6 plus the long chord {0,3}
    cmpl(S)      complement
    box(S,T)     box (Cartesian) product
    tensor(S,T)  categorical (tensor) product
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

MAX_VERTICES = 4096


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected loop-free graph on vertices 0..n-1."""

    n: int
    adj: np.ndarray
    label: str = ""
    note: Optional[str] = None

    def __post_init__(self):
        a = np.asarray(self.adj, dtype=bool)
        if a.shape != (self.n, self.n):
            raise ValueError(f"adjacency shape {a.shape} does not match n={self.n}")
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside supported range 0..{MAX_VERTICES}")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency matrix must have a false diagonal (loop-free)")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    def __repr__(self):
        name = self.label or "graph"
        return f"Graph({name}, n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return int(self.adj.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adj[u])

    def degree(self, u: int) -> int:
        return int(self.adj[u].sum())

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edge list, each edge once as (u, v) with u < v."""
        iu, iv = np.nonzero(np.triu(self.adj))
        return list(zip(iu.tolist(), iv.tolist()))

    def directed_edges(self) -> list[tuple[int, int]]:
        """Every edge in both orientations, sorted."""
        iu, iv = np.nonzero(self.adj)
        return list(zip(iu.tolist(), iv.tolist()))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.num_edges, "label": self.label,
                "edges": [[u, v] for u, v in self.edges()]}


def graph_from_edges(n: int, edges, label: str = "", note: Optional[str] = None) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) not allowed")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, label, note)


def adjacency_equal(g: Graph, h: Graph) -> bool:
    """Structural equality: same vertex count and same adjacency matrix."""
    return g.n == h.n and np.array_equal(g.adj, h.adj)


# ---------------------------------------------------------------------------
# Named families


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    return Graph(n, adj, f"K:{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return graph_from_edges(n, [(min(u, v), max(u, v)) for u, v in edges], f"C:{n}")


def path_graph(length: int) -> Graph:
    """Path of the given length: length+1 vertices 0..length."""
    if length < 0:
        raise ValueError("path length must be >= 0")
    edges = [(i, i + 1) for i in range(length)]
    return graph_from_edges(length + 1, edges, f"P:{length}",
                            note="vertices renumbered 0-based from 1-based convention")


def kneser_graph(n: int, k: int) -> Graph:
    """Kneser graph on the k-subsets of an n-set, adjacent iff disjoint.

    Subsets are enumerated in lexicographic order so the vertex numbering
    is reproducible.
    """
    if not (n >= k >= 1):
        raise ValueError("Kneser graph needs n >= k >= 1")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    nv = len(subsets)
    if nv > MAX_VERTICES:
        raise ValueError(f"Kneser graph K({n},{k}) has {nv} vertices, above the cap {MAX_VERTICES}")
    adj = np.zeros((nv, nv), dtype=bool)
    for i in range(nv):
        for j in range(i + 1, nv):
            if not (subsets[i] & subsets[j]):
                adj[i, j] = adj[j, i] = True
    return Graph(nv, adj, f"KG:{n},{k}", note="vertices are k-subsets in lexicographic order")


def odd_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("odd graph needs n >= 2")
    g = kneser_graph(2 * n - 1, n - 1)
    return Graph(g.n, g.adj, f"O:{n}", note=g.note)


def diamond_graph() -> Graph:
    # 4-cycle 0-1-2-3 plus the chord {1,3}
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)], "diamond",
                            note="vertices renumbered 0-based from 1-based convention")


def dprime_graph() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    return graph_from_edges(6, [(min(u, v), max(u, v)) for u, v in edges], "dprime")


def complement(g: Graph) -> Graph:
    adj = ~g.adj & ~np.eye(g.n, dtype=bool)
    return Graph(g.n, adj, f"cmpl({g.label})" if g.label else "")


def box_product(g: Graph, h: Graph) -> Graph:
    """Box (Cartesian) product; vertex (x, y) gets index x*|V(h)| + y."""
    adj = np.kron(np.eye(g.n, dtype=bool), h.adj) | np.kron(g.adj, np.eye(h.n, dtype=bool))
    label = f"box({g.label},{h.label})" if g.label and h.label else ""
    return Graph(g.n * h.n, adj, label)


def categorical_product(g: Graph, h: Graph) -> Graph:
    """Categorical (tensor) product; same vertex indexing as box_product."""
    adj = np.kron(g.adj, h.adj)
    label = f"tensor({g.label},{h.label})" if g.label and h.label else ""
    return Graph(g.n * h.n, adj, label)


# ---------------------------------------------------------------------------
# Family DSL


def _split_args(body: str) -> list[str]:
    """Split a DSL argument list on top-level commas."""
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {body!r}")
    parts.append("".join(cur))
    return parts


def _int_param(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"malformed {what} parameter {text!r}") from None


def build_family(spec: str) -> Graph:
    """Construct a graph from a family descriptor string (see module docstring)."""
    s = spec.strip()
    if not s:
        raise ValueError("empty family descriptor")
    low = s.lower()
    for name, fn in (("cmpl", complement), ("box", box_product), ("tensor", categorical_product)):
        if low.startswith(name + "(") and s.endswith(")"):
            args = _split_args(s[len(name) + 1:-1])
            if name == "cmpl":
                if len(args) != 1:
                    raise ValueError(f"cmpl takes one argument, got {len(args)}")
                return fn(build_family(args[0]))
            if len(args) != 2:
                raise ValueError(f"{name} takes two arguments, got {len(args)}")
            return fn(build_family(args[0]), build_family(args[1]))
    if low == "petersen":
        g = kneser_graph(5, 2)
        return Graph(g.n, g.adj, "petersen", note=g.note)
    if low == "diamond":
        return diamond_graph()
    if low == "dprime":
        return dprime_graph()
    if ":" in s:
        head, _, tail = s.partition(":")
        head = head.strip().upper()
        if head == "K":
            return complete_graph(_int_param(tail, "K"))
        if head == "C":
            return cycle_graph(_int_param(tail, "C"))
        if head == "P":
            return path_graph(_int_param(tail, "P"))
        if head == "O":
            return odd_graph(_int_param(tail, "O"))
        if head == "KG":
            params = tail.split(",")
            if len(params) != 2:
                raise ValueError(f"KG descriptor needs two parameters, got {tail!r}")
            return kneser_graph(_int_param(params[0], "KG"), _int_param(params[1], "KG"))
    raise ValueError(f"unrecognised family descriptor {spec!r}")


# ---------------------------------------------------------------------------
# Edge-list documents


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: optional '#' comment lines; first data line "n m"; then m lines
    "u v" with 0 <= u, v < n, u != v.  Duplicate edges are rejected.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise ValueError("empty edge-list document")
    header = data[0].split()
    if len(header) != 2:
        raise ValueError(f"malformed header {data[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"malformed header {data[0]!r}, expected integers") from None
    if n < 0 or m < 0:
        raise ValueError(f"negative counts in header {data[0]!r}")
    if len(data) - 1 != m:
        raise ValueError(f"header announces {m} edges but document has {len(data) - 1}")
    adj = np.zeros((n, n), dtype=bool)
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"malformed edge line {ln!r}") from None
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if adj[u, v]:
            raise ValueError(f"duplicate edge ({u},{v})")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, "")


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list document: sorted edges, each once as 'u v' with u < v."""
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Brute-force isomorphism (used by tests and small sanity checks)


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Exhaustive backtracking search for a graph isomorphism g -> h.

    Returns a vertex permutation p with h.adj[p[u], p[v]] == g.adj[u, v],
    or None.  Intended for small graphs (tens of vertices at most).
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    deg_g = sorted(int(d) for d in g.adj.sum(axis=1))
    deg_h = sorted(int(d) for d in h.adj.sum(axis=1))
    if deg_g != deg_h:
        return None
    n = g.n
    assign: list[int] = []
    used = [False] * n

    def extend(u: int) -> bool:
        if u == n:
            return True
        du = g.degree(u)
        for cand in range(n):
            if used[cand] or h.degree(cand) != du:
                continue
            ok = True
            for v in range(u):
                if g.adj[u, v] != h.adj[cand, assign[v]]:
                    ok = False
                    break
            if ok:
                assign.append(cand)
                used[cand] = True
                if extend(u + 1):
                    return True
                used[cand] = False
                assign.pop()
        return False

    return assign[:] if extend(0) else None
