"""Walk-existence tables, distances, girth variants, and parity-based decisions.

Walk existence is tracked as booleans (not counts) because every criterion in
this package only ever asks "is there a walk of length l" -- counts overflow
quickly and are never needed.  The table is filled by boolean powers of the
adjacency matrix.  Girth quantities are computed by entirely separate BFS
routines so that table-vs-path identities can be cross-checked for real.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .graphs import Graph

Length = Union[int, float]  # int, or math.inf for "no such walk/cycle"

AUTO = "auto"


@dataclass(frozen=True, eq=False)
class WalkTable:
    """exists[l, u, v] == there is a walk of length l from u to v, 0 <= l <= lmax."""

    graph: Graph
    lmax: int
    exists: np.ndarray

    def has_walk(self, length: int, u: int, v: int) -> bool:
        if not (0 <= length <= self.lmax):
            raise ValueError(f"walk length {length} outside table range 0..{self.lmax}")
        return bool(self.exists[length, u, v])


def walk_table(g: Graph, lmax: Union[int, str] = AUTO) -> WalkTable:
    """Boolean walk-existence table up to lmax (default 2n+2, enough for any
    parity-reachability question to stabilise)."""
    if lmax == AUTO:
        lmax = 2 * g.n + 2
    if not isinstance(lmax, int) or lmax < 0:
        raise ValueError(f"lmax must be a nonnegative integer or 'auto', got {lmax!r}")
    n = g.n
    adj8 = g.adj.astype(np.uint8)
    exists = np.zeros((lmax + 1, n, n), dtype=bool)
    exists[0] = np.eye(n, dtype=bool)
    cur = np.eye(n, dtype=np.uint8)
    for ell in range(1, lmax + 1):
        cur = (cur @ adj8 > 0).astype(np.uint8)
        exists[ell] = cur.astype(bool)
    out = WalkTable(g, lmax, exists)
    out.exists.setflags(write=False)
    return out


def _bfs_distances(g: Graph, source: int) -> list[Length]:
    dist: list[Length] = [math.inf] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in g.neighbors(u):
            v = int(v)
            if dist[v] == math.inf:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def distance(t: WalkTable, u: int, v: int) -> Length:
    """Length of the shortest walk u -> v; math.inf if v is unreachable.

    Raises if the pair is reachable but only beyond the table's lmax, since
    reporting infinity there would be a lie.
    """
    col = t.exists[:, u, v]
    hits = np.flatnonzero(col)
    if hits.size:
        return int(hits[0])
    if _bfs_distances(t.graph, u)[v] == math.inf:
        return math.inf
    raise ValueError(f"pair ({u},{v}) reachable but beyond lmax={t.lmax}; rebuild with larger lmax")


@dataclass(frozen=True)
class GirthReport:
    girth: Length
    odd_girth: Length
    odd_walk_girth: Length
    diameter: Length


def _girth_bfs(g: Graph) -> Length:
    """Shortest cycle length via BFS from every root.

    For each root, every non-tree edge (u, v) with both endpoints reached
    closes a walk of length dist[u]+dist[v]+1 through the root; the minimum
    over all roots and edges is the girth.
    """
    best: Length = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                v = int(v)
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
        for u, v in g.edges():
            if dist[u] == -1 or dist[v] == -1:
                continue
            if parent[u] == v or parent[v] == u:
                continue
            cand = dist[u] + dist[v] + 1
            if cand < best:
                best = cand
    return best


def _shortest_odd_closed_walk_witness(g: Graph) -> Optional[list[int]]:
    """Shortest odd closed walk, found by BFS on the bipartite double cover.

    Returns the walk as a vertex sequence v0, ..., vL with v0 == vL and L odd,
    or None when the graph is bipartite.  Independent of any walk table.
    """
    best_len: Length = math.inf
    best_walk: Optional[list[int]] = None
    n = g.n
    for s in range(n):
        # states (v, parity); search min odd-parity return to s
        dist = {(s, 0): 0}
        pred: dict[tuple[int, int], tuple[int, int]] = {}
        q = deque([(s, 0)])
        target = (s, 1)
        while q:
            state = q.popleft()
            if state == target:
                break
            u, par = state
            for w in g.neighbors(u):
                nxt = (int(w), par ^ 1)
                if nxt not in dist:
                    dist[nxt] = dist[state] + 1
                    pred[nxt] = state
                    q.append(nxt)
        if target in dist and dist[target] < best_len:
            best_len = dist[target]
            walk = [target]
            while walk[-1] != (s, 0):
                walk.append(pred[walk[-1]])
            best_walk = [v for v, _ in reversed(walk)]
    return best_walk


def _extract_odd_cycle(g: Graph, walk: list[int]) -> list[int]:
    """Split an odd closed walk at repeated vertices until a simple odd cycle
    remains.  The result is a cyclic path whose length is at most the walk's."""
    cur = walk
    while True:
        length = len(cur) - 1
        interior = cur[:-1]
        seen: dict[int, int] = {}
        split = None
        for idx, v in enumerate(interior):
            if v in seen:
                split = (seen[v], idx)
                break
            seen[v] = idx
        if split is None:
            assert length % 2 == 1 and length >= 3
            return cur
        i, j = split
        piece_a = cur[i:j + 1]           # closed walk of length j-i
        piece_b = cur[:i + 1] + cur[j + 1:]  # closed walk of length L-(j-i)
        cur = piece_a if (j - i) % 2 == 1 else piece_b
        # re-root so the repeated endpoint is explicit
        if cur[0] != cur[-1]:
            raise AssertionError("walk splitting produced a non-closed piece")


def girths(g: Graph) -> GirthReport:
    """Girth, odd girth, odd walk girth, and diameter.

    odd_girth comes from double-cover BFS plus explicit extraction of a simple
    odd cycle witness; odd_walk_girth comes from the walk-table diagonal.  The
    two are computed by disjoint code paths so their equality is a genuine
    cross-check rather than a tautology.
    """
    girth = _girth_bfs(g)

    witness = _shortest_odd_closed_walk_witness(g)
    if witness is None:
        odd_girth: Length = math.inf
    else:
        wlen = len(witness) - 1
        cyc = _extract_odd_cycle(g, witness)
        clen = len(cyc) - 1
        # a cycle is itself a closed walk, so the extracted one cannot be shorter
        assert clen == wlen, f"odd cycle extraction produced length {clen} != {wlen}"
        for a, b in zip(cyc, cyc[1:]):
            assert g.has_edge(a, b)
        odd_girth = wlen

    t = walk_table(g, 2 * g.n + 2)
    odd_walk_girth: Length = math.inf
    for ell in range(1, t.lmax + 1, 2):
        if t.exists[ell].diagonal().any():
            odd_walk_girth = ell
            break

    diameter: Length = 0 if g.n else math.inf
    for u in range(g.n):
        worst = max(_bfs_distances(g, u))
        if worst == math.inf:
            diameter = math.inf
            break
        diameter = max(diameter, worst)
    return GirthReport(girth, odd_girth, odd_walk_girth, diameter)


def is_bipartite(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """2-colorability; on success also returns a colour per vertex (0/1)."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                v = int(v)
                if colour[v] == -1:
                    colour[v] = colour[u] ^ 1
                    q.append(v)
                elif colour[v] == colour[u]:
                    return False, None
    return True, colour


def is_oracularisable(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int, int]]]:
    """True iff the graph has no cyclic path of length 4.

    On failure the lexicographically first cycle (a, b, c, d, a) with four
    distinct vertices is returned as a witness.
    """
    for a in range(g.n):
        for b in g.neighbors(a):
            b = int(b)
            for c in g.neighbors(b):
                c = int(c)
                if c == a:
                    continue
                for d in g.neighbors(c):
                    d = int(d)
                    if d != a and d != b and g.has_edge(d, a):
                        return False, (a, b, c, d, a)
    return True, None


def decide_bipartite_target(h: Graph, g: Graph) -> bool:
    """Decide existence of a quantum homomorphism h -> g for bipartite g.

    For bipartite targets the quantum and classical questions coincide, so
    the answer is purely classical: an edgeless target admits a morphism iff
    h is edgeless, and otherwise the answer is bipartiteness of h.
    """
    bip, _ = is_bipartite(g)
    if not bip:
        raise ValueError("target graph is not bipartite")
    if g.num_edges == 0:
        return h.num_edges == 0
    return is_bipartite(h)[0]
