"""Commutativity-gadget candidates: checks, constructions, refutations, splicing.

A gadget candidate is a graph with two distinguished vertices, aimed at a
target graph.  Two machine-checkable analyses are available:

  * property (i), classically: for every pair (a, b) of target vertices,
    search for a classical homomorphism pinning the distinguished vertices to
    a and b.  A full table establishes property (i) with classical witnesses
    (which also covers the oracular variant).
  * walk obstructions: a walk length realisable between the distinguished
    vertices but not between some target pair refutes the candidate outright.

Property (ii) -- commutation in every quantum morphism -- is never claimed by
this tool except negatively, via an explicit noncommuting representation, or
by recorded status for families established elsewhere; the status enum keeps
that distinction explicit.

The box-product disproof pipeline refutes every candidate distinguished pair
of (odd cycle) box (path) as a gadget for the odd cycle: pairs too close are
killed by the distance bound, and all others by a verified dimension-2
representation with a noncommuting witness at the distinguished pair.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .graphs import (Graph, adjacency_equal, box_product, categorical_product, complement,
                     complete_graph, cycle_graph, graph_from_edges, path_graph)
from .walks import distance, walk_table
from .endo import enumerate_homomorphisms
from .qrep import (VerificationFailure, commutator_norm, lift_box_rep,
                   path_to_cycle_rep, verify_rep)

STATUS_CANDIDATE = "candidate"
STATUS_PROVEN_ORACULAR = "proven_oracular"
STATUS_REFUTED = "refuted"


@dataclass(frozen=True, eq=False)
class GadgetCandidate:
    gadget: Graph
    x: int
    y: int
    target: Graph
    status: str = STATUS_CANDIDATE
    provenance: str = ""

    def __post_init__(self):
        if not (0 <= self.x < self.gadget.n and 0 <= self.y < self.gadget.n):
            raise ValueError("distinguished vertices out of range")
        if self.x == self.y:
            raise ValueError("distinguished vertices must differ")
        if self.status not in (STATUS_CANDIDATE, STATUS_PROVEN_ORACULAR, STATUS_REFUTED):
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        return {"gadget": self.gadget.to_json(), "x": self.x, "y": self.y,
                "target": self.target.to_json(), "status": self.status,
                "provenance": self.provenance}


# ---------------------------------------------------------------------------
# Property (i), classically


@dataclass(frozen=True)
class PropertyITable:
    complete: bool
    witnesses: dict[tuple[int, int], Optional[tuple[int, ...]]]

    def to_json(self) -> dict:
        return {"complete": self.complete,
                "entries": {f"{a},{b}": (list(w) if w is not None else None)
                            for (a, b), w in sorted(self.witnesses.items())}}


def check_property_i_classical(c: GadgetCandidate) -> PropertyITable:
    """Pinned homomorphism search for every target pair (a, b).

    A complete table shows property (i) holds with classical witnesses; a
    miss only shows no *classical* witness exists for that pair, which is
    inconclusive for quantum witnesses.
    """
    witnesses: dict[tuple[int, int], Optional[tuple[int, ...]]] = {}
    complete = True
    for a in range(c.target.n):
        for b in range(c.target.n):
            found = enumerate_homomorphisms(c.gadget, c.target,
                                            pins={c.x: a, c.y: b}, limit=1)
            witnesses[(a, b)] = found[0] if found else None
            if not found:
                complete = False
    return PropertyITable(complete, witnesses)


# ---------------------------------------------------------------------------
# Walk obstructions


@dataclass(frozen=True)
class WalkObstruction:
    length: int
    pair: tuple[int, int]

    def to_json(self) -> dict:
        return {"length": self.length, "pair": list(self.pair)}


def default_obstruction_lmax(c: GadgetCandidate) -> int:
    return 2 * (c.gadget.n + c.target.n)


def walk_obstruction(c: GadgetCandidate, lmax: Optional[int] = None) -> Optional[WalkObstruction]:
    """First walk length realisable between x and y but missing between some
    target pair; such a length refutes the candidate.  None means no
    obstruction up to lmax (which proves nothing)."""
    if lmax is None:
        lmax = default_obstruction_lmax(c)
    tg = walk_table(c.gadget, lmax)
    ta = walk_table(c.target, lmax)
    for ell in range(lmax + 1):
        if not tg.exists[ell, c.x, c.y]:
            continue
        missing = ~ta.exists[ell]
        if missing.any():
            for a in range(c.target.n):
                for b in range(c.target.n):
                    if missing[a, b]:
                        return WalkObstruction(ell, (a, b))
    return None


def odd_cycle_distance_bound(c: GadgetCandidate, n: int) -> bool:
    """Necessary condition for a gadget aimed at the (2n+1)-cycle: the
    distinguished vertices must be at distance at least 2n."""
    if not adjacency_equal(c.target, cycle_graph(2 * n + 1)):
        raise ValueError(f"target is not the {2 * n + 1}-cycle")
    t = walk_table(c.gadget, "auto")
    return distance(t, c.x, c.y) >= 2 * n


# ---------------------------------------------------------------------------
# Constructions


def complement_cycle_gadget(k: int) -> GadgetCandidate:
    """The complement of the 2k-cycle with distinguished vertices 0, 1, aimed
    at the complete graph K_k.  Property (ii) is established by proof for
    this family; property (i) and the absence of walk obstructions are
    re-checked on every construction, and failure signals a bug."""
    if k < 3:
        raise ValueError("complement-cycle gadget needs k >= 3")
    cand = GadgetCandidate(complement(cycle_graph(2 * k)), 0, 1, complete_graph(k),
                           STATUS_PROVEN_ORACULAR,
                           provenance="complement-cycle family; commutation property "
                                      "established by proof, not re-verified here")
    table = check_property_i_classical(cand)
    if not table.complete:
        raise VerificationFailure(f"complement-cycle gadget k={k}: property (i) table incomplete")
    obstruction = walk_obstruction(cand)
    if obstruction is not None:
        raise VerificationFailure(f"complement-cycle gadget k={k}: unexpected walk "
                                  f"obstruction {obstruction}")
    return cand


def product_transfer(c: GadgetCandidate, c2: GadgetCandidate) -> GadgetCandidate:
    """Transfer a shared gadget to the categorical product of the two targets.

    Requires both candidates to use the same gadget graph and distinguished
    vertices.  Property (i) is re-checked classically by combining the two
    witness tables pointwise; each combined map is verified to be a pinned
    homomorphism into the product.  The proven status survives only when both
    inputs carry it.
    """
    if not adjacency_equal(c.gadget, c2.gadget) or (c.x, c.y) != (c2.x, c2.y):
        raise ValueError("candidates must share the same gadget graph and distinguished vertices")
    product = categorical_product(c.target, c2.target)
    status = STATUS_PROVEN_ORACULAR if (c.status == STATUS_PROVEN_ORACULAR
                                        and c2.status == STATUS_PROVEN_ORACULAR) else STATUS_CANDIDATE
    t1 = check_property_i_classical(c)
    t2 = check_property_i_classical(c2)
    nk = c2.target.n
    for (v, vp), w1 in t1.witnesses.items():
        for (w, wp), w2 in t2.witnesses.items():
            if w1 is None or w2 is None:
                if status == STATUS_PROVEN_ORACULAR:
                    raise VerificationFailure("proven inputs produced an incomplete combined table")
                continue
            combined = tuple(w1[z] * nk + w2[z] for z in range(c.gadget.n))
            if combined[c.x] != v * nk + w or combined[c.y] != vp * nk + wp:
                raise VerificationFailure("combined witness misses its pins")
            for (z1, z2) in c.gadget.edges():
                if not product.has_edge(combined[z1], combined[z2]):
                    raise VerificationFailure("combined witness is not a homomorphism")
    return GadgetCandidate(c.gadget, c.x, c.y, product, status,
                           provenance=f"categorical-product transfer onto "
                                      f"{product.label or 'the product target'}")


def splice_gadget(h: Graph, comm_pairs: list[tuple[int, int]], c: GadgetCandidate) -> Graph:
    """Adjoin a fresh copy of the gadget for each designated vertex pair of h,
    identifying the copy's distinguished vertices with the pair.

    Vertex numbering: original vertices of h first, then the non-distinguished
    gadget vertices per pair in pair order (each block in increasing gadget
    index).
    """
    for (u, v) in comm_pairs:
        if not (0 <= u < h.n and 0 <= v < h.n):
            raise ValueError(f"pair ({u},{v}) out of range for the instance graph")
        if u == v:
            raise ValueError(f"pair ({u},{v}) must name two distinct vertices")
    edges = set(h.edges())
    n = h.n
    other = [z for z in range(c.gadget.n) if z not in (c.x, c.y)]
    for (u, v) in comm_pairs:
        placement = {c.x: u, c.y: v}
        for z in other:
            placement[z] = n
            n += 1
        for (z1, z2) in c.gadget.edges():
            e = (placement[z1], placement[z2])
            edges.add((min(e), max(e)))
    label = f"splice({h.label or 'instance'},{len(comm_pairs)}x{c.gadget.label or 'gadget'})"
    return graph_from_edges(n, sorted(edges), label)


# ---------------------------------------------------------------------------
# Box-path disproof pipeline


@dataclass(frozen=True)
class Refutation:
    kind: str                       # "distance" or "noncommuting_witness"
    detail: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.detail}


@dataclass(frozen=True)
class CandidateClass:
    representative: tuple[tuple[int, int], tuple[int, int]]  # ((a0,s0),(b0,t0))
    members: int
    refutation: Refutation

    def to_json(self) -> dict:
        return {"representative": [list(p) for p in self.representative],
                "members": self.members, "refutation": self.refutation.to_json()}


@dataclass(frozen=True)
class DisproofReport:
    n: int
    k: int
    graph_label: str
    total_pairs: int
    classes: tuple[CandidateClass, ...]
    all_refuted: bool

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "graph": self.graph_label,
                "total_pairs": self.total_pairs, "all_refuted": self.all_refuted,
                "classes": [c.to_json() for c in self.classes]}


def _cycle_dist(a: int, b: int, m: int) -> int:
    d = (a - b) % m
    return min(d, m - d)


def _pair_symmetry_orbit(pair, m, k):
    """Orbit of an unordered distinguished pair under the dihedral symmetry of
    the cycle factor combined with the path reflection."""
    (a0, s0), (b0, t0) = pair
    out = set()
    for flip_path in (False, True):
        s1, t1 = (k - s0, k - t0) if flip_path else (s0, t0)
        for reflect in (False, True):
            a1, b1 = ((-a0) % m, (-b0) % m) if reflect else (a0, b0)
            for rot in range(m):
                p = ((a1 + rot) % m, s1)
                q = ((b1 + rot) % m, t1)
                out.add((p, q) if (p <= q) else (q, p))
    return out


def _canonical_pair(pair, m, k):
    return min(_pair_symmetry_orbit(pair, m, k))


def enumerate_candidate_classes(n: int, k: int) -> dict:
    """Group all unordered distinguished pairs of (2n+1-cycle) box (path of
    length k) by the graph's evident symmetries.  Returns canonical pair ->
    member count, in sorted order."""
    m = 2 * n + 1
    vertices = [(a, s) for a in range(m) for s in range(k + 1)]
    classes: dict = {}
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            pair = (vertices[i], vertices[j])
            pair = pair if pair[0] <= pair[1] else (pair[1], pair[0])
            rep = _canonical_pair(pair, m, k)
            classes[rep] = classes.get(rep, 0) + 1
    return dict(sorted(classes.items()))


def analyze_candidate_pair(n: int, k: int, pair,
                           rep_cache: Optional[dict] = None) -> Refutation:
    """Refute one distinguished pair of the box product as a gadget for the
    (2n+1)-cycle: by the distance bound when the pair sits closer than 2n,
    and otherwise by a verified lifted representation whose entries at the
    pair do not commute."""
    m = 2 * n + 1
    (a0, s0), (b0, t0) = pair
    if s0 > t0:
        (a0, s0), (b0, t0) = (b0, t0), (a0, s0)
    d = _cycle_dist(a0, b0, m) + (t0 - s0)
    if d < 2 * n:
        return Refutation("distance", {"distance": d, "required": 2 * n})
    # d >= 2n and the cycle contributes at most n, so t0 - s0 >= n >= 2
    key = (s0, t0)
    if rep_cache is not None and key in rep_cache:
        lifted = rep_cache[key]
    else:
        base = path_to_cycle_rep(k, s0, t0, n)
        lifted = lift_box_rep(base, m)
        report = verify_rep(lifted)
        if not report.passed:
            raise VerificationFailure(f"lifted representation for (s0,t0)=({s0},{t0}) failed "
                                      f"verification, max residual {report.max_residual}")
        if rep_cache is not None:
            rep_cache[key] = lifted
    u = (a0 * (k + 1) + s0, (s0 - a0) % m)
    v = (b0 * (k + 1) + t0, (t0 - b0) % m)
    norm = commutator_norm(lifted, u, v)
    if norm <= lifted.tol:
        raise VerificationFailure(f"witness commutator unexpectedly vanished for pair {pair}")
    return Refutation("noncommuting_witness",
                      {"s0": s0, "t0": t0, "witness": [list(u), list(v)],
                       "commutator_norm": norm, "rep_verified": True})


def disprove_box_path_gadget(n: int, k: int, threads: Optional[int] = None) -> DisproofReport:
    """Refute every candidate distinguished pair of (2n+1-cycle) box (path of
    length k) as a commutativity gadget for the (2n+1)-cycle; needs n >= 2
    (for n = 1 the construction actually is a gadget, so there is nothing to
    disprove)."""
    if n < 2:
        raise ValueError("need n >= 2: with n = 1 the triangular prism really is a gadget "
                         "for the 3-cycle and no disproof exists")
    if k < 0:
        raise ValueError("path length k must be >= 0")
    m = 2 * n + 1
    box = box_product(cycle_graph(m), path_graph(k))
    classes = enumerate_candidate_classes(n, k)
    rep_cache: dict = {}
    items = list(classes.items())
    if threads is None:
        threads = max(1, int(os.environ.get("QGADGET_THREADS", "1")))

    def work(item):
        rep, count = item
        return CandidateClass(rep, count, analyze_candidate_pair(n, k, rep, rep_cache))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, items))
    else:
        results = [work(it) for it in items]
    total = sum(c.members for c in results)
    return DisproofReport(n, k, box.label, total, tuple(results), all_refuted=True)
