"""Finite-dimensional quantum graph homomorphisms as explicit complex matrices.

A representation assigns to each (domain vertex, codomain vertex) pair a
complex projection matrix; absent entries mean the zero matrix.  The defining
relations checked by :func:`verify_rep` are

  * every present matrix is a self-adjoint idempotent,
  * every domain vertex's row sums to the identity (a PVM),
  * adjacent domain vertices never map onto non-adjacent (or equal)
    codomain vertices: those products vanish,

and, in oracular mode, matrices on adjacent domain vertices commute outright.
Violations are reported with residuals rather than raised, since checking a
candidate is an analysis, not an error.  All constructions in this module are
exact in exact arithmetic, so the default tolerance is a strict 1e-9.

Matrices are dense numpy arrays; dimensions in practice never exceed 16.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import (Graph, adjacency_equal, box_product, complete_graph, cycle_graph,
                     graph_from_edges, path_graph)
from .endo import Endomorphism, is_wac, support, supports_disjoint

DEFAULT_TOL = 1e-9

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)
KETPLUS = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)
KETMINUS = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2.0)


def projector(vec: np.ndarray) -> np.ndarray:
    """Rank-1 projection onto a unit vector."""
    v = np.asarray(vec, dtype=complex)
    return np.outer(v, v.conj())


class VerificationFailure(RuntimeError):
    """A construction failed its own internal consistency check."""


@dataclass(eq=False)
class QuantumRep:
    """Map (u in domain, v in codomain) -> dim x dim complex matrix.

    Entries absent from ``mats`` are zero matrices.  Treat instances as
    immutable once built.
    """

    domain: Graph
    codomain: Graph
    dim: int
    mats: dict[tuple[int, int], np.ndarray]
    tol: float = DEFAULT_TOL

    def entry(self, u: int, v: int) -> np.ndarray:
        m = self.mats.get((u, v))
        if m is None:
            return np.zeros((self.dim, self.dim), dtype=complex)
        return m

    def to_json(self) -> dict:
        mats = {}
        for (u, v) in sorted(self.mats):
            m = self.mats[(u, v)]
            mats[f"{u},{v}"] = [[[float(z.real), float(z.imag)] for z in row] for row in m]
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "dim": self.dim, "tol": self.tol, "mats": mats}


def _graph_from_json(obj: dict) -> Graph:
    return graph_from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]],
                            obj.get("label", ""))


def rep_from_json(obj: dict) -> QuantumRep:
    dim = int(obj["dim"])
    domain = _graph_from_json(obj["domain"])
    codomain = _graph_from_json(obj["codomain"])
    mats = {}
    for key, rows in obj["mats"].items():
        u, v = (int(t) for t in key.split(","))
        if not (0 <= u < domain.n and 0 <= v < codomain.n):
            raise ValueError(f"entry key {key} out of range for the stated graphs")
        m = np.array([[complex(re, im) for re, im in row] for row in rows])
        if m.shape != (dim, dim):
            raise ValueError(f"matrix at {key} has shape {m.shape}, expected ({dim},{dim})")
        mats[(u, v)] = m
    return QuantumRep(domain, codomain, dim, mats, float(obj.get("tol", DEFAULT_TOL)))


def load_rep(path: str) -> QuantumRep:
    with open(path, "r", encoding="utf-8") as fh:
        return rep_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class Violation:
    relation: str
    where: tuple
    residual: float

    def to_json(self) -> dict:
        return {"relation": self.relation, "where": list(self.where), "residual": self.residual}


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    oracular: bool
    max_residual: float
    violations: tuple[Violation, ...]

    def to_json(self) -> dict:
        return {"passed": self.passed, "oracular": self.oracular,
                "max_residual": self.max_residual,
                "violations": [v.to_json() for v in self.violations]}


def _maxabs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def verify_rep(rep: QuantumRep, oracular: bool = False) -> VerificationReport:
    """Check all defining relations; residuals in max-entry norm.

    oracular=True additionally requires matrices on adjacent domain vertices
    to commute.  Nothing is raised: the report carries every violated
    relation together with its worst residual.
    """
    tol = rep.tol
    violations: list[Violation] = []
    worst = 0.0

    def record(relation: str, where: tuple, residual: float):
        nonlocal worst
        worst = max(worst, residual)
        if residual > tol:
            violations.append(Violation(relation, where, residual))

    dim = rep.dim
    eye = np.eye(dim, dtype=complex)
    for (u, v) in sorted(rep.mats):
        m = rep.mats[(u, v)]
        record("hermitian", (u, v), _maxabs(m - m.conj().T))
        record("idempotent", (u, v), _maxabs(m @ m - m))
    for u in range(rep.domain.n):
        row = sum((rep.mats[(u, v)] for v in range(rep.codomain.n) if (u, v) in rep.mats),
                  start=np.zeros((dim, dim), dtype=complex))
        record("row_sum_identity", (u,), _maxabs(row - eye))
    nonadj = [(v, w) for v in range(rep.codomain.n) for w in range(rep.codomain.n)
              if not rep.codomain.has_edge(v, w)]  # includes v == w
    for (u, u2) in rep.domain.directed_edges():
        for (v, w) in nonadj:
            a = rep.mats.get((u, v))
            b = rep.mats.get((u2, w))
            if a is None or b is None:
                continue
            record("adjacency_zero_product", (u, v, u2, w), _maxabs(a @ b))
    if oracular:
        for (u, u2) in rep.domain.edges():
            for v in range(rep.codomain.n):
                a = rep.mats.get((u, v))
                if a is None:
                    continue
                for w in range(rep.codomain.n):
                    b = rep.mats.get((u2, w))
                    if b is None:
                        continue
                    record("oracular_commutator", (u, v, u2, w), _maxabs(a @ b - b @ a))
    return VerificationReport(worst <= tol, oracular, worst, tuple(violations))


def commutator_norm(rep: QuantumRep, first: tuple[int, int], second: tuple[int, int]) -> float:
    """Operator 2-norm of the commutator of two entries.

    Uses power iteration on C*C with a fixed 200 iterations and the
    normalised all-ones start vector, so the result is bit-reproducible
    without an eigensolver dependency.
    """
    a = rep.entry(*first)
    b = rep.entry(*second)
    c = a @ b - b @ a
    m = c.conj().T @ c
    if _maxabs(m) == 0.0:
        return 0.0
    x = np.ones(rep.dim, dtype=complex) / math.sqrt(rep.dim)
    for _ in range(200):
        y = m @ x
        nrm = np.linalg.norm(y)
        if nrm == 0.0:
            return 0.0
        x = y / nrm
    rayleigh = float((x.conj() @ (m @ x)).real)
    return math.sqrt(max(rayleigh, 0.0))


# ---------------------------------------------------------------------------
# Constructions


def classical_rep(h: Graph, g: Graph, mapping: Sequence[int]) -> QuantumRep:
    """Dimension-1 representation of a classical homomorphism h -> g."""
    mapping = tuple(int(a) for a in mapping)
    if len(mapping) != h.n:
        raise ValueError("mapping length does not match domain size")
    for a in mapping:
        if not (0 <= a < g.n):
            raise ValueError(f"mapped value {a} out of range for codomain")
    for u, v in h.edges():
        if not g.has_edge(mapping[u], mapping[v]):
            raise ValueError(f"map does not preserve edge ({u},{v}); not a homomorphism")
    one = np.ones((1, 1), dtype=complex)
    mats = {(u, mapping[u]): one.copy() for u in range(h.n)}
    return QuantumRep(h, g, 1, mats)


def schmidt_rep(g: Graph, f: Endomorphism, g2: Endomorphism) -> QuantumRep:
    """The 2-dimensional representation attached to a disjoint-support WAC pair.

    Entry at (x, y) is  d(x,y)*(p0+q0-1) + d(f(x),y)*p1 + d(g2(x),y)*q1  with
    p0,p1 the computational-basis projections and q0,q1 the Hadamard-basis
    ones.  With this entry convention a moved point x of f contributes p0 on
    the diagonal and p1 at (x, f(x)); conventions that swap those two labels
    appear elsewhere, and only the noncommutativity of the witness pair is
    asserted here, which holds either way.

    The witness: (x, f(x)) and (y, g2(y)) for moved points x of f and y of
    g2 carry p1 and q1, whose commutator has operator norm 1/2.
    """
    if not adjacency_equal(f.graph, g) or not adjacency_equal(g2.graph, g):
        raise ValueError("endomorphisms do not live on the given graph")
    if f.is_identity() or g2.is_identity():
        raise ValueError("both endomorphisms must be non-identity")
    if not supports_disjoint(f, g2):
        raise ValueError("supports must be disjoint")
    if not is_wac(f, g2):
        raise ValueError("endomorphisms must be WAC")
    p0, p1 = projector(KET0), projector(KET1)
    q0, q1 = projector(KETPLUS), projector(KETMINUS)
    half_deficit = p0 + q0 - np.eye(2, dtype=complex)
    mats: dict[tuple[int, int], np.ndarray] = {}

    def add(x: int, y: int, term: np.ndarray):
        if (x, y) in mats:
            mats[(x, y)] = mats[(x, y)] + term
        else:
            mats[(x, y)] = term.copy()

    for x in range(g.n):
        add(x, x, half_deficit)
        add(x, f.mapping[x], p1)
        add(x, g2.mapping[x], q1)
    # drop exact-zero entries (none arise for valid inputs, but keep tidy)
    mats = {k: m for k, m in mats.items() if _maxabs(m) > 0.0}
    return QuantumRep(g, g, 2, mats)


def schmidt_witness(f: Endomorphism, g2: Endomorphism) -> tuple[tuple[int, int], tuple[int, int]]:
    """The designated noncommuting entry pair of schmidt_rep(f, g2)."""
    x = min(support(f))
    y = min(support(g2))
    return (x, f.mapping[x]), (y, g2.mapping[y])


def pair_swap_rep(k: int) -> QuantumRep:
    """Dimension-2 endomorphism representation of the complete graph K_k, k >= 4.

    Colours 0,1 are measured in the computational basis and colours 2,3 in
    the Hadamard basis, identity on the rest; entries on the two bases fail
    to commute, so the non-oracular relations hold while the oracular
    commutator check does not.
    """
    if k < 4:
        raise ValueError("pair swap representation needs k >= 4")
    g = complete_graph(k)
    p0, p1 = projector(KET0), projector(KET1)
    q0, q1 = projector(KETPLUS), projector(KETMINUS)
    mats: dict[tuple[int, int], np.ndarray] = {
        (0, 0): p0, (1, 1): p0.copy(),
        (0, 1): p1, (1, 0): p1.copy(),
        (2, 2): q0, (3, 3): q0.copy(),
        (2, 3): q1, (3, 2): q1.copy(),
    }
    eye = np.eye(2, dtype=complex)
    for a in range(4, k):
        mats[(a, a)] = eye.copy()
    return QuantumRep(g, g, 2, mats)


def four_cycle_rep(g: Graph, cycle: tuple[int, int, int, int]) -> QuantumRep:
    """Dimension-4 representation of the edge-to-graph morphisms built on a
    4-cycle (a, b, c, d, a) of the target; the two distinguished entries at
    the domain edge fail to commute, witnessing non-oracularisability."""
    a, b, c, d = cycle
    if len({a, b, c, d}) != 4:
        raise ValueError("cycle vertices must be distinct")
    for (u, v) in ((a, b), (b, c), (c, d), (d, a)):
        if not g.has_edge(u, v):
            raise ValueError(f"({a},{b},{c},{d}) is not a 4-cycle: missing edge ({u},{v})")
    k2 = complete_graph(2)
    kets0 = {a: (KET0, KET0), b: (KET1, KET0), c: (KET0, KET1), d: (KET1, KET1)}
    kets1 = {a: (KET1, KETPLUS), b: (KET0, KETPLUS), c: (KET1, KETMINUS), d: (KET0, KETMINUS)}
    mats: dict[tuple[int, int], np.ndarray] = {}
    for v, (l, r) in kets0.items():
        mats[(0, v)] = projector(np.kron(l, r))
    for v, (l, r) in kets1.items():
        mats[(1, v)] = projector(np.kron(l, r))
    return QuantumRep(k2, g, 4, mats)


def compose_reps(r1: QuantumRep, r2: QuantumRep) -> QuantumRep:
    """Composite representation: entry (a, c) is the sum over middle vertices b
    of kron(r1[a,b], r2[b,c]).  Tensor index order is left factor major, which
    makes associativity an exact re-indexing identity."""
    if not adjacency_equal(r1.codomain, r2.domain):
        raise ValueError("codomain of the first representation must equal the domain of the second")
    dim = r1.dim * r2.dim
    mats: dict[tuple[int, int], np.ndarray] = {}
    for (a, b), m1 in r1.mats.items():
        for c in range(r2.codomain.n):
            m2 = r2.mats.get((b, c))
            if m2 is None:
                continue
            term = np.kron(m1, m2)
            key = (a, c)
            if key in mats:
                mats[key] = mats[key] + term
            else:
                mats[key] = term
    mats = {k: m for k, m in mats.items() if _maxabs(m) > 0.0}
    return QuantumRep(r1.domain, r2.codomain, dim, mats,
                      tol=max(r1.tol, r2.tol))


def path_shift_pair(k: int, s0: int, t0: int) -> tuple[Endomorphism, Endomorphism]:
    """The two shift endomorphisms of the path with k+1 vertices: one pushes
    0..s0 up by two, the other pulls t0..k down by two.  Their supports are
    disconnected whenever t0 >= s0 + 2."""
    if not (0 <= s0 <= k and 0 <= t0 <= k):
        raise ValueError("s0, t0 must be path vertices")
    if t0 < s0 + 2:
        raise ValueError("need t0 >= s0 + 2 for disconnected supports")
    p = path_graph(k)
    f = Endomorphism(p, tuple(s + 2 if s <= s0 else s for s in range(k + 1)))
    g = Endomorphism(p, tuple(s - 2 if s >= t0 else s for s in range(k + 1)))
    return f, g


def path_to_cycle_rep(k: int, s0: int, t0: int, n: int) -> QuantumRep:
    """Dimension-2 representation of the morphisms from the path P_k into the
    odd cycle C_{2n+1}: the Schmidt representation of the two path shifts,
    composed with the classical wrap s -> s mod (2n+1).

    The entries at (s0, s0 mod 2n+1) and (t0, t0 mod 2n+1) are the
    computational- and Hadamard-basis projections, which do not commute.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    f, g = path_shift_pair(k, s0, t0)
    rep = schmidt_rep(f.graph, f, g)
    m = 2 * n + 1
    cyc = cycle_graph(m)
    wrap = classical_rep(f.graph, cyc, [s % m for s in range(k + 1)])
    return compose_reps(rep, wrap)


def lift_box_rep(r: QuantumRep, m: int) -> QuantumRep:
    """Lift a representation of morphisms H -> C_m to one of morphisms
    (C_m box H) -> C_m via entry ((a, s), b) -> entry (s, a+b mod m).

    The box-product vertex (a, s) carries index a*|V(H)| + s, matching
    graphs.box_product(C_m, H).
    """
    cyc = cycle_graph(m)
    if not adjacency_equal(r.codomain, cyc):
        raise ValueError(f"codomain must be the {m}-cycle")
    h = r.domain
    box = box_product(cyc, h)
    mats: dict[tuple[int, int], np.ndarray] = {}
    for a in range(m):
        for s in range(h.n):
            for b in range(m):
                src = r.mats.get((s, (a + b) % m))
                if src is not None:
                    mats[(a * h.n + s, b)] = src
    return QuantumRep(box, cyc, r.dim, mats, tol=r.tol)
