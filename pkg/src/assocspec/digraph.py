"""Finite digraphs and the structural analyses used by the classifiers.

Loops are allowed.  A strongly connected component is *trivial* when it is a
single vertex without a loop; every other component contains a cycle.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from graphlib import TopologicalSorter
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import GraphFormatError, InvalidStructureError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Digraph:
    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", edges)
        if not labels:
            raise InvalidStructureError("a digraph needs at least one vertex")
        if len(set(labels)) != len(labels):
            raise InvalidStructureError("vertex labels must be unique")
        k = len(labels)
        for u, v in edges:
            if not (0 <= u < k and 0 <= v < k):
                raise InvalidStructureError(f"edge ({u}, {v}) out of range")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Digraph":
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(labels), frozenset(edges))

    @classmethod
    def from_adjacency(cls, adj, labels: Sequence[str] | None = None) -> "Digraph":
        a = np.asarray(adj, dtype=bool)
        return cls.from_edges(a.shape[0], zip(*np.nonzero(a)), labels)

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=bool)
        for u, v in self.edges:
            a[u, v] = True
        a.setflags(write=False)
        return a

    @cached_property
    def out_neighbours(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(np.flatnonzero(row).tolist()) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def has_loop(self, v: int) -> bool:
        return bool(self.adjacency[v, v])

    def is_symmetric(self) -> bool:
        a = self.adjacency
        return bool((a == a.T).all())

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Digraph(tuple(self.labels[v] for v in vs),
                       frozenset((pos[u], pos[v]) for u, v in self.edges
                                 if u in pos and v in pos))

    def to_text(self) -> str:
        """Edge-list serialisation accepted by :func:`parse_digraph`."""
        lines = []
        touched = set()
        for u, v in sorted(self.edges):
            lines.append(f"{self.labels[u]} {self.labels[v]}")
            touched.update((u, v))
        for v in range(self.order):
            if v not in touched:
                lines.append(self.labels[v])
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        es = ", ".join(f"{self.labels[u]}->{self.labels[v]}" for u, v in sorted(self.edges))
        return f"Digraph(V={list(self.labels)}, E={{{es}}})"


def parse_digraph(text: str) -> Digraph:
    """Parse the edge-list format.

    One edge ``"u v"`` per line; a line with one label declares a vertex;
    ``#`` starts a comment.  Vertices are numbered in order of first
    appearance.  Duplicate edges are dropped with a warning.
    """
    labels: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vid(name: str) -> int:
        if name not in labels:
            labels[name] = len(labels)
        return labels[name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            e = (vid(parts[0]), vid(parts[1]))
            if e in edges:
                log.warning("line %d: duplicate edge %s -> %s ignored",
                            lineno, parts[0], parts[1])
            edges.add(e)
        else:
            raise GraphFormatError(
                f"expected 'label' or 'label label', got {len(parts)} fields", lineno)
    if not labels:
        raise GraphFormatError("graph has no vertices")
    return Digraph(tuple(labels), frozenset(edges))


# ---------------------------------------------------------------------------
# Constructors for the families that show up in the examples and tests
# ---------------------------------------------------------------------------

def directed_path(length: int, final_loop: bool = False) -> Digraph:
    edges = {(i, i + 1) for i in range(length)}
    if final_loop:
        edges.add((length, length))
    return Digraph.from_edges(length + 1, edges, [f"v{i}" for i in range(length + 1)])


def directed_cycle(m: int) -> Digraph:
    return Digraph.from_edges(m, {(i, (i + 1) % m) for i in range(m)})


def complete_graph(k: int, loops: bool = True) -> Digraph:
    return Digraph.from_edges(
        k, {(u, v) for u in range(k) for v in range(k) if loops or u != v})


def complete_bipartite(a: int, b: int) -> Digraph:
    left, right = range(a), range(a, a + b)
    edges = {(u, v) for u in left for v in right} | {(v, u) for u in left for v in right}
    return Digraph.from_edges(a + b, edges)


def disjoint_union(*graphs: Digraph) -> Digraph:
    labels, edges, off = [], set(), 0
    for j, g in enumerate(graphs):
        labels += [f"{j}.{x}" for x in g.labels]
        edges |= {(u + off, v + off) for u, v in g.edges}
        off += g.order
    return Digraph(tuple(labels), frozenset(edges))


def all_digraphs(k: int) -> Iterator[Digraph]:
    """All ``2**(k*k)`` labelled digraphs on ``k`` vertices (loops allowed)."""
    pairs = [(u, v) for u in range(k) for v in range(k)]
    for mask in range(1 << len(pairs)):
        yield Digraph.from_edges(k, (p for j, p in enumerate(pairs) if mask >> j & 1))


def all_undirected_graphs(k: int) -> Iterator[Digraph]:
    """All labelled undirected graphs on ``k`` vertices, loops allowed."""
    pairs = [(u, v) for u in range(k) for v in range(u, k)]
    for mask in range(1 << len(pairs)):
        es = set()
        for j, (u, v) in enumerate(pairs):
            if mask >> j & 1:
                es |= {(u, v), (v, u)}
        yield Digraph.from_edges(k, es)


# ---------------------------------------------------------------------------
# Strongly connected components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SccDecomposition:
    """SCCs numbered by their smallest vertex.

    ``reach[a, b]`` is true iff component ``b`` is reachable from component
    ``a`` (reflexive).
    """

    component: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    nontrivial: tuple[bool, ...]
    reach: np.ndarray

    @property
    def count(self) -> int:
        return len(self.members)

    def is_trivial_vertex(self, v: int) -> bool:
        return not self.nontrivial[self.component[v]]

    def nontrivial_components(self) -> list[int]:
        return [c for c in range(self.count) if self.nontrivial[c]]


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix."""
    r = np.asarray(adj, dtype=bool) | np.eye(len(adj), dtype=bool)
    for k in range(len(r)):
        r = r | (r[:, [k]] & r[[k], :])
    return r


def scc(g: Digraph) -> SccDecomposition:
    _, raw = connected_components(csr_matrix(g.adjacency.astype(np.int8)),
                                  directed=True, connection="strong")
    relabel: dict[int, int] = {}
    for v in range(g.order):
        relabel.setdefault(int(raw[v]), len(relabel))
    comp = tuple(relabel[int(raw[v])] for v in range(g.order))
    members = [[] for _ in relabel]
    for v, c in enumerate(comp):
        members[c].append(v)
    nontrivial = tuple(len(m) > 1 or g.has_loop(m[0]) for m in members)

    k = len(members)
    cadj = np.zeros((k, k), dtype=bool)
    for u, v in g.edges:
        cadj[comp[u], comp[v]] = True
    return SccDecomposition(comp, tuple(map(tuple, members)), nontrivial,
                            transitive_closure(cadj))


def has_inter_scc_path(g: Digraph) -> bool:
    """Whether some nontrivial SCC reaches a different nontrivial SCC."""
    d = scc(g)
    nt = d.nontrivial_components()
    return any(d.reach[a, b] for a in nt for b in nt if a != b)


# ---------------------------------------------------------------------------
# Whirls
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WhirlCert:
    """Block assignment showing a strongly connected graph is an ``m``-whirl.

    ``blocks`` maps each vertex of the component (original numbering) to its
    block in ``range(m)``; edges run exactly from block ``i`` to ``i+1 mod m``.
    """

    m: int
    blocks: dict[int, int]

    def verify(self, g: Digraph) -> bool:
        vs = list(self.blocks)
        if set(self.blocks.values()) != set(range(self.m)):
            return False
        return all(
            g.has_edge(x, y) == ((self.blocks[x] + 1) % self.m == self.blocks[y])
            for x in vs for y in vs)


def shortest_cycle_length(g: Digraph, vertices: Iterable[int] | None = None) -> int | None:
    """Length of a shortest cycle inside the subgraph induced by ``vertices``."""
    vs = set(range(g.order)) if vertices is None else set(vertices)
    best = None
    for s in vs:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] + 1 >= best:
                break
            for w in g.out_neighbours[u]:
                if w not in vs:
                    continue
                if w == s:
                    best = dist[u] + 1
                    queue.clear()
                    break
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
    return best


def whirl_certificate(g: Digraph, component: Iterable[int] | int,
                      decomposition: SccDecomposition | None = None) -> WhirlCert | None:
    """Certify that a nontrivial SCC is a whirl, or return ``None``.

    ``component`` is either a component id of ``scc(g)`` or its vertex set.
    The block count is the shortest cycle length, which is forced: every
    cycle of an ``m``-whirl has length divisible by ``m`` and the blocks
    contain an ``m``-cycle.  Blocks are then BFS distance from a root mod
    ``m``, and the edge condition is checked exhaustively.
    """
    if isinstance(component, (int, np.integer)):
        d = decomposition or scc(g)
        vs = list(d.members[component])
    else:
        vs = sorted(component)
    if len(vs) == 1 and not g.has_loop(vs[0]):
        raise InvalidStructureError("trivial component has no whirl structure")
    m = shortest_cycle_length(g, vs)
    if m is None:
        raise InvalidStructureError("vertex set contains no cycle")
    inside = set(vs)
    dist = {vs[0]: 0}
    queue = deque([vs[0]])
    while queue:
        u = queue.popleft()
        for w in g.out_neighbours[u]:
            if w in inside and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if len(dist) != len(vs):
        raise InvalidStructureError("vertex set is not strongly connected")
    cert = WhirlCert(m, {v: dist[v] % m for v in vs})
    return cert if cert.verify(g) else None


# ---------------------------------------------------------------------------
# Pleasant paths
# ---------------------------------------------------------------------------

def pleasant_vertices(g: Digraph, decomposition: SccDecomposition | None = None) -> list[int]:
    d = decomposition or scc(g)
    return [v for v in range(g.order) if d.is_trivial_vertex(v)]


def longest_pleasant_path(g: Digraph) -> int:
    """Edge count of a longest path through trivial-SCC vertices only.

    Returns -1 when no vertex lies in a trivial SCC.  The pleasant vertices
    induce an acyclic subgraph, so this is a longest path in a DAG.
    """
    pv = set(pleasant_vertices(g))
    if not pv:
        return -1
    preds = {v: [u for u in pv if g.has_edge(u, v)] for v in pv}
    best: dict[int, int] = {}
    for v in TopologicalSorter(preds).static_order():
        best[v] = max((best[u] + 1 for u in preds[v]), default=0)
    return max(best.values())


# ---------------------------------------------------------------------------
# Undirected graphs
# ---------------------------------------------------------------------------

TRIVIAL = "trivial"
COMPLETE_WITH_LOOPS = "complete-with-loops"
COMPLETE_BIPARTITE = "complete-bipartite"
OTHER = "other"


def connected_components_undirected(g: Digraph) -> list[tuple[int, ...]]:
    if not g.is_symmetric():
        raise InvalidStructureError("edge relation is not symmetric")
    return list(scc(g).members)


def undirected_shape(g: Digraph) -> list[tuple[tuple[int, ...], str]]:
    """Tag each connected component of an undirected graph.

    Tags are ``trivial``, ``complete-with-loops``, ``complete-bipartite`` or
    ``other``.
    """
    out = []
    for comp in connected_components_undirected(g):
        out.append((comp, _component_shape(g, comp)))
    return out


def _component_shape(g: Digraph, comp: Sequence[int]) -> str:
    sub = g.adjacency[np.ix_(comp, comp)]
    k = len(comp)
    if k == 1 and not sub[0, 0]:
        return TRIVIAL
    if sub.all():
        return COMPLETE_WITH_LOOPS
    if np.diag(sub).any():
        return OTHER
    # Loop-free and connected: 2-colour from the first vertex.
    colour = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in np.flatnonzero(sub[u]):
            w = int(w)
            if w not in colour:
                colour[w] = 1 - colour[u]
                queue.append(w)
    want = np.array([[colour[i] != colour[j] for j in range(k)] for i in range(k)])
    return COMPLETE_BIPARTITE if (sub == want).all() else OTHER


def has_walk_closure(g: Digraph, comp: Sequence[int]) -> bool:
    """Whether every walk ``a -> b -> c -> d`` in ``comp`` has the edge ``a -> d``."""
    cs = set(comp)
    for a, b, c, d in itertools.product(cs, repeat=4):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and not g.has_edge(a, d):
            return False
    return True


def lcm_all(values: Iterable[int]) -> int:
    return math.lcm(1, *values)
