"""Decision procedures: associative, undirected trichotomy, antiassociative."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import DEFAULT_MAX_HOMS, satisfies_identity
from .digraph import (COMPLETE_BIPARTITE, COMPLETE_WITH_LOOPS, TRIVIAL, Digraph,
                      WhirlCert, lcm_all, longest_pleasant_path,
                      scc, undirected_shape, whirl_certificate)
from .errors import InvalidStructureError
from .trees import Bracketing, DfsTree, catalan, dfs_to_bracketing, format_bracketing


def is_associative(g: Digraph) -> bool:
    """For every edge ``u -> v``, ``u`` and ``v`` have the same out-neighbours."""
    a = g.adjacency
    return all(np.array_equal(a[u], a[v]) for u, v in g.edges)


# ---------------------------------------------------------------------------
# Undirected graphs
# ---------------------------------------------------------------------------

class SpectrumType(enum.Enum):
    CONSTANT_1 = "constant-1"
    POWERS_OF_TWO = "powers-of-two"
    CATALAN = "catalan"

    def predicted(self, n: int) -> int:
        if self is SpectrumType.CONSTANT_1 or n <= 2:
            return 1
        if self is SpectrumType.POWERS_OF_TWO:
            return 2 ** (n - 2)
        return catalan(n - 1)


@dataclass(frozen=True)
class UndirectedClass:
    kind: SpectrumType
    components: tuple[tuple[tuple[int, ...], str], ...]

    def predicted(self, n: int) -> int:
        return self.kind.predicted(n)


def classify_undirected(g: Digraph) -> UndirectedClass:
    shapes = tuple(undirected_shape(g))
    tags = {tag for _, tag in shapes}
    if tags <= {TRIVIAL, COMPLETE_WITH_LOOPS}:
        kind = SpectrumType.CONSTANT_1
    elif tags <= {TRIVIAL, COMPLETE_WITH_LOOPS, COMPLETE_BIPARTITE}:
        kind = SpectrumType.POWERS_OF_TWO
    else:
        kind = SpectrumType.CATALAN
    return UndirectedClass(kind, shapes)


# ---------------------------------------------------------------------------
# Parameters of a pair of trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreePairParams:
    H: int  # smaller of the two heights
    M: int  # largest modulus making the depth sequences congruent
    L: int  # largest level up to which the trees coincide


def tree_pair_params(t1: DfsTree, t2: DfsTree) -> TreePairParams:
    if t1.n != t2.n:
        raise ValueError("trees must have the same size")
    if t1 == t2:
        raise ValueError("parameters are only defined for distinct trees")
    d1, d2 = t1.depths, t2.depths
    diffs = [abs(a - b) for a, b in zip(d1, d2)]
    M = math.gcd(*diffs)
    # Level m is "safe" iff every vertex with depth <= m in either tree has
    # equal depths, i.e. m < min(d1, d2) at every disagreement.
    L = min(min(a, b) for a, b in zip(d1, d2) if a != b) - 1
    return TreePairParams(min(t1.height, t2.height), M, L)


# ---------------------------------------------------------------------------
# Antiassociativity
# ---------------------------------------------------------------------------

def witness_trees(P: int, M: int) -> tuple[DfsTree, DfsTree]:
    """Two DFS trees of size ``3P + M + 6`` differing in one edge.

    Both are the chain ``x1 .. x(2P+M+4)`` plus the chain
    ``x(2P+M+5) .. x(3P+M+6)`` hung from ``x(P+2)`` (first tree) or from
    ``x(P+M+2)`` (second tree).
    """
    if P < 0 or M < 1:
        raise ValueError("need P >= 0 and M >= 1")
    n = 3 * P + M + 6
    split = 2 * P + M + 4  # 0-based index of x(2P+M+5)
    base = [-1] + [i - 1 for i in range(1, n)]
    a, b = list(base), list(base)
    a[split] = P + 1
    b[split] = P + M + 1
    return DfsTree(tuple(a)), DfsTree(tuple(b))


@dataclass
class AntiassocReport:
    antiassociative: bool
    conditions: dict[str, bool]
    whirls: dict[int, WhirlCert | None]
    components: tuple[tuple[int, ...], ...]
    longest_pleasant_path: int
    P: int
    M: int
    witness: tuple[Bracketing, Bracketing] | None = None
    witness_verified: bool | None = None
    graph: Digraph | None = field(default=None, repr=False)

    @property
    def verdict(self) -> str:
        return "antiassociative" if self.antiassociative else "not-antiassociative"

    def to_dict(self) -> dict:
        labels = self.graph.labels if self.graph is not None else None

        def name(v: int):
            return labels[v] if labels else v

        comps = []
        for c, members in enumerate(self.components):
            cert = self.whirls.get(c)
            entry = {"vertices": [name(v) for v in members]}
            if c in self.whirls:
                entry["whirl"] = None if cert is None else {
                    "m": cert.m,
                    "blocks": {name(v): b for v, b in sorted(cert.blocks.items())},
                }
            comps.append(entry)
        out = {
            "verdict": self.verdict,
            "conditions": self.conditions,
            "nontrivial_components": [comps[c] for c in sorted(self.whirls)],
            "longest_pleasant_path": self.longest_pleasant_path,
            "P": self.P,
            "M": self.M,
        }
        if self.witness is not None:
            out["witness"] = [format_bracketing(t) for t in self.witness]
            out["witness_size"] = self.witness[0].size
            out["witness_verified"] = self.witness_verified
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def is_antiassociative(g: Digraph, verify_witness: bool = True,
                       max_homs: int = DEFAULT_MAX_HOMS) -> AntiassocReport:
    """Decide antiassociativity and collect the evidence.

    For a finite graph the algebra is *not* antiassociative iff every
    nontrivial SCC is a whirl and no nontrivial SCC reaches another.  In that
    case a witness identity is built and, by default, checked.
    """
    d = scc(g)
    nt = d.nontrivial_components()
    whirls = {c: whirl_certificate(g, c, d) for c in nt}
    cond_whirl = all(w is not None for w in whirls.values())
    cond_paths = not any(d.reach[a, b] for a in nt for b in nt if a != b)
    lpp = longest_pleasant_path(g)
    P = max(0, lpp)
    M = lcm_all(w.m for w in whirls.values() if w is not None)
    report = AntiassocReport(
        antiassociative=not (cond_whirl and cond_paths),
        conditions={
            "nontrivial_sccs_are_whirls": cond_whirl,
            "no_path_between_nontrivial_sccs": cond_paths,
            "pleasant_paths_bounded": True,
            "whirl_sizes_bounded": True,
        },
        whirls=whirls,
        components=d.members,
        longest_pleasant_path=lpp,
        P=P,
        M=M,
        graph=g,
    )
    if not report.antiassociative:
        t1, t2 = witness_trees(P, M)
        report.witness = (dfs_to_bracketing(t1), dfs_to_bracketing(t2))
        if verify_witness:
            report.witness_verified = satisfies_identity(g, *report.witness, max_homs=max_homs)
    return report


def witness_identity(g: Digraph) -> tuple[Bracketing, Bracketing]:
    """A nontrivial bracketing identity satisfied by the graph algebra of ``g``.

    Raises :class:`InvalidStructureError` if ``g`` is antiassociative.
    """
    report = is_antiassociative(g, verify_witness=False)
    if report.antiassociative:
        raise InvalidStructureError(
            "graph is antiassociative; it satisfies no nontrivial bracketing identity")
    return report.witness
