"""Closed forms and counting recurrences for special families of graphs.

The primary computations are dynamic programmes over (position, depth)
states of zag sequences.  The linear recurrences and explicit formulas are
kept as separate functions so they can be checked against the DP.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .digraph import Digraph
from .errors import InvalidStructureError
from .trees import DfsTree, catalan


# ---------------------------------------------------------------------------
# DFS trees of bounded height
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bounded_height_count(h: int, n: int) -> int:
    """Number of DFS trees of size ``n`` and height at most ``h``."""
    if h < 0 or n < 0:
        raise ValueError("h and n must be >= 0")
    if n == 0:
        return 0
    if n == 1:
        return 1
    if h == 0:
        return 0
    # ways[d] = number of valid prefixes ending at depth d (index 1..h)
    ways = [0] * (h + 2)
    ways[1] = 1
    for _ in range(n - 2):
        # from depth d the next depth is any of 1..min(d+1, h), so depth e
        # is reached from every d >= e-1
        nxt = [0] * (h + 2)
        suffix = 0
        for e in range(h, 0, -1):
            suffix += ways[e]
            nxt[e] = suffix + (ways[e - 1] if e >= 2 else 0)
        ways = nxt
    return sum(ways[1:h + 1])


def bounded_height_recurrence(h: int, n: int) -> int:
    """``T_h(n)`` from the order-``floor((h-1)/2)+1`` linear recurrence.

    Seeds are ``T_h(k) = C_{k-1}`` for ``k <= h+1`` (every tree of size at
    most ``h+1`` has height at most ``h``).
    """
    if n <= 0:
        return 0
    vals = {k: catalan(k - 1) for k in range(1, h + 2)}
    top = (h - 1) // 2
    for m in range(h + 1, n):
        vals[m + 1] = sum((-1) ** k * math.comb(h - k, k + 1) * vals[m - k]
                          for k in range(top + 1))
    return vals[n]


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def bounded_height_closed_form(h: int, n: int) -> int:
    """Explicit formulas for ``h`` in 2, 3, 4 and ``n >= 2``."""
    if n < 2:
        raise ValueError("closed forms hold for n >= 2")
    if h == 2:
        return 2 ** (n - 2)
    if h == 3:
        return fibonacci(2 * n - 3)
    if h == 4:
        return (3 ** (n - 2) + 1) // 2
    raise ValueError("no closed form recorded for this height")


def bounded_height_table(heights, sizes) -> list[list[int]]:
    return [[bounded_height_count(h, n) for n in sizes] for h in heights]


# ---------------------------------------------------------------------------
# Level truncation
# ---------------------------------------------------------------------------

def truncate_zag(d, h: int) -> tuple[int, ...]:
    """Replace every entry above ``h`` by ``h + 1``."""
    return tuple(min(x, h + 1) for x in d)


def truncate_tree(tree: DfsTree, h: int) -> DfsTree:
    """Make every proper descendant of a depth-``h`` vertex its direct child."""
    parents = list(tree.parents)
    depths = tree.depths
    anchor = [-1] * tree.n  # depth-h ancestor, if any
    for i in range(tree.n):
        if depths[i] == h:
            anchor[i] = i
        elif depths[i] > h:
            anchor[i] = anchor[tree.parents[i]]
            parents[i] = anchor[i]
    return DfsTree(tuple(parents))


def level_equivalence_count(h: int, n: int) -> int:
    """Number of classes of trees that coincide up to level ``h``."""
    if h < 0 or n < 1:
        raise ValueError("need h >= 0 and n >= 1")
    return bounded_height_count(h + 1, n)


# ---------------------------------------------------------------------------
# Modular Catalan numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def modular_catalan(m: int, n: int) -> int:
    """``C_{m,n}``: zag sequences of length ``n+1`` whose drops are at most ``m-2``."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if n <= 1:
        return 1
    ways = {1: 1}
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for d, w in ways.items():
            for e in range(max(1, d - (m - 2)), d + 2):
                nxt[e] = nxt.get(e, 0) + w
        ways = nxt
    return sum(ways.values())


def modular_catalan_dyck(m: int, n: int) -> int:
    """Dyck paths of semilength ``n`` with no factor ``D^m U``."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    # state: (height, ups used, trailing D run capped at m)
    states = {(0, 0, 0): 1}
    for _ in range(2 * n):
        nxt: dict[tuple[int, int, int], int] = {}
        for (ht, ups, run), w in states.items():
            if ups < n and run < m:
                key = (ht + 1, ups + 1, 0)
                nxt[key] = nxt.get(key, 0) + w
            if ht > 0:
                key = (ht - 1, ups, min(run + 1, m))
                nxt[key] = nxt.get(key, 0) + w
        states = nxt
    return sum(w for (ht, _, _), w in states.items() if ht == 0)


# ---------------------------------------------------------------------------
# Spectra of special graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormSpectrum:
    family: str
    formula: str
    evaluator: Callable[[int], int]

    def __call__(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be >= 1")
        return self.evaluator(n)

    def values(self, max_n: int) -> list[int]:
        return [self(n) for n in range(1, max_n + 1)]


def path_spectrum(length: int, n: int) -> int:
    if length < 0 or n < 1:
        raise ValueError("need length >= 0 and n >= 1")
    t = bounded_height_count(length, n)
    return t if n <= length + 1 else t + 1


def path_with_loop_spectrum(length: int, n: int) -> int:
    if length < 1 or n < 1:
        raise ValueError("need length >= 1 and n >= 1")
    return bounded_height_count(length, n)


def cycle_spectrum(m: int, n: int) -> int:
    return modular_catalan(m, n - 1)


def _const1(n: int) -> int:
    return 1


def _two(n: int) -> int:
    return 1 if n <= 2 else 2


def _pow2(n: int) -> int:
    return 1 if n <= 2 else 2 ** (n - 2)


def _catalan(n: int) -> int:
    return catalan(n - 1)


_FORMULAS = {
    "1": _const1,
    "2": _two,
    "2^(n-2)": _pow2,
    "C(n-1)": _catalan,
}

# The ten digraphs on vertices {0, 1} up to isomorphism, in table order.
TWO_VERTEX_CASES: list[tuple[str, frozenset, str]] = [
    ("empty", frozenset(), "1"),
    ("one-loop", frozenset({(1, 1)}), "1"),
    ("two-loops", frozenset({(0, 0), (1, 1)}), "1"),
    ("edge", frozenset({(0, 1)}), "2"),
    ("edge-source-loop", frozenset({(0, 1), (0, 0)}), "2^(n-2)"),
    ("edge-target-loop", frozenset({(0, 1), (1, 1)}), "1"),
    ("edge-both-loops", frozenset({(0, 1), (0, 0), (1, 1)}), "C(n-1)"),
    ("symmetric", frozenset({(0, 1), (1, 0)}), "2^(n-2)"),
    ("symmetric-one-loop", frozenset({(0, 1), (1, 0), (1, 1)}), "C(n-1)"),
    ("symmetric-both-loops", frozenset({(0, 1), (1, 0), (0, 0), (1, 1)}), "1"),
]


def _swap(edges) -> frozenset:
    return frozenset((1 - u, 1 - v) for u, v in edges)


def two_vertex_case(g: Digraph) -> str:
    """Name of the isomorphism class of a two-vertex digraph."""
    if g.order != 2:
        raise InvalidStructureError("expected a digraph on two vertices")
    for name, edges, _ in TWO_VERTEX_CASES:
        if g.edges in (edges, _swap(edges)):
            return name
    raise InvalidStructureError(f"unrecognised edge set {sorted(g.edges)}")


def two_vertex_graph(case: str) -> Digraph:
    for name, edges, _ in TWO_VERTEX_CASES:
        if name == case:
            return Digraph(("u", "v"), edges)
    raise KeyError(case)


def two_vertex_spectrum(case: str | Digraph) -> ClosedFormSpectrum:
    name = two_vertex_case(case) if isinstance(case, Digraph) else case
    for cname, _, formula in TWO_VERTEX_CASES:
        if cname == name:
            return ClosedFormSpectrum(f"two-vertex({name})", formula, _FORMULAS[formula])
    raise InvalidStructureError(f"unknown two-vertex case {name!r}")


THREE_VERTEX_CASES = {
    # u -> v, u -> w with loops on v and w
    "out-star-with-sink-loops": frozenset({(0, 1), (1, 1), (0, 2), (2, 2)}),
    # u -> v, loops on v and w, v <-> w
    "loop-path-2cycle": frozenset({(0, 1), (1, 1), (1, 2), (2, 1), (2, 2)}),
}


def three_vertex_graph(case: str) -> Digraph:
    return Digraph(("u", "v", "w"), THREE_VERTEX_CASES[case])


def three_vertex_special_spectrum(case: str) -> ClosedFormSpectrum:
    if case not in THREE_VERTEX_CASES:
        raise InvalidStructureError(f"unknown three-vertex case {case!r}")
    return ClosedFormSpectrum(f"three-vertex({case})", "2^(n-2)", _pow2)


def path_family(length: int, final_loop: bool = False) -> ClosedFormSpectrum:
    if final_loop:
        return ClosedFormSpectrum(f"path-with-final-loop({length})", "T_l(n)",
                                  lambda n: path_with_loop_spectrum(length, n))
    return ClosedFormSpectrum(f"path({length})", "T_l(n) [+1 if n >= l+2]",
                              lambda n: path_spectrum(length, n))


def cycle_family(m: int) -> ClosedFormSpectrum:
    return ClosedFormSpectrum(f"cycle({m})", "C_{m,n-1}", lambda n: cycle_spectrum(m, n))
