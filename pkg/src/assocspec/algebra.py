"""The graph algebra of a digraph.

The carrier is the vertex set plus an absorbing element ``INF``; the product
is ``x * y = x`` when ``x -> y`` is an edge and ``INF`` otherwise.  Whether
two bracketings ``t, t'`` induce the same term operation is decided by
comparing the sets of homomorphisms of their trees into the graph (both
terms share variables and leftmost variable, so this criterion is exact).
"""

from __future__ import annotations

import hashlib
from typing import Iterator, Mapping, Sequence, Union

import numpy as np

from .digraph import Digraph
from .errors import BudgetExceeded, InvalidStructureError
from .trees import Bracketing, DfsTree, Leaf, bracketing_to_dfs

DEFAULT_MAX_HOMS = 10_000_000
DEFAULT_MAX_ASSIGNMENTS = 2_000_000


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Element = Union[int, _Infinity]


def product(g: Digraph, x: Element, y: Element) -> Element:
    if x is INF or y is INF:
        return INF
    return x if g.has_edge(x, y) else INF


def eval_bracketing(g: Digraph, t: Bracketing,
                    assignment: Sequence[Element] | Mapping[int, Element]) -> Element:
    """Value of ``t`` under ``assignment``.

    A sequence is indexed by ``variable - 1``; a mapping is keyed by the
    1-based variable index.
    """
    if isinstance(assignment, Mapping):
        get = assignment.__getitem__
    else:
        get = lambda k: assignment[k - 1]  # noqa: E731
    if isinstance(t, Leaf):
        return get(t.index)
    # Post-order evaluation without recursion.
    stack: list = [(t, False)]
    values: list[Element] = []
    while stack:
        s, done = stack.pop()
        if isinstance(s, Leaf):
            values.append(get(s.index))
        elif done:
            right = values.pop()
            left = values.pop()
            values.append(product(g, left, right))
        else:
            stack.append((s, True))
            stack.append((s.right, False))
            stack.append((s.left, False))
    return values[0]


def operation_table(g: Digraph) -> np.ndarray:
    """Cayley table on codes ``0..k-1`` (vertices) and ``k`` (``INF``)."""
    k = g.order
    tab = np.full((k + 1, k + 1), k, dtype=np.int16)
    for u, v in g.edges:
        tab[u, v] = u
    return tab


def term_operation(g: Digraph, t: Bracketing,
                   max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> np.ndarray:
    """Full value table of ``t`` over all ``(k+1)**n`` assignments.

    Entry ``j`` is the code of the value at the assignment whose base-``k+1``
    digits (most significant first) are the codes of ``x1..xn``.
    """
    k1 = g.order + 1
    n = t.size
    total = k1 ** n
    if total > max_assignments:
        raise BudgetExceeded(
            f"{total} assignments exceed the term-table cap of {max_assignments}")
    tab = operation_table(g)
    idx = np.arange(total)
    cols = [(idx // k1 ** (n - 1 - i)) % k1 for i in range(n)]

    def ev(s: Bracketing) -> np.ndarray:
        if isinstance(s, Leaf):
            return cols[s.index - 1]
        return tab[ev(s.left), ev(s.right)]

    return np.asarray(ev(t), dtype=np.int16)


# ---------------------------------------------------------------------------
# Homomorphisms of DFS trees
# ---------------------------------------------------------------------------

class HomSet:
    """All homomorphisms of a DFS tree into a digraph.

    ``maps`` is an array of shape ``(count, n)``; row ``r`` sends tree vertex
    ``i`` to graph vertex ``maps[r, i]``.  Rows are in lexicographic order,
    which makes the array a canonical form of the set.
    """

    def __init__(self, tree: DfsTree, graph: Digraph, maps: np.ndarray):
        self.tree = tree
        self.graph = graph
        self.maps = maps

    def __len__(self) -> int:
        return self.maps.shape[0]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self.maps:
            yield tuple(int(x) for x in row)

    def __contains__(self, phi) -> bool:
        phi = np.asarray(phi)
        if phi.shape != (self.maps.shape[1],):
            return False
        return bool((self.maps == phi).all(axis=1).any())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomSet):
            return NotImplemented
        return (self.maps.shape == other.maps.shape
                and bool(np.array_equal(self.maps, other.maps)))

    __hash__ = None

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self)

    def digest(self) -> bytes:
        h = hashlib.blake2b(digest_size=16)
        h.update(np.asarray(self.maps.shape, dtype=np.int64).tobytes())
        h.update(np.ascontiguousarray(self.maps, dtype=np.int32).tobytes())
        return h.digest()

    def __repr__(self) -> str:
        return f"HomSet(tree={self.tree}, size={len(self)})"


def _dtype_for(k: int):
    return np.uint8 if k <= 255 else np.int32


def homomorphisms(tree: DfsTree, g: Digraph,
                  max_homs: int = DEFAULT_MAX_HOMS) -> HomSet:
    """Enumerate ``Hom(tree, g)``.

    Tree vertices are assigned in index order, so each vertex's parent is
    already placed and its candidates are the out-neighbours of the parent's
    image.  The cap applies to every intermediate partial set as well.
    """
    k = g.order
    adj = g.adjacency
    rows = np.arange(k, dtype=_dtype_for(k))[:, None]
    for i in range(1, tree.n):
        images = rows[:, tree.parents[i]]
        r, c = np.nonzero(adj[images])
        if len(r) > max_homs:
            raise BudgetExceeded(
                f"more than {max_homs} partial homomorphisms of tree {tree}")
        rows = np.column_stack([rows[r], c.astype(rows.dtype)])
        if len(rows) == 0:
            break
    if rows.shape[1] != tree.n:
        rows = np.zeros((0, tree.n), dtype=rows.dtype)
    if len(rows) > max_homs:
        raise BudgetExceeded(f"more than {max_homs} homomorphisms of tree {tree}")
    return HomSet(tree, g, rows)


def is_homomorphism(tree: DfsTree, g: Digraph, phi: Sequence[int]) -> bool:
    return all(g.has_edge(phi[p], phi[c]) for p, c in tree.edges)


def satisfies_identity(g: Digraph, t: Bracketing, u: Bracketing,
                       max_homs: int = DEFAULT_MAX_HOMS) -> bool:
    """Whether the graph algebra of ``g`` satisfies ``t = u``."""
    if t.size != u.size:
        raise ValueError(f"bracketings have different sizes ({t.size} vs {u.size})")
    if t == u:
        return True
    a = homomorphisms(bracketing_to_dfs(t), g, max_homs)
    b = homomorphisms(bracketing_to_dfs(u), g, max_homs)
    return len(a) == len(b) and a == b


def collapse_on_walk(tree: DfsTree, walk: Sequence[int], closed: bool = False,
                     graph: Digraph | None = None) -> tuple[int, ...]:
    """Collapsing map of ``tree`` onto a walk.

    Open walk ``v0..vh``: vertex ``i`` goes to ``walk[depth(i)]``.  Closed
    walk ``u0..u(l-1), u0`` (first vertex repeated at the end, ``l >= 1``):
    vertex ``i`` goes to ``walk[depth(i) mod l]``.  If ``graph`` is given the
    walk's edges are checked.
    """
    walk = [int(v) for v in walk]
    if graph is not None:
        for a, b in zip(walk, walk[1:]):
            if not graph.has_edge(a, b):
                raise InvalidStructureError(f"{a} -> {b} is not an edge")
    if closed:
        if len(walk) < 2 or walk[0] != walk[-1]:
            raise InvalidStructureError("closed walk must start and end at the same vertex")
        length = len(walk) - 1
        return tuple(walk[d % length] for d in tree.depths)
    if len(walk) - 1 < tree.height:
        raise InvalidStructureError(
            f"walk of length {len(walk) - 1} is shorter than tree height {tree.height}")
    return tuple(walk[d] for d in tree.depths)
