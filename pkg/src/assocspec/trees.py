"""Bracketings, DFS trees, zag sequences and Dyck paths.

A bracketing of ``x1 x2 ... xn`` corresponds to a rooted tree on the
variables: ``x_i -> x_j`` is an edge whenever some subterm ``(t1 t2)`` has
leftmost variables ``x_i`` in ``t1`` and ``x_j`` in ``t2``.  These trees are
exactly the trees whose vertex order ``x1, ..., xn`` is a depth-first order
("DFS trees"), and they are determined by their depth sequences.  This module
implements all four encodings and the maps between them.

Vertices of a :class:`DfsTree` are 0-based internally: vertex ``i`` is the
variable ``x_{i+1}``.  Bracketing leaves keep the 1-based variable index used
in the text syntax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

from .errors import BracketingSyntaxError, BudgetExceeded, InvalidStructureError

DEFAULT_MAX_TREES = 1_000_000


# ---------------------------------------------------------------------------
# Bracketings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    index: int  # 1-based variable index

    @property
    def size(self) -> int:
        return 1

    @property
    def leftmost(self) -> int:
        return self.index

    def __str__(self) -> str:
        return format_bracketing(self)


@dataclass(frozen=True)
class Node:
    left: "Bracketing"
    right: "Bracketing"

    @cached_property
    def size(self) -> int:
        return self.left.size + self.right.size

    @property
    def leftmost(self) -> int:
        return self.left.leftmost

    def __str__(self) -> str:
        return format_bracketing(self)


Bracketing = Union[Leaf, Node]


def leaves(t: Bracketing) -> list[int]:
    """Variable indices of ``t`` read left to right."""
    out: list[int] = []
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Leaf):
            out.append(s.index)
        else:
            stack.append(s.right)
            stack.append(s.left)
    return out


def is_valid_bracketing(t: Bracketing) -> bool:
    return leaves(t) == list(range(1, t.size + 1))


def format_bracketing(t: Bracketing) -> str:
    """Canonical text form: every internal node parenthesised except the root."""

    def fmt(s: Bracketing, top: bool) -> str:
        if isinstance(s, Leaf):
            return f"x{s.index}"
        body = fmt(s.left, False) + fmt(s.right, False)
        return body if top else f"({body})"

    return fmt(t, True)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.leaf_positions: list[int] = []

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def factor(self) -> Bracketing:
        c = self.peek()
        if c == "x":
            start = self.pos
            self.pos += 1
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            if j == self.pos:
                raise BracketingSyntaxError("expected digits after 'x'", self.pos)
            k = int(self.text[self.pos:j])
            if k < 1:
                raise BracketingSyntaxError("variable index must be >= 1", start)
            self.pos = j
            self.leaf_positions.append(start)
            return Leaf(k)
        if c == "(":
            start = self.pos
            self.pos += 1
            left = self.factor()
            if self.peek() == ")":
                raise BracketingSyntaxError(
                    "parentheses must enclose a product of two factors", start)
            right = self.factor()
            if self.peek() != ")":
                raise BracketingSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return Node(left, right)
        if c == "":
            raise BracketingSyntaxError("unexpected end of input", self.pos)
        raise BracketingSyntaxError(f"unexpected character {c!r}", self.pos)


def parse_bracketing(text: str) -> Bracketing:
    """Parse a term such as ``"((x1((x2x3)x4))x5)(x6(x7x8))"``.

    Juxtaposition is the product.  Every internal node must be parenthesised
    except the outermost one, whose parentheses are optional.  The leaves must
    read ``x1, x2, ..., xn`` from left to right.
    """
    p = _Parser(text)
    first = p.factor()
    if p.peek() == "":
        t = first
    else:
        second = p.factor()
        t = Node(first, second)
    if p.peek() != "":
        raise BracketingSyntaxError(
            "trailing input; products of three or more factors need parentheses",
            p.pos)
    idx = leaves(t)
    for pos, k in enumerate(idx, start=1):
        if k != pos:
            raise BracketingSyntaxError(
                f"variables must be x1..x{len(idx)} in left-to-right order, "
                f"found x{k} in slot {pos}", p.leaf_positions[pos - 1])
    return t


# ---------------------------------------------------------------------------
# DFS trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DfsTree:
    """A DFS tree on ``n`` vertices given by its parent array.

    ``parents[0]`` is ``-1`` (the root ``x1``); for ``i >= 1`` ``parents[i]`` is
    the 0-based index of the parent of vertex ``i``.
    """

    parents: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parents)
        object.__setattr__(self, "parents", p)
        if not p or p[0] != -1:
            raise InvalidStructureError("parents[0] must be -1 (root x1)")
        # Contiguous-subtree property, in its sequential form: the parent of
        # i+1 is i or an ancestor of i.
        for i in range(1, len(p)):
            q = p[i]
            a = i - 1
            while a != -1 and a != q:
                a = p[a]
            if a == -1:
                raise InvalidStructureError(
                    f"vertex x{i + 1}: parent x{q + 1} is neither x{i} nor an "
                    f"ancestor of x{i}")

    @classmethod
    def from_depths(cls, depths: Sequence[int]) -> "DfsTree":
        return zag_to_dfs(depths)

    @property
    def n(self) -> int:
        return len(self.parents)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        d = [0] * self.n
        for i in range(1, self.n):
            d[i] = d[self.parents[i]] + 1
        return tuple(d)

    @property
    def height(self) -> int:
        return max(self.depths)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        ch: list[list[int]] = [[] for _ in range(self.n)]
        for i in range(1, self.n):
            ch[self.parents[i]].append(i)
        return tuple(tuple(c) for c in ch)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(self.parents[i], i) for i in range(1, self.n)]

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self.children[i])

    def subtree_interval(self, i: int) -> tuple[int, int]:
        """The inclusive index range ``(i, i')`` of the subtree rooted at ``i``."""
        j = i
        while self.children[j]:
            j = self.children[j][-1]
        return i, j

    def is_chain(self) -> bool:
        return self.depths == tuple(range(self.n))

    def is_star(self) -> bool:
        return all(p in (-1, 0) for p in self.parents)

    def __str__(self) -> str:
        return ",".join(map(str, self.depths))


def bracketing_to_dfs(t: Bracketing) -> DfsTree:
    """The tree ``G(t)`` of a bracketing."""
    n = t.size
    parents = [-1] * n
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Node):
            parents[s.right.leftmost - 1] = s.left.leftmost - 1
            stack.append(s.left)
            stack.append(s.right)
    return DfsTree(tuple(parents))


def dfs_to_bracketing(tree: DfsTree) -> Bracketing:
    """The unique bracketing ``t`` with ``G(t) == tree``.

    The term of a vertex is its leaf multiplied on the right by the terms of
    its children, in increasing order.
    """
    terms: list[Bracketing | None] = [None] * tree.n
    for v in reversed(range(tree.n)):
        acc: Bracketing = Leaf(v + 1)
        for c in tree.children[v]:
            acc = Node(acc, terms[c])
        terms[v] = acc
    return terms[0]


# ---------------------------------------------------------------------------
# Zag sequences
# ---------------------------------------------------------------------------

def is_zag_sequence(d: Sequence[int]) -> bool:
    if len(d) == 0 or d[0] != 0:
        return False
    if len(d) >= 2 and d[1] != 1:
        return False
    return all(1 <= d[i + 1] <= d[i] + 1 for i in range(len(d) - 1))


def depth_sequence(tree: DfsTree) -> tuple[int, ...]:
    return tree.depths


def zag_to_dfs(d: Sequence[int]) -> DfsTree:
    """Rebuild a DFS tree from its depth sequence."""
    d = tuple(int(x) for x in d)
    if not is_zag_sequence(d):
        raise InvalidStructureError(f"not a zag sequence: {d}")
    # last[k] = most recent vertex at depth k; those are the ancestors of the
    # current vertex.
    last: list[int] = [0]
    parents = [-1]
    for i in range(1, len(d)):
        parents.append(last[d[i] - 1])
        del last[d[i]:]
        last.append(i)
    return DfsTree(tuple(parents))


# ---------------------------------------------------------------------------
# Dyck paths
# ---------------------------------------------------------------------------

def is_dyck_path(p: str) -> bool:
    h = 0
    for c in p:
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def dfs_to_dyck(tree: DfsTree) -> str:
    """Depth-first walk with backtracking: ``U`` going to a child, ``D`` back."""
    steps: list[str] = []
    # Explicit stack of (vertex, next child position).
    stack = [(0, 0)]
    while stack:
        v, k = stack.pop()
        ch = tree.children[v]
        if k < len(ch):
            stack.append((v, k + 1))
            steps.append("U")
            stack.append((ch[k], 0))
        elif stack:
            steps.append("D")
    return "".join(steps)


def dyck_to_dfs(p: str) -> DfsTree:
    if not is_dyck_path(p):
        raise InvalidStructureError(f"malformed Dyck path: {p!r}")
    parents = [-1]
    stack = [0]
    for c in p:
        if c == "U":
            parents.append(stack[-1])
            stack.append(len(parents) - 1)
        else:
            stack.pop()
    return DfsTree(tuple(parents))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan index must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def iter_zag_sequences(n: int, max_depth: int | None = None) -> Iterator[tuple[int, ...]]:
    """All zag sequences of length ``n`` in lexicographic order.

    ``max_depth`` optionally bounds every entry (trees of bounded height).
    """
    if n < 1:
        return
    if n == 1:
        yield (0,)
        return
    if max_depth is not None and max_depth < 1:
        return
    d = [0, 1]

    def rec():
        if len(d) == n:
            yield tuple(d)
            return
        top = d[-1] + 1
        if max_depth is not None:
            top = min(top, max_depth)
        for k in range(1, top + 1):
            d.append(k)
            yield from rec()
            d.pop()

    yield from rec()


def enumerate_dfs_trees(n: int, max_trees: int = DEFAULT_MAX_TREES) -> Iterator[DfsTree]:
    """Every DFS tree of size ``n``, in lexicographic order of depth sequences.

    Raises :class:`BudgetExceeded` up front if there are more than
    ``max_trees`` of them.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = catalan(n - 1)
    if total > max_trees:
        raise BudgetExceeded(
            f"{total} DFS trees of size {n} exceed the cap of {max_trees}")
    for d in iter_zag_sequences(n):
        yield zag_to_dfs(d)
