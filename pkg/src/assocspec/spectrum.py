"""Associative spectra of graph algebras.

``s_n`` counts the classes of bracketings of size ``n`` under "induces the
same term operation".  The main route groups DFS trees by their homomorphism
sets; :func:`spectrum_via_term_tables` is an independent brute-force route
that compares full value tables over all assignments.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

import numpy as np

from .algebra import (DEFAULT_MAX_ASSIGNMENTS, DEFAULT_MAX_HOMS, HomSet,
                      homomorphisms, term_operation)
from .digraph import Digraph
from .errors import BudgetExceeded
from .trees import (DEFAULT_MAX_TREES, DfsTree, dfs_to_bracketing,
                    enumerate_dfs_trees)


@dataclass(frozen=True)
class HomSignature:
    """Hash of a canonical hom set plus its size."""

    digest: bytes
    size: int

    @classmethod
    def of(cls, homs: HomSet) -> "HomSignature":
        return cls(homs.digest(), len(homs))


def fine_spectrum(g: Digraph, n: int, max_trees: int = DEFAULT_MAX_TREES,
                  max_homs: int = DEFAULT_MAX_HOMS) -> list[list[DfsTree]]:
    """Partition the DFS trees of size ``n`` by their hom sets into ``g``.

    Classes come in order of their lexicographically least member, and each
    class lists its members in lexicographic order of depth sequences.
    """
    # signature -> list of (canonical maps, class index); the list handles
    # digest collisions by full comparison.
    seen: dict[HomSignature, list[tuple[np.ndarray, int]]] = {}
    classes: list[list[DfsTree]] = []
    for tree in enumerate_dfs_trees(n, max_trees):
        homs = homomorphisms(tree, g, max_homs)
        sig = HomSignature.of(homs)
        bucket = seen.setdefault(sig, [])
        for maps, ci in bucket:
            if np.array_equal(maps, homs.maps):
                classes[ci].append(tree)
                break
        else:
            bucket.append((homs.maps, len(classes)))
            classes.append([tree])
    return classes


def spectrum_via_term_tables(g: Digraph, n: int,
                             max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
                             max_trees: int = DEFAULT_MAX_TREES) -> int:
    """``s_n`` by counting distinct value tables of the bracketings."""
    tables = set()
    for tree in enumerate_dfs_trees(n, max_trees):
        tables.add(term_operation(g, dfs_to_bracketing(tree), max_assignments).tobytes())
    return len(tables)


def term_table_classes(g: Digraph, n: int,
                       max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> list[list[DfsTree]]:
    """Fine spectrum computed from value tables (oracle for :func:`fine_spectrum`)."""
    return _group(enumerate_dfs_trees(n), lambda t: term_operation(
        g, dfs_to_bracketing(t), max_assignments).tobytes())


@dataclass
class SpectrumResult:
    """``values[n-1]`` is ``s_n``; ``classes[n]`` holds one depth sequence per class."""

    values: list[int]
    method: str = "hom-signature"
    classes: dict[int, list[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def completed(self) -> int:
        return len(self.values)

    def s(self, n: int) -> int:
        return self.values[n - 1]

    def rows(self) -> list[dict]:
        out = []
        for n, v in enumerate(self.values, start=1):
            row = {"n": n, "s_n": v}
            if n in self.classes:
                row["classes"] = [",".join(map(str, d)) for d in self.classes[n]]
            out.append(row)
        return out

    def to_json(self) -> str:
        return json.dumps({"method": self.method, "spectrum": self.rows()}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        with_classes = bool(self.classes)
        w.writerow(["n", "s_n"] + (["classes"] if with_classes else []))
        for row in self.rows():
            extra = [" ".join(row.get("classes", []))] if with_classes else []
            w.writerow([row["n"], row["s_n"]] + extra)
        return buf.getvalue()


def spectrum(g: Digraph, max_n: int, method: str = "hom", with_classes: bool = False,
             max_trees: int = DEFAULT_MAX_TREES, max_homs: int = DEFAULT_MAX_HOMS,
             max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> SpectrumResult:
    """``s_1 .. s_max_n`` for the graph algebra of ``g``.

    ``method`` is ``"hom"`` (signature grouping), ``"table"`` (value tables)
    or ``"auto"`` (tables when they fit the assignment budget, else hom).
    If a budget runs out, :class:`BudgetExceeded` is raised with the partial
    result for the completed sizes attached as ``partial``.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    tag = {"hom": "hom-signature", "table": "term-table", "auto": "auto"}[method]
    result = SpectrumResult([], tag)
    for n in range(1, max_n + 1):
        try:
            use_table = method == "table" or (
                method == "auto" and (g.order + 1) ** n <= max_assignments)
            if use_table and not with_classes:
                value = spectrum_via_term_tables(g, n, max_assignments, max_trees)
            else:
                classes = (term_table_classes(g, n, max_assignments) if use_table
                           else fine_spectrum(g, n, max_trees, max_homs))
                value = len(classes)
                if with_classes:
                    result.classes[n] = [c[0].depths for c in classes]
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"budget exceeded at n={n} (completed up to n={n - 1}): {exc}",
                partial=result) from exc
        result.values.append(value)
    return result


# ---------------------------------------------------------------------------
# Combinatorial partitions of B_n
# ---------------------------------------------------------------------------

def _group(trees: Iterable[DfsTree], key: Callable[[DfsTree], Hashable]) -> list[list[DfsTree]]:
    groups: dict[Hashable, list[DfsTree]] = defaultdict(list)
    for t in trees:
        groups[key(t)].append(t)
    return list(groups.values())


def parity_classes(n: int) -> list[list[DfsTree]]:
    """Trees grouped by depth sequence mod 2."""
    return _group(enumerate_dfs_trees(n), lambda t: tuple(d % 2 for d in t.depths))


def parity_class_count(n: int) -> int:
    return len(parity_classes(n))


def depth_mod_classes(n: int, m: int) -> list[list[DfsTree]]:
    return _group(enumerate_dfs_trees(n), lambda t: tuple(d % m for d in t.depths))


def leaf_classes(n: int) -> list[list[DfsTree]]:
    """Trees grouped by their leaf sets."""
    return _group(enumerate_dfs_trees(n), lambda t: t.leaves)


def leaf_equivalence_count(n: int) -> int:
    return len(leaf_classes(n))


def as_partition(classes: Iterable[Iterable[DfsTree]]) -> frozenset[frozenset[tuple[int, ...]]]:
    """Order-free form of a partition, for comparing two of them."""
    return frozenset(frozenset(t.depths for t in c) for c in classes)
