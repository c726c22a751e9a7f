import csv
import io
import json

import pytest

from assocspec.digraph import Digraph, complete_graph, directed_cycle, directed_path
from assocspec.errors import BudgetExceeded
from assocspec.spectrum import (HomSignature, as_partition, depth_mod_classes,
                                fine_spectrum, leaf_classes, leaf_equivalence_count,
                                parity_class_count, parity_classes, spectrum,
                                spectrum_via_term_tables, term_table_classes)
from assocspec.algebra import homomorphisms
from assocspec.trees import DfsTree, catalan


def g(n, edges):
    return Digraph.from_edges(n, edges)


def test_fine_spectrum_c2_n4():
    classes = fine_spectrum(directed_cycle(2), 4)
    got = [[t.depths for t in c] for c in classes]
    assert [(0, 1, 2, 1), (0, 1, 2, 3)] in got
    assert len(classes) == 4
    firsts = [c[0].depths for c in classes]
    assert firsts == sorted(firsts)


def test_complete_with_loops_is_associative():
    assert spectrum(complete_graph(2), 6).values == [1] * 6


def test_single_edge_spectrum():
    assert spectrum(g(2, {(0, 1)}), 6).values == [1, 1, 2, 2, 2, 2]


def test_catalan_for_edge_with_loops():
    G = g(2, {(0, 1), (0, 0), (1, 1)})
    assert spectrum(G, 7).values == [catalan(n - 1) for n in range(1, 8)]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_cycle_classes_are_depth_residues(m):
    for n in range(1, 8):
        assert as_partition(fine_spectrum(directed_cycle(m), n)) == \
            as_partition(depth_mod_classes(n, m))


def test_parity_and_leaf_counts():
    for n in range(2, 9):
        assert parity_class_count(n) == 2 ** (n - 2)
        assert leaf_equivalence_count(n) == 2 ** (n - 2)
    assert as_partition(parity_classes(5)) == as_partition(depth_mod_classes(5, 2))


def test_leaf_classes_of_loop_edge():
    G = g(2, {(0, 0), (0, 1)})
    for n in range(1, 7):
        assert as_partition(fine_spectrum(G, n)) == as_partition(leaf_classes(n))


def test_term_tables_agree_on_paths():
    for ell in range(4):
        P = directed_path(ell)
        for n in range(1, 6):
            assert spectrum_via_term_tables(P, n) == len(fine_spectrum(P, n))
            assert as_partition(term_table_classes(P, n)) == as_partition(fine_spectrum(P, n))


def test_signature_equality():
    C2 = directed_cycle(2)
    a = HomSignature.of(homomorphisms(DfsTree((-1, 0, 1, 0)), C2))
    b = HomSignature.of(homomorphisms(DfsTree((-1, 0, 1, 2)), C2))
    c = HomSignature.of(homomorphisms(DfsTree((-1, 0, 0, 0)), C2))
    assert a == b and a != c and a.size == 2


def test_auto_method_and_classes():
    r = spectrum(directed_cycle(3), 5, method="auto", with_classes=True)
    assert r.values == [1, 1, 2, 5, 13]
    assert r.classes[3] == [(0, 1, 1), (0, 1, 2)]
    assert r.s(4) == 5 and r.completed == 5


def test_json_and_csv():
    r = spectrum(directed_cycle(2), 4, with_classes=True)
    data = json.loads(r.to_json())
    assert data["method"] == "hom-signature"
    assert [row["s_n"] for row in data["spectrum"]] == [1, 1, 2, 4]
    assert data["spectrum"][2]["classes"] == ["0,1,1", "0,1,2"]
    rows = list(csv.reader(io.StringIO(r.to_csv())))
    assert rows[0] == ["n", "s_n", "classes"]
    assert rows[3] == ["3", "2", "0,1,1 0,1,2"]
    plain = list(csv.reader(io.StringIO(spectrum(directed_cycle(2), 2).to_csv())))
    assert plain == [["n", "s_n"], ["1", "1"], ["2", "1"]]


def test_budget_returns_partial():
    with pytest.raises(BudgetExceeded) as exc:
        spectrum(complete_graph(3), 8, max_trees=50)
    assert exc.value.partial.values == [1] * 6  # C_6 = 132 trees exceed the cap at n=7


def test_bad_max_n():
    with pytest.raises(ValueError):
        spectrum(directed_cycle(2), 0)
