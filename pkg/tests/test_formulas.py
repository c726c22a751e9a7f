import pytest

from assocspec.digraph import Digraph, all_digraphs, directed_cycle, directed_path
from assocspec.errors import InvalidStructureError
from assocspec.formulas import (TWO_VERTEX_CASES, bounded_height_closed_form,
                                bounded_height_count, bounded_height_recurrence,
                                bounded_height_table, cycle_family, fibonacci,
                                level_equivalence_count, modular_catalan,
                                modular_catalan_dyck, path_family, path_spectrum,
                                path_with_loop_spectrum, three_vertex_graph,
                                three_vertex_special_spectrum, truncate_tree,
                                truncate_zag, two_vertex_case, two_vertex_graph,
                                two_vertex_spectrum)
from assocspec.spectrum import spectrum
from assocspec.trees import catalan, enumerate_dfs_trees


def test_bounded_height_examples():
    assert bounded_height_count(2, 5) == 8
    assert bounded_height_count(3, 5) == 13
    assert bounded_height_count(4, 5) == 14
    assert bounded_height_count(1, 7) == 1
    assert bounded_height_count(0, 1) == 1
    assert bounded_height_count(0, 3) == 0
    assert bounded_height_count(3, 0) == 0


@pytest.mark.parametrize("h", range(0, 7))
def test_bounded_height_dp_vs_recurrence(h):
    for n in range(1, 21):
        assert bounded_height_count(h, n) == bounded_height_recurrence(h, n)


@pytest.mark.parametrize("n", range(1, 11))
def test_bounded_height_vs_enumeration(n):
    heights = [T.height for T in enumerate_dfs_trees(n)]
    for h in range(0, n + 1):
        assert bounded_height_count(h, n) == sum(1 for x in heights if x <= h)


def test_bounded_height_monotone_and_saturating():
    for n in range(1, 12):
        row = [bounded_height_count(h, n) for h in range(0, n + 2)]
        assert row == sorted(row)
        assert bounded_height_count(n - 1, n) == catalan(n - 1)


def test_closed_forms():
    for n in range(2, 16):
        assert bounded_height_closed_form(2, n) == bounded_height_count(2, n)
        assert bounded_height_closed_form(3, n) == bounded_height_count(3, n)
        assert bounded_height_closed_form(4, n) == bounded_height_count(4, n)
    with pytest.raises(ValueError):
        bounded_height_closed_form(5, 4)
    assert [fibonacci(k) for k in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert bounded_height_table([2, 3], [2, 3, 4]) == [[1, 2, 4], [1, 2, 5]]


# -- level truncation ----------------------------------------------------------

def test_level_examples():
    assert level_equivalence_count(1, 5) == 8
    assert level_equivalence_count(0, 4) == 1
    assert {truncate_zag(T.depths, 0) for T in enumerate_dfs_trees(4)} == {(0, 1, 1, 1)}
    for n in range(2, 8):
        assert level_equivalence_count(n - 2, n) == catalan(n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_truncation_on_zags_matches_trees(n):
    for h in range(0, n):
        classes = set()
        for T in enumerate_dfs_trees(n):
            U = truncate_tree(T, h)
            assert U.depths == truncate_zag(T.depths, h)
            assert U.height <= h + 1
            classes.add(U.depths)
        assert len(classes) == level_equivalence_count(h, n)


# -- modular Catalan numbers -----------------------------------------------------

def test_modular_catalan_examples():
    assert [modular_catalan(3, n) for n in range(8)] == [1, 1, 2, 5, 13, 35, 96, 267]
    assert all(modular_catalan(1, n) == 1 for n in range(10))
    assert modular_catalan(2, 3) == 4
    assert modular_catalan(3, 4) == 13


@pytest.mark.parametrize("m", range(1, 6))
def test_modular_catalan_two_methods(m):
    for n in range(0, 11):
        assert modular_catalan(m, n) == modular_catalan_dyck(m, n)


def test_modular_catalan_monotone_in_m():
    for n in range(0, 10):
        row = [modular_catalan(m, n) for m in range(1, n + 3)]
        assert row == sorted(row)
        assert modular_catalan(n + 1, n) == catalan(n)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_cycle_family_vs_spectrum(m):
    assert cycle_family(m).values(8) == spectrum(directed_cycle(m), 8).values


# -- paths ---------------------------------------------------------------------------

def test_path_examples():
    assert path_spectrum(1, 3) == 2
    assert path_spectrum(2, 3) == 2
    assert path_spectrum(2, 5) == 9
    assert path_with_loop_spectrum(1, 6) == 1
    assert path_with_loop_spectrum(2, 5) == 8
    assert path_with_loop_spectrum(3, 6) == 34


@pytest.mark.parametrize("ell", [0, 1, 2, 3])
def test_path_families_vs_spectrum(ell):
    assert path_family(ell).values(8) == spectrum(directed_path(ell), 8).values
    if ell >= 1:
        assert path_family(ell, final_loop=True).values(8) == \
            spectrum(directed_path(ell, final_loop=True), 8).values


# -- small graphs -----------------------------------------------------------------------

def test_two_vertex_examples():
    uv = lambda edges: Digraph(("u", "v"), frozenset(edges))  # noqa: E731
    assert two_vertex_spectrum(uv({(0, 1), (1, 1)})).values(6) == [1] * 6
    assert two_vertex_spectrum(uv({(0, 0), (0, 1)})).values(6) == [1, 1, 2, 4, 8, 16]
    assert two_vertex_spectrum(uv({(0, 1), (1, 0), (1, 1)})).values(6) == [1, 1, 2, 5, 14, 42]


def test_two_vertex_cases_cover_all_graphs():
    names = {two_vertex_case(G) for G in all_digraphs(2)}
    assert names == {c[0] for c in TWO_VERTEX_CASES}
    with pytest.raises(InvalidStructureError):
        two_vertex_case(directed_cycle(3))
    with pytest.raises(InvalidStructureError):
        two_vertex_spectrum("nonsense")


def test_two_vertex_table_n5():
    for name, _, _ in TWO_VERTEX_CASES:
        assert spectrum(two_vertex_graph(name), 5).values == two_vertex_spectrum(name).values(5)


def test_three_vertex_examples():
    assert three_vertex_special_spectrum("out-star-with-sink-loops")(5) == 8
    assert three_vertex_special_spectrum("loop-path-2cycle")(6) == 16
    assert three_vertex_special_spectrum("loop-path-2cycle")(2) == 1
    for case in ("out-star-with-sink-loops", "loop-path-2cycle"):
        assert spectrum(three_vertex_graph(case), 7).values == \
            three_vertex_special_spectrum(case).values(7)
    with pytest.raises(InvalidStructureError):
        three_vertex_special_spectrum("other")


def test_closed_form_rejects_n0():
    with pytest.raises(ValueError):
        cycle_family(2)(0)
