"""Associative spectra of graph algebras of finite digraphs."""

from .algebra import (INF, HomSet, collapse_on_walk, eval_bracketing, homomorphisms,
                      product, satisfies_identity, term_operation)
from .classify import (AntiassocReport, SpectrumType, TreePairParams, UndirectedClass,
                       classify_undirected, is_antiassociative, is_associative,
                       tree_pair_params, witness_identity, witness_trees)
from .digraph import (Digraph, SccDecomposition, WhirlCert, directed_cycle,
                      directed_path, has_inter_scc_path, longest_pleasant_path,
                      parse_digraph, scc, undirected_shape, whirl_certificate)
from .errors import (AssocSpecError, BracketingSyntaxError, BudgetExceeded,
                     GraphFormatError, InvalidStructureError)
from .formulas import (bounded_height_count, level_equivalence_count, modular_catalan,
                       path_spectrum, path_with_loop_spectrum,
                       three_vertex_special_spectrum, two_vertex_spectrum)
from .spectrum import (HomSignature, SpectrumResult, fine_spectrum, leaf_classes,
                       leaf_equivalence_count, parity_class_count, parity_classes,
                       spectrum, spectrum_via_term_tables)
from .trees import (Bracketing, DfsTree, Leaf, Node, bracketing_to_dfs, catalan,
                    depth_sequence, dfs_to_bracketing, dfs_to_dyck, dyck_to_dfs,
                    enumerate_dfs_trees, format_bracketing, parse_bracketing, zag_to_dfs)

__all__ = [
    "AntiassocReport",
    "AssocSpecError",
    "bounded_height_count",
    "Bracketing",
    "bracketing_to_dfs",
    "BracketingSyntaxError",
    "BudgetExceeded",
    "catalan",
    "classify_undirected",
    "collapse_on_walk",
    "depth_sequence",
    "dfs_to_bracketing",
    "dfs_to_dyck",
    "DfsTree",
    "Digraph",
    "directed_cycle",
    "directed_path",
    "dyck_to_dfs",
    "enumerate_dfs_trees",
    "eval_bracketing",
    "fine_spectrum",
    "format_bracketing",
    "GraphFormatError",
    "has_inter_scc_path",
    "homomorphisms",
    "HomSet",
    "HomSignature",
    "INF",
    "InvalidStructureError",
    "is_antiassociative",
    "is_associative",
    "Leaf",
    "leaf_classes",
    "leaf_equivalence_count",
    "level_equivalence_count",
    "longest_pleasant_path",
    "modular_catalan",
    "Node",
    "parity_class_count",
    "parity_classes",
    "parse_bracketing",
    "parse_digraph",
    "path_spectrum",
    "path_with_loop_spectrum",
    "product",
    "satisfies_identity",
    "scc",
    "SccDecomposition",
    "spectrum",
    "spectrum_via_term_tables",
    "SpectrumResult",
    "SpectrumType",
    "term_operation",
    "three_vertex_special_spectrum",
    "tree_pair_params",
    "TreePairParams",
    "two_vertex_spectrum",
    "undirected_shape",
    "UndirectedClass",
    "whirl_certificate",
    "WhirlCert",
    "witness_identity",
    "witness_trees",
    "zag_to_dfs",
]

__version__ = "0.1.0"
