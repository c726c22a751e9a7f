"""
Associative, antiassociative, or in between
===========================================

"""

# A graph algebra is associative when every edge joins vertices with
# identical out-neighbourhoods.
from assocspec import Digraph, is_associative, directed_cycle
K = Digraph.from_edges(2, {(0, 0), (0, 1), (1, 0), (1, 1)})
print(is_associative(K), is_associative(directed_cycle(2)))

# Symmetric graphs fall into three spectrum types.
from assocspec import classify_undirected
path3 = Digraph.from_edges(3, {(0, 1), (1, 0), (1, 2), (2, 1)})
triangle = Digraph.from_edges(3, {(a, b) for a in range(3) for b in range(3) if a != b})
for g in (K, path3, triangle):
    uc = classify_undirected(g)
    print(uc.kind.value, [uc.predicted(n) for n in range(1, 7)])

# Antiassociativity depends on strongly connected components.  If every
# nontrivial component is a whirl and none reaches another, a concrete
# identity is produced and checked.
from assocspec import is_antiassociative, format_bracketing
r = is_antiassociative(directed_cycle(3))
print(r.verdict, "P =", r.P, "M =", r.M)
print(" = ".join(format_bracketing(t) for t in r.witness), r.witness_verified)

both_loops = Digraph.from_edges(2, {(0, 0), (0, 1), (1, 1)})
print(is_antiassociative(both_loops).to_json())

# Parameters of a pair of trees that bound which graphs satisfy the pair.
from assocspec import tree_pair_params, zag_to_dfs
print(tree_pair_params(zag_to_dfs((0, 1, 2, 1)), zag_to_dfs((0, 1, 2, 3))))
