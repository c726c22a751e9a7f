"""
Bracketings, DFS trees, zag sequences and Dyck paths
====================================================

"""

# A bracketing of x1..xn is parsed into a binary term; the outermost
# parentheses may be left off.
from assocspec import parse_bracketing, format_bracketing
t = parse_bracketing("((x1((x2x3)x4))x5)(x6(x7x8))")
print(format_bracketing(t), "has", t.size, "variables")

# Its graph is a rooted tree on x1..x8 whose subtrees occupy contiguous
# index ranges.  Edges are printed 1-based.
from assocspec import bracketing_to_dfs
T = bracketing_to_dfs(t)
print("edges:", sorted((p + 1, c + 1) for p, c in T.edges))

# The depth sequence and the Dyck path determine the tree.
from assocspec import dfs_to_dyck, dyck_to_dfs, zag_to_dfs
print("depths:", T.depths)
print("dyck:  ", dfs_to_dyck(T))
assert zag_to_dfs(T.depths) == T == dyck_to_dfs(dfs_to_dyck(T))

# There are Catalan many bracketings of each size, listed here in
# lexicographic order of depth sequence.
from assocspec import enumerate_dfs_trees, dfs_to_bracketing, catalan
for T in enumerate_dfs_trees(4):
    print(T.depths, format_bracketing(dfs_to_bracketing(T)))
print([sum(1 for _ in enumerate_dfs_trees(n)) for n in range(1, 10)])
print([catalan(n - 1) for n in range(1, 10)])
