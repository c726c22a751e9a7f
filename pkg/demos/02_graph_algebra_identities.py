"""
Identities in a graph algebra
=============================

"""

# The algebra of a digraph lives on its vertices plus an absorbing
# element INF: x*y is x when x -> y is an edge and INF otherwise.
from assocspec import Digraph, INF, eval_bracketing, parse_bracketing
G = Digraph.from_edges(2, {(0, 1), (1, 0)}, labels=["a", "b"])
left = parse_bracketing("x1(x2x3)")
right = parse_bracketing("(x1x2)x3")
print(eval_bracketing(G, left, [0, 1, 0]), eval_bracketing(G, right, [0, 1, 0]))
assert eval_bracketing(G, right, [0, 1, 0]) is INF

# An identity holds exactly when the two term trees have the same
# homomorphisms into the graph.
from assocspec import bracketing_to_dfs, homomorphisms, satisfies_identity
for term in (left, right):
    H = homomorphisms(bracketing_to_dfs(term), G)
    print(term.size, "variables:", sorted(H))
print("associative?", satisfies_identity(G, left, right))

# Depth sequences congruent mod 2 give an identity of the directed 2-cycle.
u = parse_bracketing("(x1(x2x3))x4")
v = parse_bracketing("x1(x2(x3x4))")
print(bracketing_to_dfs(u).depths, bracketing_to_dfs(v).depths, satisfies_identity(G, u, v))
