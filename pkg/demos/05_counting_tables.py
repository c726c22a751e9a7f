"""
Counting trees of bounded height
================================

"""

# T_h(n) counts DFS trees of size n with height at most h.  The dynamic
# programme, the linear recurrence and the closed forms agree.
from assocspec.formulas import (bounded_height_count, bounded_height_recurrence,
                                bounded_height_closed_form)
for h in (2, 3, 4, 5):
    print(h, [bounded_height_count(h, n) for n in range(1, 13)])
assert all(bounded_height_count(h, n) == bounded_height_recurrence(h, n)
           for h in range(7) for n in range(1, 25))
print([bounded_height_closed_form(3, n) for n in range(2, 10)])

# Every digraph on two vertices, with its spectrum checked against the table.
from assocspec import spectrum
from assocspec.formulas import TWO_VERTEX_CASES, two_vertex_graph, two_vertex_spectrum
for name, edges, formula in TWO_VERTEX_CASES:
    got = spectrum(two_vertex_graph(name), 7).values
    print(f"{name:22s} {formula:8s} {got} {got == two_vertex_spectrum(name).values(7)}")

# Big integers are exact.
from assocspec import catalan
print(catalan(60))
