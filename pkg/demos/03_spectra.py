"""
Associative spectra of small digraphs
=====================================

"""

# s_n counts the distinct term operations among all bracketings of size n.
from assocspec import Digraph, directed_cycle, directed_path, spectrum
print("2-cycle:      ", spectrum(directed_cycle(2), 8).values)
print("3-cycle:      ", spectrum(directed_cycle(3), 8).values)
print("path of len 2:", spectrum(directed_path(2), 8).values)

# The closed forms agree with brute force.
from assocspec.formulas import cycle_family, path_family, modular_catalan
print(cycle_family(3).values(8))
print(path_family(2).values(8))
print([modular_catalan(3, n) for n in range(8)])

# Two independent engines: hom-set signatures and full value tables.
loop_edge = Digraph.from_edges(2, {(0, 0), (0, 1)})
print(spectrum(loop_edge, 6, method="hom").values)
print(spectrum(loop_edge, 6, method="table").values)

# The classes themselves.  For the loop edge they are the leaf sets.
from assocspec import fine_spectrum
for cls in fine_spectrum(loop_edge, 4):
    print([T.depths for T in cls], "leaves", sorted(i + 1 for i in cls[0].leaves))

# Output formats used by the command line.
print(spectrum(directed_cycle(2), 5).to_csv())
