"""Exact solvers on a few classic graphs, with certificates.

Run: python3 demos/03_solvers.py
"""

from bredux.graph import Graph, cycle_graph, path_graph, sample_graph
from bredux.solvers import (
    chromatic_number,
    clique_cover_number,
    has_bounded_degree_spanning_tree,
    has_hamiltonian_cycle,
    independence_number,
    subgraph_isomorphic,
    tsp_decision,
    vertex_cover_number,
)
from bredux.transforms import k_complete

petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                 + [(i, i + 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])

r = independence_number(petersen)
print(f"Petersen: alpha = {r.optimum}, e.g. {r.certificate}")
print(f"Petersen: vertex cover = {vertex_cover_number(petersen).optimum}")
r = chromatic_number(petersen)
print(f"Petersen: chi = {r.optimum}, colouring {r.certificate}")
print(f"Petersen: Hamiltonian cycle? {has_hamiltonian_cycle(petersen).decision}")
r = has_bounded_degree_spanning_tree(petersen, 2)
print(f"Petersen: spanning tree with max degree 2? {r.decision}")
print()

c7 = cycle_graph(7)
print(f"C7: clique cover = {clique_cover_number(c7).optimum}, blocks {clique_cover_number(c7).certificate}")
print(f"C7 contains P4 as a subgraph: {subgraph_isomorphic(c7, path_graph(4)).certificate}")
print()

# A zero-cost tour of K(G) is exactly a Hamiltonian cycle of G.
for name, g in [("C7", c7), ("P7", path_graph(7)), ("G(9, 0.5)", sample_graph(9, 0.5, 1))]:
    r = tsp_decision(k_complete(g), 0)
    print(f"{name:<10} cheapest tour of K(G) costs {r.optimum}; Hamiltonian: {has_hamiltonian_cycle(g).decision}")
