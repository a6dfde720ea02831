"""Walk through the four graph transformations on small hand-made graphs.

Run: python3 demos/01_transformations.py
"""

from bredux.classes import gen_spider
from bredux.graph import are_isomorphic, cycle_graph, star_graph
from bredux.io import serialize
from bredux.transforms import complement, k_complete, k_extract, line_graph, line_root, r_contract, r_expand


def show(title, g):
    print(f"-- {title}")
    print(serialize(g))
    print()


claw = star_graph(3)
spider = gen_spider((2, 2, 2))

show("spider with three legs of length 2", spider)
net = line_graph(spider)
show("its line graph: a triangle with a pendant leaf on each corner", net)

# The same net arises by blowing the claw's centre up into a triangle.
show("R applied to the claw", r_expand(claw))
print("R(claw) isomorphic to L(spider)?", are_isomorphic(r_expand(claw), net))
print("contracting the triangle gives back a claw?", are_isomorphic(r_contract(net), claw))
print()

show("complement of the claw: triangle plus an isolated vertex", complement(claw))

# K(G) is the complete graph with weight 0 on edges of G and 1 elsewhere.
c5 = cycle_graph(5)
show("weighted completion of C5", k_complete(c5))
print("k_extract undoes it:", k_extract(k_complete(c5)) == c5)

# K3 is the line graph of both K3 and the claw; restricting the root to
# spider forests picks the claw.
print("root of K3 inside T:", serialize(line_root(line_graph(claw), "t")).replace("\n", " | "))
