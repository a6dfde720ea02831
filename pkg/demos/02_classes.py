"""Members of the boundary classes, and what deleting a vertex does to them.

Run: python3 demos/02_classes.py
"""

from bredux.classes import ClassId, check_hereditary_closure, gen_caterpillar, gen_spider, is_member
from bredux.graph import delete_vertex, star_graph
from bredux.io import serialize
from bredux.transforms import r_expand

spider = gen_spider((3, 1, 1))
caterpillar = gen_caterpillar((0, 1, 1, 1, 0))
print("spider (3,1,1) in T:", is_member("t", spider), "| in Q:", is_member("q", spider))
print("caterpillar with three hairs in T:", is_member("t", caterpillar), "| in Q:", is_member("q", caterpillar))
print("star with four leaves in T:", is_member("t", star_graph(4)))
print()

for c in ClassId:
    budget = 10 if c.weighted else 12
    rep = check_hereditary_closure(c, budget)
    print(f"{c.label:<9} budget {budget:>2}: {rep.members:>5} members, {rep.checks:>6} deletions, "
          f"{len(rep.violations)} leave the class")
print()

# The triangle-expansion class is not closed under deletion. Expanding the
# claw gives the net; dropping one pendant leaf gives the bull, and the bull
# has a triangle whose corner has no outside neighbour, so no subcubic graph
# expands to it.
net = r_expand(star_graph(3))
leaf = next(v for v in range(net.n) if net.degree(v) == 1)
bull = delete_vertex(net, leaf)
print("net in RQ:", is_member("rq", net))
print("net minus a leaf in RQ:", is_member("rq", bull))
print(serialize(bull))
