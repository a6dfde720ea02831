"""Apply each reduction to one instance, then run a small verification sweep.

Run: python3 demos/04_reductions.py
"""

from bredux.graph import cycle_graph
from bredux.reductions import REDUCTIONS, apply, describe_instance, invert, verify_instance, verify_sweep

c5 = cycle_graph(5)


def flat(inst):
    return {k: v.replace("\n", " | ") if isinstance(v, str) else v for k, v in describe_instance(inst).items()}

for rid, r in REDUCTIONS.items():
    instances = list(r.source_instances(c5))
    w = instances[min(2, len(instances) - 1)]
    y = apply(r, w)
    print(f"{rid:<10} {r.source} -> {r.target}")
    print(f"           in:  {flat(w)}")
    print(f"           out: {flat(y)}")
    print(f"           answers agree: {verify_instance(r, w)}, inverse recovers input: {invert(r, y) == w}")
print()

# A lighter sweep than the default: 50 samples and smaller class budgets.
rep = verify_sweep("hc2tsp", max_n=8, samples=50, seed=7, closure_budget=8, weighted_closure_budget=7)
print(f"hc2tsp sweep: {rep.exhaustive_count} exhaustive + {rep.sampled_count} sampled instances, "
      f"{len(rep.violations)} answer violations")
for c in rep.closure:
    print(f"  closure {c.class_id.label}: {c.members} members, {len(c.violations)} violations")
