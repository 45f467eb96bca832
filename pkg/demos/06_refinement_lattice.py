"""
The refinement order on all theories of one group
=================================================

Theories of a fixed group are partially ordered by refinement: T1 <= T2 when
every class of T1 sits inside a class of T2.  The finest theory (singleton
classes) is the bottom, the two-class theory is the top, and everything else
hangs in between.  This script draws that poset for two groups as DOT text,
ready for graphviz.
"""

from supercharacters import (
    GroupSpec,
    all_scts_cp_c2_c2,
    all_theories,
    lattice_dot,
    refinement_edges,
    refines,
)

# The five theories of the Klein four-group form a diamond: bottom, top, and
# the three middle theories that pair one involution against the other two.
records = all_theories(GroupSpec.klein())
print(lattice_dot(records))

# refinement_edges gives the raw covering pairs if you want the poset
# structure without the drawing.  Indices follow the canonical order:
# coarser theories (fewer classes) first.
theories = [r.theory for r in records]
print("covering pairs:", refinement_edges(theories))

# A quick poset sanity check on a bigger family: refinement is transitive,
# and the finest theory refines everything.
records = all_theories(GroupSpec.cp_c2(3))
theories = [r.theory for r in records]
finest = min(theories, key=lambda t: -len(t.classes.blocks))
print("\nC3xC2 has", len(theories), "theories;",
      "finest refines all:", all(refines(finest, t) for t in theories))

# For the order-12 family the picture is bigger (76 nodes); write it to a
# file and render it with `dot -Tsvg refinement.dot -o refinement.svg`.
records, _ = all_scts_cp_c2_c2(3)
dot = lattice_dot(records)
with open("refinement.dot", "w") as fh:
    fh.write(dot)
print(f"\nwrote refinement.dot: {len(records)} nodes, "
      f"{dot.count('->')} covering edges")
