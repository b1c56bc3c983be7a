"""Tensor crystals of minuscule orbits and rotation via the commutor.

A minuscule crystal is just its weight orbit, so a tensor element is a
list of orbit weights.  Rotation of the invariant elements is built from
the involution that swaps highest and lowest weight elements; it must
agree with path rotation through the obvious bijection, and does.
"""
from minuscule import (
    WeightSequence,
    build_root_system,
    commutor_rotate,
    crystal_op,
    enumerate_paths,
    invariant_elements,
    path_bijection,
    rotate,
    schutzenberger,
)

a2 = build_root_system("A", 2)
seq = WeightSequence(a2, ((1, 0), (0, 1), (1, 0), (0, 1)))

elements = invariant_elements(seq)
print(f"invariant elements of the A2 crystal (omega_1, omega_2)^2: {len(elements)}")
for b in elements:
    print("  ", b.factors)

b = elements[0]
print("\nlowering at index 1 leaves invariance:", crystal_op("lower", 1, b))
print("(None is the crystal zero: invariant elements are killed by nothing lower)")

xi = schutzenberger(b)
print("\ninvolution of the first element:", xi.factors)
print("applying it twice returns the element:",
      schutzenberger(xi).factors == b.factors)

print("\ncommutor rotation agrees with path rotation through the bijection:")
for p in enumerate_paths(seq):
    via_crystal = commutor_rotate(path_bijection(p)).factors
    via_paths = path_bijection(rotate(p)).factors
    print(f"  {p.points}: {via_crystal == via_paths}")
