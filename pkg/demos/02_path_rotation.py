"""Dominant lattice paths with minuscule steps, and the rotation bijection.

A path lists the partial sums of its steps; every partial sum stays
dominant and the walk returns to the origin.  Rotation drops the first
step, translates, straightens the dangling end by reflections, and closes
the loop again.
"""
from minuscule import WeightSequence, build_root_system, enumerate_paths, orbit_structure, rotate

a1 = build_root_system("A", 1)
seq = WeightSequence(a1, ((1,),) * 6)

paths = enumerate_paths(seq)
print(f"paths of type omega^6 in A1: {len(paths)} (the ballot sequences of length 6)")
for p in paths:
    print("  ", [x for (x,) in p.points])

print("\none full rotation orbit:")
p = paths[1]
for _ in range(len(seq)):
    print("  ", [x for (x,) in p.points])
    p = rotate(p)

structure = orbit_structure(seq, 1)
print("\norbit sizes:", sorted(len(o) for o in structure.orbits))
print("fixed points of each rotation power:", structure.fixed_counts)

d4 = build_root_system("D", 4)
vec = d4.fundamental_weight(1)
d4_paths = enumerate_paths(WeightSequence(d4, (vec,) * 4))
print(f"\nD4 vector-representation paths: {len(d4_paths)}")
for p in d4_paths:
    print("  middle points:", p.points[1])
