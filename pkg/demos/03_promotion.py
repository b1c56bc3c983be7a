"""Rectangular row-strict tableaux: the path bijection and promotion.

Promotion deletes the 1s, slides each next value left then up while
relabelling down, and refills the freed corner of the last column.  Under
the bijection with dominant paths it is exactly rotation.
"""
from minuscule import (
    RowStrictTableau,
    WeightSequence,
    build_root_system,
    enumerate_paths,
    path_to_tableau,
    promote,
    rotate,
    tableau_to_path,
)


def show(t, label):
    print(label)
    for row in t.rows:
        print("   ", " ".join(f"{x:2d}" for x in row))


a2 = build_root_system("A", 2)
seq = WeightSequence(a2, ((1, 0), (1, 0), (0, 1), (1, 0), (1, 0)))

for p in enumerate_paths(seq):
    t = path_to_tableau(p)
    show(t, f"path {p.points} maps to")
    show(promote(t), "promotion gives")
    lhs = promote(t).rows
    rhs = path_to_tableau(rotate(p)).rows
    print("   equals the tableau of the rotated path:", lhs == rhs)
    print()

t = RowStrictTableau(((1, 3), (2, 4)))
orbit = [t]
while True:
    t = promote(t)
    if t.rows == orbit[0].rows:
        break
    orbit.append(t)
print(f"promotion orbit of [[1,3],[2,4]] has size {len(orbit)}")
print("round trip through the path model:",
      tableau_to_path(orbit[0]).points)
