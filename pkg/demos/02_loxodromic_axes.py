"""Loxodromic words and their axes, checked corner by corner.

For the path a-b-c-d the complement graph is connected, so a closed walk in
it visits every generator.  The resulting word translates along an axis
whose corners can all be certified locally.
"""

from artin_cube import acyl_witness, parse
from artin_cube.cube_paths import UP, EdgePath, Step, SymbolicVertex, certify_geodesic, hyperplane_sequence
from artin_cube.witness import check_word

p4 = parse("vertices: a b c d; edges: a-b:3 b-c:2 c-d:4")

aw = acyl_witness(p4)
print("g =", " ".join(aw.g.letters))
print("h =", " ".join(aw.h_letters), "(the first letter repeated)")

print("\nOne period of g's axis, starting at A_{}:")
for v in aw.g.axis.vertices(p4):
    print("  ", v)

print("\nHyperplane types crossed:", " ".join(hyperplane_sequence(aw.g.axis)))
cert = certify_geodesic(p4, aw.g.axis_segment(2))
print("Two periods, corner by corner:")
for c in cert.corners[:6]:
    print(f"  corner {c.index}: {c.labels[0]} {c.dirs[0]} / {c.labels[1]} {c.dirs[1]} -> {c.reason}")
print("  ...")
print("Verdict:", cert.verdict)

checks = check_word(p4, aw.g)
print("\nPredicates:", {k: v for k, v in vars(checks).items()})

print("\nWhere the axes of g and h part ways:")
for note in aw.divergence:
    print(f"  at {note.at}: label {note.label} leads to {note.g_target} vs {note.h_target}")

print("\nA graph with a bad corner: walking up a then up b inside the triangle")
tri = parse("vertices: a b c; edges: a-b:2 b-c:2 a-c:2")
bad = EdgePath(SymbolicVertex(), (Step("a", UP), Step("b", UP)))
print("  ", certify_geodesic(tri, bad).verdict, "-", certify_geodesic(tri, bad).failing()[0].reason)
