"""A tour of one small defining graph: a triangle with a pendant edge.

Run with ``python3 demos/01_graph_anatomy.py``.
"""

from artin_cube import classify, enumerate_cliques, flag_complex, is_fc_type, is_finite_type, parse
from artin_cube.flag_links import spherical_vertex_distance

paw = parse("""
vertices: a b c d
edges: a-b:3 b-c:3 a-c:3 c-d:2
""")

print("The graph has", len(paw), "generators and", len(paw.edges), "labeled edges.")
cls = classify(paw)
print(f"Vertex {cls.star_center} is joined to every other vertex, so the graph is a join:",
      " * ".join("{" + ",".join(f) + "}" for f in cls.join_factors))

print("\nEvery clique spans a special subgroup A_T. Which ones are of finite type?")
for clique in enumerate_cliques(paw):
    verdict = is_finite_type(paw, clique)
    tags = " x ".join(tag for _, tag in verdict.irreducible_components) or "trivial group"
    mark = "maximal" if clique.maximal else ""
    print(f"  {str(clique):10} {'finite' if verdict.finite else 'infinite':8} {tags:14} {mark}")

fc = is_fc_type(paw)
print("\nFC-type?", fc.fc, "- the all-3 triangle is the affine diagram", fc.offending_cliques)

link = flag_complex(paw)
print("\nThe link of A_{} is the flag complex, f-vector", link.f_vector())
print("Edges there have length pi/2; a and d are",
      spherical_vertex_distance(link, "a", "d"), "quarter turns apart.")
