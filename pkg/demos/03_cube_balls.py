"""Explicit balls in the clique-cube complex of right-angled Artin groups.

Cosets are stored in a canonical form, so two different words for the same
coset land on the same vertex.  The link of A_{} inside the ball is then
compared with the flag complex of the graph.
"""

import tempfile
from pathlib import Path

from artin_cube import build_ball, canonical_coset, parse, verify_link_base
from artin_cube.ball import ball_to_dot, fundamental_domain

single = parse("vertices: s")
ball = build_ball(single, radius=2, word_budget=3)
print("One generator: A_{s} is a hub with spokes down to the cosets s^n A_{}")
print("  ", ", ".join(map(str, ball.vertices)))

square = parse("vertices: s t; edge: s-t:2")
print("\nTwo commuting generators: 't s A_{t}' and 's A_{t}' name the same coset:",
      canonical_coset(square, "t s", ["t"]) == canonical_coset(square, "s", ["t"]))
b = build_ball(square, 2)
print("Radius 2 ball:", b.f_vector()[0], "vertices,", len(b.edges), "edges,", len(b.cubes[2]), "square")

paw_ra = parse("vertices: a b c d; edges: a-b:2 b-c:2 a-c:2 c-d:2")
for radius in (2, 3):
    rep = verify_link_base(paw_ra, build_ball(paw_ra, radius))
    status = "isomorphic" if rep.isomorphic else f"missing {sorted(map(sorted, rep.missing))}"
    print(f"\nRadius {radius}: link of A_{{}} vs flag complex -> {status}")

domain = fundamental_domain(parse("vertices: a b c d; edges: a-b:3 b-c:3 a-c:3 c-d:2"))
print("\nThe cosets A_T alone form a fundamental domain with f-vector", domain.f_vector())
print("Outside the finite-type part:", [str(v) for v in domain.vertices if not domain.deligne[v]])

out = Path(tempfile.gettempdir()) / "paw_ball.dot"
out.write_text(ball_to_dot(build_ball(paw_ra, 3)))
print("\nDOT drawing of the radius-3 ball written to", out)
