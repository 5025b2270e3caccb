"""Side-by-side reports for a few classic shapes.

Verdicts are one-sided: a graph that fails a hypothesis gets NOT DECIDED,
never NO.
"""

from artin_cube import analyze, parse
from artin_cube.report import emit

shapes = {
    "path": "vertices: a b c d; edges: a-b:3 b-c:2 c-d:4",
    "square": "vertices: a b c d; edges: a-b:2 b-c:2 c-d:2 a-d:2",
    "pentagon": "vertices: a b c d e; edges: a-b:3 b-c:3 c-d:3 d-e:3 a-e:3",
    "paw": "vertices: a b c d; edges: a-b:3 b-c:3 a-c:3 c-d:2",
}

for name, text in shapes.items():
    print(f"===== {name} =====")
    print(emit(analyze(parse(text)), "text"))
