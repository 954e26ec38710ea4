"""The notched rectangle [0,3] x [0,6] minus (3,3), under both adjacencies.

Shows the six-point c1 freezing set, what goes wrong when a point is dropped,
and the 17-point c2 freezing set.
"""

from digifreeze import C1, C2, Overlays, boundary, find_witness, is_minimal_freezing_set, render
from digifreeze.scenarios import CORNER_SET_C1, notched_rectangle

D = notched_rectangle()
print(render(D, Overlays(candidate=CORNER_SET_C1, label="a")))

rep = is_minimal_freezing_set(D, C1, CORNER_SET_C1)
print(f"c1: {len(CORNER_SET_C1)} points, {rep.status}, {rep.minimal_status}")

f = find_witness(D, C1, CORNER_SET_C1[1:])
print("dropping (0,0) lets this map through:")
print(render(D, Overlays(candidate=CORNER_SET_C1[1:], witness=f)))

B = [p for p in boundary(D) if p != (2, 3)]
rep = is_minimal_freezing_set(D, C2, B)
print(f"c2: boundary minus (2,3), {len(B)} points, {rep.status}, {rep.minimal_status}")
