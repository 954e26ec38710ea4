"""A convex thick disk and the two curve constructions built on it."""

from digifreeze import (C1, C2, Overlays, c1_candidate, c2_candidate, is_digitally_convex,
                        is_minimal_freezing_set, is_thick, maximal_segments, render)
from digifreeze.scenarios import convex_pentagon

D = convex_pentagon()
cert = is_digitally_convex(D)
dec = cert.curve
segs = maximal_segments(dec)
print("hull vertices:", cert.hull.vertices)
print("angles:", dict(segs.angles))
print("thick:", is_thick(dec).thick)

for label, cand, adj in (("a", c1_candidate(dec), C1), ("b", c2_candidate(dec), C2)):
    rep = is_minimal_freezing_set(D, adj, cand.points)
    print(render(D, Overlays(curve=dec.curve.points, candidate=cand.points, label=label)))
    print(f"{adj}: {len(cand)} points, {rep.status}, {rep.minimal_status}\n")
