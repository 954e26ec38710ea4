"""Convex disks whose thickness depends on which bounding curve is read.

Runs the 4 x 4 search and prints the disk that has both thick and
non-thick bounding curves.
"""

from digifreeze import DigitalImage, Overlays, render, search_open_question, thickness_readings

rep = search_open_question(4, 4)
print(rep.summary)
for pts in rep.universal_counterexamples:
    D = DigitalImage.from_points(pts)
    readings = thickness_readings(D)
    bad = [(dec, v) for dec, v in readings.per_curve if not v.thick]
    print(f"{len(readings.per_curve)} bounding curves, {len(bad)} fail the thickness clauses")
    print(render(D, Overlays(curve=readings.witness.curve.points)))
    print("a thick one above; the failing ones:\n")
    for dec, verdict in bad:
        print(render(D, Overlays(curve=dec.curve.points)))
        print(f"simple: {dec.curve.simple}, violations: {verdict.violations}\n")
