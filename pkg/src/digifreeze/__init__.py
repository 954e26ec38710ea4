"""Freezing sets for digital images in Z^2 under 4- and 8-adjacency."""

from .constructions import (CandidateSet, Claim, ClaimCheck, boundary_curves, c1_candidate, c2_candidate,
                            corner_set, theorem_claims, verify_claim)
from .convex import (ConvexityCertificate, HullPolygon, ThicknessReport, convex_hull, is_digitally_convex,
                     is_thick, thickness_readings)
from .grid import (C1, C2, Adjacency, DigitalImage, LatticePath, adjacency, are_adjacent, box,
                   closed_neighborhood, components, connected_components, is_connected, neighborhood,
                   unique_shortest_path)
from .io import ImageDocument, ParseError, emit, parse_image
from .planar import (CurveCycle, DiskDecomposition, NotADiskError, boundary, find_bounding_curves, interior,
                     interior_angle, is_closed_curve, maximal_segments, validate_bounding_curve)
from .render import Overlays, render
from .rigidity import (FreezingReport, SearchUndecided, SelfMap, find_witness, is_continuous, is_freezing_set,
                       is_minimal_freezing_set)
from .scenarios import SCENARIOS, run_scenario
from .survey import search_open_question

__version__ = "0.1.0"
