"""Motion planners on spaces with a free involution, the broken-path
algebra over the deck group, and GF(2) cup-length lower bounds for the
number of planner domains.
"""

from .geom import (
    ARITH_TOL,
    TOL,
    ConstantPath,
    GroupElement,
    IDENTITY,
    OrbitPoint,
    Path,
    SIGMA,
    SpherePoint,
    SphereGeodesic,
    TorusPoint,
    TorusRotate,
    act_path,
    concat,
    normalize_angle,
    orbit_dist,
    path_from_json,
    path_to_json,
    point_dist,
    project,
    sigma,
    split_half,
    sup_distance,
)
from .torus import TorusQuery, classify, plan, section
from .sphere import Frame, SphereQuery, classify_sphere, make_frame, plan_sphere
from .broken import (
    BrokenPath,
    OrdinaryBrokenPath,
    iota,
    phi,
    phi_inv,
    q_map,
    retract,
    stabilize_f,
    translation_tau,
)
from .gf2 import (
    kernel,
    kernel_cup_length,
    klein_ring,
    one_pi_star,
    pi_star,
    tensor,
    torus_ring,
)
from .harness import (
    Report,
    check_partition,
    check_sections,
    probe_continuity,
    run_identity_suite,
)

__version__ = "0.1.0"

__all__ = [
    "ARITH_TOL",
    "TOL",
    "ConstantPath",
    "GroupElement",
    "IDENTITY",
    "OrbitPoint",
    "Path",
    "SIGMA",
    "SpherePoint",
    "SphereGeodesic",
    "TorusPoint",
    "TorusRotate",
    "act_path",
    "concat",
    "normalize_angle",
    "orbit_dist",
    "path_from_json",
    "path_to_json",
    "point_dist",
    "project",
    "sigma",
    "split_half",
    "sup_distance",
    "TorusQuery",
    "classify",
    "plan",
    "section",
    "Frame",
    "SphereQuery",
    "classify_sphere",
    "make_frame",
    "plan_sphere",
    "BrokenPath",
    "OrdinaryBrokenPath",
    "iota",
    "phi",
    "phi_inv",
    "q_map",
    "retract",
    "stabilize_f",
    "translation_tau",
    "kernel",
    "kernel_cup_length",
    "klein_ring",
    "one_pi_star",
    "pi_star",
    "tensor",
    "torus_ring",
    "Report",
    "check_partition",
    "check_sections",
    "probe_continuity",
    "run_identity_suite",
]
