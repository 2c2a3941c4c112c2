"""Triangle geometry of cevians, conjugate points, orthology and homology.

>>> t = make_triangle(Point(0, 0), Point(4, 0), Point(0, 3))
>>> triangle_center(t, CenterKind.NAGEL)
Point(x=2.0, y=1.0)
"""
from .constructions import (
    CenterKind,
    CevianFeet,
    Triangle,
    all_centers,
    cevian_feet,
    circumcircle,
    contact_triangle,
    excircle,
    extouch_triangle,
    incircle,
    isogonal_cevian_foot,
    isogonal_conjugate,
    isotomic_conjugate,
    isotomic_point_on_side,
    make_triangle,
    medial_triangle,
    orthic_triangle,
    pedal_triangle,
    triangle_center,
)
from .errors import *  # noqa: F401,F403
from .kernel import (
    DEFAULT_TOL,
    AtInfinity,
    Circle,
    Line,
    Orientation,
    Point,
    Tolerance,
    circle_through,
    concyclic,
    foot_of_perpendicular,
    intersect_lines,
    line_circle_intersections,
    line_through,
    median_length_squared,
    orientation,
    power_of_point,
)
from .relations import (
    carnot_sum,
    ceva_product,
    homology,
    is_bilogical,
    is_orthohomological,
    orthohomological_pedal_check,
    orthology,
    signed_ratio,
    six_point_circle,
    steiner_check,
    terquem,
)

__version__ = "0.1.0"
