"""
Exact counting of complex zeros and poles in rectangles.
"""

from rectwind.cauchy import PolyPair, ind_interval, ind_point, inversion_residual, sign_at, var_ab, var_at
from rectwind.counting import (
    PointClass,
    WeightedCount,
    classify_point,
    count_weighted,
    count_weighted_even,
    vertex_valuations,
)
from rectwind.isolation import IsolatingBox, count_in, isolate, root_bound
from rectwind.parser import parse_expr, parse_function, parse_real_poly
from rectwind.poly import AlgebraicRoot, BivarComplexPoly, ComplexPoly, RealPoly, isolate_real_roots
from rectwind.product import additivity_defect, aux_product_sides, bad_number_report
from rectwind.scalars import GaussianRational, I, Rational, div
from rectwind.winding import RationalFunction, Rectangle, edge_restrictions, wind_w, wind_w_raw_sum, wind_W
