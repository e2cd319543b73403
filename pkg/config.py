"""
Configuration for the parallel-volume concavity toolkit
"""
import os

from dotenv import load_dotenv

load_dotenv()

# Tolerances (relative to the largest sampled value)
CLOSED_FORM_TOL = float(os.getenv("PARCAVE_TOL", "1e-9"))
GRID_TOL = 1e-4
SUITE_TOL = 1e-7

# Concavity sampling
LAMBDA_SAMPLES = (0.25, 0.5, 0.75)
DEFAULT_GRID = 41
DENSE_SWEEP_FACTOR = 4
DENSE_SWEEP_STRIDES = (1, 2, 4, 8)
MAX_TRIPLE_NODES = 121
MAX_REPORTED_VIOLATIONS = 50

# Finite differences
FD_SECOND_STEP = 1e-4
FD_FORWARD_STEP = 4e-3  # one-sided oracles at t = 0+
FD_GROWTH_STEP = 2e-3  # forward differences of μ(A + tB) - μ(A)
FD_AGREEMENT_TOL = 1e-6  # closed form against finite differences, relative
BREAKPOINT_ATOL = 1e-12

# Grid guards
HT_BOUNDARY_TOL = 1e-12  # h_t at the grid edge, relative to max h_t
MU_BOUNDARY_TOL = 1e-10  # mass of the edge cells of a normalized measure
NORMALIZATION_TOL = 1e-10
CONVEXITY_TOL = 1e-9
BL_SLACK_TOL = 1e-6  # variance inequality verdicts

# Hopf-Lax
HOPF_LAX_BLOCK = 512  # output rows per dense block
TAIL_QUAD_LIMIT = 200
TAIL_QUAD_EPSREL = 1e-10

# Counterexamples
RASTER_MAX_H = 1.0 / 128
RASTER_DEFAULT_H = 1.0 / 256
RASTER_TIMES = (1.0 / 32, 1.0 / 16, 1.0 / 8)
RASTER_REL_TOL = 0.01
CHECK_WINDOW = (0.0, 0.4)  # s-concavity window of the closed-form counterexamples
SUITE_DENOMINATOR = 8  # rational endpoints k/8 in the random suites
SUITE_SUPPORT = (0.0, 8.0)
SUITE_MAX_COMPONENTS = 5
SUITE_S_VALUES = (-1.0, -0.5, 0.0, 0.25, 0.5)
SUITE_GAMMAS = (1.0, 2.0, 3.0)
SUITE_JUNCTION_S = (-1.0, 0.0, 0.5)
BALL_POINT_DISTANCE = 2.0
BALL_REPORT_T = 0.1  # n >= 3: the quantity vanishes at t = 0
ASYMMETRIC_DEFAULT_A = 0.01

# Output
SCHEMA_VERSION = 1
CSV_FLOAT_FORMAT = ".17g"
SVG_HASHSALT = "parcave"
