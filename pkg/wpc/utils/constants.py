# WP_Constants is a library of utilities for weak parallelogram laws in L^p
#
# MIT License
#
# Copyright (c) 2026 WP_Constants contributors
# Author: WP_Constants contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

# Numerical defaults

BOUNDARY_DELTA = 1e-8
GRID_POINTS = 4096
T_TOL = 1e-12
VALUE_RTOL = 1e-14
GOLDEN_WIDTH = 1e-8
MAX_NEWTON_STEPS = 20
MAX_REFINEMENTS = 200
DEFAULT_SLACK = 1e-9
ORTHOGONALITY_TOL = 1e-8
BJ_T_TOL = 1e-12
SAMPLE_CHUNK = 1024
WITNESS_INFLATION = 1e-3
CURVE_T_MAX = 0.999
EXTREMAL_GRID_POINTS = 10000
SUITE_DIMENSIONS = (1, 2, 3, 4, 8)

# Random vector model
ZERO_PROBABILITY = 0.2
PARETO_INDEX = 2.5
PARETO_CAP = 1e6

# Exit codes
EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_NON_CONVERGENCE = 3
EXIT_USAGE = 64

# Sampling stream identifiers
stream_vector_pairs = 1
stream_hanner = 2
stream_clarkson = 3
stream_pythagorean = 4
stream_uwp_duality = 5
stream_nj = 6
stream_james = 7
stream_chain = 8

# Report keys
report_config = "config"
report_config_p = "p"
report_config_r = "r"
report_config_dim = "dim"
report_config_samples = "samples"
report_config_seed = "seed"
report_config_slack = "slack"
report_config_constant = "constant"
report_config_convention = "convention"
report_suites = "suites"
report_suite_name = "name"
report_suite_pairs_tested = "pairsTested"
report_suite_worst_defect = "worstDefect"
report_suite_worst_witness = "worstWitness"
report_suite_passed = "passed"
report_suite_detail = "detail"
report_adjudication = "adjudication"
report_adjudication_paper = "paperConvention"
report_adjudication_duality = "dualityConvention"
report_adjudication_supremum = "extremalSupremum"
report_adjudication_paper_gap = "paperGap"
report_adjudication_duality_gap = "dualityGap"
report_adjudication_verdict = "verdict"
report_passed = "passed"
report_fingerprint = "fingerprint"

# Constant result keys
result_p = "p"
result_r = "r"
result_q = "q"
result_r_prime = "rPrime"
result_law = "law"
result_convention = "convention"
result_value = "value"
result_argmin_t = "argminT"
result_lower_bound = "lowerBound"
result_upper_bound = "upperBound"
result_method = "method"
result_iterations = "iterations"
result_achieved_tol = "achievedTol"
result_dual_values = "dualValues"

# Derived constants
POLISH_SWEEPS = 3
POLISH_WIDTH = 0.5
JAMES_DIM = 2
DERIVED_R_STEPS = 9
DERIVED_SLACK = 1e-6

derived_p = "p"
derived_nj_upper_bound = "njUpperBound"
derived_nj_bounds = "njBounds"
derived_james_upper_bounds = "jamesUpperBounds"
derived_nj_estimate = "njEstimate"
derived_james_estimate = "jamesEstimate"
derived_samples = "samples"
derived_seed = "seed"
derived_dim = "dim"
derived_breaches = "breaches"
derived_bound_part = "part"
derived_bound_source_law = "sourceLaw"
derived_bound_r = "r"
derived_bound_constant = "constant"
derived_bound_value = "bound"
derived_bound_variant = "variant"
derived_bound_asserted = "asserted"

# Verification suites
PYTHAGOREAN_PAIRS = 1000
CHAIN_PAIRS = 1000
MONOTONE_T_POINTS = 50
MONOTONE_R_POINTS = 11
MONOTONE_TOL = 1e-12
K_GRID_POINTS = 2001
K_T_RANGE = 10.0
K_SYMMETRY_RTOL = 1e-10
IDENTITY_RTOL = 1e-11
ADJUDICATION_TOL = 1e-6
