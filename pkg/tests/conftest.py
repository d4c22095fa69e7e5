import numpy as np
import pytest

import effvec as ev

# The 3x3 corner-perturbed matrix whose efficient vectors are fully known.
M3_CORNER_CSV = """\
1,1,3/2
1,1,1
2/3,1,1
"""

# 5x5 matrix used for extension-interval and family-construction checks.
M5_BUILD_CSV = """\
1,1,9,4,1/2
1,1,1,4,3
1/9,1,1,1,1/3
1/4,1/4,1,1,2
2,1/3,3,1/2,1
"""

# 5x5 benchmark matrix with known per-subset deviation norms.
M5_BENCH_CSV = """\
1,9/5,6/5,12,6
5/9,1,4/5,100,5
5/6,5/4,1,17/10,6
1/12,1/100,10/17,1,3
1/6,1/5,1/6,1/3,1
"""

# 8x8 benchmark matrix.
M8_BENCH_CSV = """\
1,9/5,6/5,12,6,2,5,3
5/9,1,4/5,1/10,6,23/10,1/2,43/10
5/6,5/4,1,17/10,6,1/5,50,3/10
1/12,10,10/17,1,3,12,25,13/10
1/6,1/6,1/6,1/3,1,21/10,2,3
1/2,10/23,5,1/12,10/21,1,1,3
1/5,2,1/50,1/25,1/2,1,1,3
1/3,10/43,10/3,10/13,1/3,1/3,1/3,1
"""

# Nearly consistent 5x5 matrix: all subsets perform about the same.
M5_NEAR_CSV = """\
1,1,1,11/10,1
1,1,9/10,1,1
1,10/9,1,1,11/10
10/11,1,1,1,1
1,1,10/11,1,1
"""


@pytest.fixture(scope="session")
def m3_corner():
    return ev.parse_matrix_csv(M3_CORNER_CSV)


@pytest.fixture(scope="session")
def m5_build():
    return ev.parse_matrix_csv(M5_BUILD_CSV)


@pytest.fixture(scope="session")
def m5_bench():
    return ev.parse_matrix_csv(M5_BENCH_CSV)


@pytest.fixture(scope="session")
def m8_bench():
    return ev.parse_matrix_csv(M8_BENCH_CSV)


@pytest.fixture(scope="session")
def m5_near():
    return ev.parse_matrix_csv(M5_NEAR_CSV)


@pytest.fixture(scope="session")
def m4_sub(m5_build):
    """4x4 principal submatrix of the build matrix, dropping index 5."""
    return ev.principal_submatrix(m5_build, [1, 2, 3, 4])


def random_matrix(rng, n, lo=0.05, hi=20.0):
    """Random reciprocal matrix for property tests."""
    return ev.random_pc_uniform_upper(n, lo, hi, rng)


def random_weights(rng, n, spread=2.0):
    return np.exp(rng.uniform(-spread, spread, n))
