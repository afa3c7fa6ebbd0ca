import pytest

from bettibound.constraints import build_spec
from bettibound.macaulay import HilbertPolynomial

# The worked five-variable example: constant polynomial 49, h(6) pinned to 41,
# and lower bounds on the first differences in degrees 3 through 6.
WORKED = dict(
    num_vars=5,
    hf_lower={6: 41},
    hf_upper={6: 41},
    diff_lower=[None, None, None, 8, 8, 5, 5],
)
WINNER = (1, 5, 11, 21, 30, 36, 41, 46, 49, 49)


def worked_spec():
    return build_spec(polynomial=HilbertPolynomial.constant(49), **WORKED)


@pytest.fixture(scope="session")
def worked():
    return worked_spec()
