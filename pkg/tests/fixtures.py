"""Small complexes shared by several test modules."""

from fractions import Fraction as F

from asdcomp.complexes import complex_from_facets
from asdcomp.threshold import LengthVector, short_complex

STAR = short_complex(LengthVector([1, 1, 1, F(1, 10)]))
TRIANGLE = short_complex(LengthVector([F(29, 10), 1, 1, 1]))
PENTAGON = short_complex(LengthVector([F(1, 5), 1, 1, 1, 1]))

# seven points with {1, ..., 5} short
K7 = short_complex(LengthVector([1, 1, 1, 1, 1, 3, 3]))

# found by sweeping the n = 6 enumeration; four short facets cover every vertex twice
NON_THRESHOLD_6 = complex_from_facets(
    6, [[1, 2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 4, 5], [3, 4, 5], [2, 3, 6], [1, 4, 6]])
