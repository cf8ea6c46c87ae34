"""Bundled example registers.

GALOIS_A, GALOIS_B and FIBONACCI are three equivalent 4-bit registers:
FIBONACCI is the plain configuration with all feedback on the top bit,
GALOIS_A spreads one stage of it down to bit 2 (terminal bit 2), and
GALOIS_B pushes one product-term further down to bit 1 (terminal bit 1).
They drive the ``demo`` CLI command and recur throughout the tests.

ROTATION is the pure 4-bit cyclic shift; it is not equivalent to the trio
and serves as the standard negative example.
"""

from .register import Nlfsr

GALOIS_A = Nlfsr.parse(
    """
    n = 4
    f3 = x0 + x1
    f2 = x3 + x1 + x0*x1
    f1 = x2
    f0 = x1
    """
)

GALOIS_B = Nlfsr.parse(
    """
    n = 4
    f3 = x0 + x1
    f2 = x3 + x0*x1
    f1 = x2 + x0
    f0 = x1
    """
)

FIBONACCI = Nlfsr.parse(
    """
    n = 4
    f3 = x0 + x1 + x2 + x1*x2
    f2 = x3
    f1 = x2
    f0 = x1
    """
)

ROTATION = Nlfsr.parse(
    """
    n = 4
    f3 = x0
    f2 = x3
    f1 = x2
    f0 = x1
    """
)
