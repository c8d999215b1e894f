"""Test helpers: brute-force oracles and small weight factories."""

from fractions import Fraction

from superhw import Weight


def w21(delta, r):
    """sl(2|1) weight with the given conformal labels."""
    delta, r = Fraction(delta), Fraction(r)
    return Weight((delta, 0), (-(delta + r) / 2,))
