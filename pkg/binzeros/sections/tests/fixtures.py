"""Frozen reference values."""
from fractions import Fraction

# C(30, 10)
C_30_10 = 30045015

# Zero of erfc nearest the origin (upper half plane)
CHI = (-1.354810128, 1.991466843)
CHI_TOLERANCE = 1e-8

# Leading digits of W(1/e)
NU_LEADING = '0.278'

# Lower bound on min |z| of rescaled zeros in the Szegő regime
SZEGO_ETA = Fraction(1, 4)
SZEGO_MODULUS_SLACK = 1e-10

ALPHAS = [Fraction(k, 10) for k in range(1, 10)]
