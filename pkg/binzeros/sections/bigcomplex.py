"""Arbitrary-precision complex values with an explicit precision."""
from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath as mp

from .exceptions import DomainError

MIN_PRECISION = 16


def to_mpf(value):
    """Convert int, Fraction, str or mpf at the current context precision."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def decimal_digits(precision_bits):
    """Significant digits that round-trip a binary value of this precision."""
    return int(math.ceil(precision_bits * math.log10(2))) + 1


@dataclass(frozen=True)
class BigComplex:
    """Complex number whose parts carry the same explicit precision."""
    re: mp.mpf
    im: mp.mpf
    precision_bits: int

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION:
            raise DomainError(
                f'precision_bits must be at least {MIN_PRECISION}, '
                f'got {self.precision_bits}',
                field='precision_bits',
            )

    @classmethod
    def from_value(cls, value, precision_bits):
        """Round any mpmath-convertible (or Fraction) value to the precision."""
        with mp.workprec(precision_bits):
            if isinstance(value, Fraction):
                value = to_mpf(value)
            c = mp.mpc(value)
            return cls(+c.real, +c.imag, precision_bits)

    @classmethod
    def from_parts(cls, re, im, precision_bits):
        with mp.workprec(precision_bits):
            return cls(+to_mpf(re), +to_mpf(im), precision_bits)

    @property
    def value(self):
        with mp.workprec(self.precision_bits):
            return mp.mpc(self.re, self.im)

    def conjugate(self):
        # exact negation; a bare minus rounds to the global context
        return BigComplex(self.re, mp.fneg(self.im, exact=True),
                          self.precision_bits)

    def __abs__(self):
        with mp.workprec(self.precision_bits):
            return mp.hypot(self.re, self.im)

    def sort_key(self):
        return (self.re, self.im)

    def to_strings(self, digits=None):
        digits = digits or decimal_digits(self.precision_bits)
        return {
            're': mp.nstr(self.re, digits),
            'im': mp.nstr(self.im, digits),
        }

    def __str__(self):
        parts = self.to_strings(15)
        return f"({parts['re']}, {parts['im']})"
