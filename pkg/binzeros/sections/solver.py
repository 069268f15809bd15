"""
All complex zeros of an ExactPolynomial at arbitrary precision.

Aberth–Ehrlich simultaneous iteration on the monic polynomial, started on
the circles of the coefficient Newton polygon. The iteration runs with
guard bits on top of the requested precision so that the stopping rule
is driven by convergence, not by evaluation noise.
"""
from dataclasses import dataclass
from fractions import Fraction
import logging

import mpmath as mp

from . import conf
from .bigcomplex import BigComplex, to_mpf
from .exactpoly import SECTION, closed_form_zeros
from .exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

MIN_SOLVER_PRECISION = 53
GUARD_BITS = 64
# Correction threshold is |z| * 2^(-p + STOP_SLACK)
STOP_SLACK = 16
# Extra start rotation; starts symmetric about the real axis stall on
# even polynomials
START_TWIST = Fraction(2, 5)


@dataclass(frozen=True)
class ZeroSet:
    """Every zero of one polynomial with backward-error certificates."""
    poly: object
    precision_bits: int
    zeros: tuple
    residuals: tuple
    warnings: tuple = ()
    iterations: int = 0

    @property
    def params(self):
        return self.poly.params

    @property
    def tolerance(self):
        with mp.workprec(self.precision_bits):
            return mp.ldexp(1, -(self.precision_bits // 2))

    def values(self):
        return [z.value for z in self.zeros]


@dataclass(frozen=True)
class ResidualCheck:
    passed: bool
    worst: mp.mpf


@dataclass(frozen=True)
class VietaCheck:
    passed: bool
    sum_error: mp.mpf
    product_error: mp.mpf


def backward_residual(coeffs, z):
    """|p(z)| / sum |a_k| |z|^k at the current context precision."""
    value = mp.mpc(0)
    scale = mp.mpf(0)
    modulus = abs(z)
    for c in reversed(coeffs):
        value = value * z + c
        scale = scale * modulus + abs(c)
    if scale == 0:
        return mp.mpf(0)
    return abs(value) / scale


# --- Solver ---
class AberthSolver:
    """
    Single-use Aberth–Ehrlich iteration for one polynomial.

    Distinct instances share nothing and may run in parallel processes.
    """

    def __init__(self, poly, precision_bits, max_iterations=None):
        if poly.degree < 1:
            raise DomainError('find_zeros needs degree >= 1',
                              field='degree')
        self.poly = poly
        self.precision_bits = precision_bits
        self.max_iterations = max_iterations or conf.max_iterations()
        largest = max(abs(c) for c in poly.coeffs)
        self.working_bits = precision_bits + largest.bit_length() + GUARD_BITS
        self._used = False

    def _initial_guesses(self):
        degree = self.poly.degree
        twist = to_mpf(START_TWIST)
        guesses = []
        # one circle per hull edge; the angular offset spirals the circles
        for first, radius, count in start_circles(self.poly.coeffs):
            for j in range(count):
                turn = mp.mpf(j) / count + mp.mpf(first) / degree
                guesses.append(radius * mp.expj(2 * mp.pi * turn + twist))
        return guesses

    def solve(self):
        if self._used:
            raise RuntimeError('AberthSolver instances are single-use')
        self._used = True

        degree = self.poly.degree
        bits = self.precision_bits
        with mp.workprec(self.working_bits):
            lead = mp.mpf(self.poly.coeffs[-1])
            monic = [mp.mpf(c) / lead for c in self.poly.coeffs]
            exact = [mp.mpf(c) for c in self.poly.coeffs]
            threshold = mp.ldexp(1, -bits + STOP_SLACK)
            z = self._initial_guesses()

            active = set(range(degree))
            for iteration in range(1, self.max_iterations + 1):
                # converged zeros stay frozen but still repel the others
                for i in sorted(active):
                    zi = z[i]
                    value, slope = _horner_with_derivative(monic, zi)
                    if value == 0:
                        active.discard(i)
                        continue
                    if slope == 0:
                        # nudge off a critical point
                        z[i] = zi * (1 + threshold) + threshold
                        continue
                    ratio = value / slope
                    repulsion = mp.fsum(1 / (zi - z[j])
                                        for j in range(degree) if j != i)
                    step = ratio / (1 - ratio * repulsion)
                    z[i] = zi - step
                    if abs(step) <= abs(z[i]) * threshold:
                        active.discard(i)
                if not active:
                    break
            else:
                residuals = [backward_residual(exact, zi) for zi in z]
                raise ConvergenceError(
                    f'no convergence after {self.max_iterations} '
                    f'iterations at {bits} bits; retry at higher precision',
                    best_iterate=[BigComplex.from_value(zi, bits)
                                  for zi in z],
                    residuals=residuals,
                )

            logger.debug('degree %d converged in %d iterations (%d bits)',
                         degree, iteration, self.working_bits)
            z = _symmetrize(z, threshold)
            residuals = [backward_residual(exact, zi) for zi in z]

        return _finish(self.poly, z, residuals, bits, iteration)


def start_circles(coeffs):
    """
    Start circles from the upper convex hull of the points (k, log2 |a_k|).

    A hull edge from k0 to k1 gives (k0, radius, k1 - k0) with radius
    (|a_k0| / |a_k1|)^(1/(k1 - k0)). Zeros at the origin get a circle
    inside the smallest radius.
    """
    with mp.workprec(MIN_SOLVER_PRECISION):
        points = [(k, mp.log(abs(mp.mpf(c)), 2))
                  for k, c in enumerate(coeffs) if c]
    hull = []
    for point in points:
        while len(hull) >= 2 and _turn(hull[-2], hull[-1], point) >= 0:
            hull.pop()
        hull.append(point)

    circles = [
        (k0, mp.power(2, (y0 - y1) / (k1 - k0)), k1 - k0)
        for (k0, y0), (k1, y1) in zip(hull, hull[1:])
    ]
    low = hull[0][0]
    if low:
        inner = circles[0][1] / 2 if circles else mp.mpf(1)
        circles.insert(0, (0, inner, low))
    return circles


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _horner_with_derivative(coeffs, z):
    value = coeffs[-1]
    slope = mp.mpc(0)
    for c in reversed(coeffs[:-1]):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def _symmetrize(z, threshold):
    """Snap near-real zeros to the axis and pair conjugates exactly."""
    snapped = []
    for zi in z:
        if abs(zi.imag) <= abs(zi) * threshold:
            zi = mp.mpc(zi.real, 0)
        snapped.append(zi)

    pairing = mp.sqrt(threshold)
    upper = [zi for zi in snapped if zi.imag > 0]
    lower = [zi for zi in snapped if zi.imag < 0]
    real = [zi for zi in snapped if zi.imag == 0]
    if len(upper) != len(lower):
        return snapped
    matched = []
    remaining = list(lower)
    for zi in upper:
        partner = min(remaining, key=lambda w: abs(w - mp.conj(zi)))
        if abs(partner - mp.conj(zi)) > pairing * max(abs(zi), 1):
            return snapped
        remaining.remove(partner)
        # average the pair so both members agree to the last bit
        mean = (zi + mp.conj(partner)) / 2
        matched.extend([mean, mp.conj(mean)])
    return real + matched


def _finish(poly, z, residuals, bits, iterations):
    tolerance = mp.ldexp(1, -(bits // 2))
    with mp.workprec(bits):
        zeros = [BigComplex(+zi.real, +zi.imag, bits) for zi in z]
        residuals = [+res for res in residuals]
    order = sorted(range(len(zeros)), key=lambda i: zeros[i].sort_key())
    zeros = tuple(zeros[i] for i in order)
    residuals = tuple(residuals[i] for i in order)

    worst = max(residuals)
    if worst >= tolerance:
        raise ConvergenceError(
            f'worst residual {mp.nstr(worst, 5)} is above 2^-{bits // 2}',
            best_iterate=zeros, residuals=residuals,
        )
    warnings = _cluster_warnings(zeros, bits)
    return ZeroSet(poly, bits, zeros, residuals, tuple(warnings), iterations)


def _cluster_warnings(zeros, bits):
    warnings = []
    with mp.workprec(bits):
        gap = mp.ldexp(1, -(bits // 4))
        values = [z.value for z in zeros]
        # zeros are sorted by real part, so each scan stops at the first
        # real gap wider than the threshold
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                if values[j].real - values[i].real >= gap:
                    break
                if abs(values[i] - values[j]) < gap:
                    message = (f'zeros {i} and {j} are closer than '
                               f'2^-{bits // 4}; possible multiple zero')
                    logger.warning(message)
                    warnings.append(message)
    return warnings


def find_zeros(poly, precision_bits=None, max_iterations=None):
    """Every zero of poly, sorted by (Re, Im), with residual certificates."""
    if poly.degree < 1:
        raise DomainError('find_zeros needs degree >= 1', field='degree')
    n = poly.params.n if poly.params is not None else poly.degree
    bits = precision_bits or conf.default_precision(n)
    if bits < MIN_SOLVER_PRECISION:
        raise DomainError(
            f'precision_bits must be at least {MIN_SOLVER_PRECISION}',
            field='precision_bits',
        )

    p = poly.params
    if poly.family == SECTION and p.r == p.n:
        zeros = tuple(closed_form_zeros(p, bits))
        message = f'-1 is a zero of multiplicity {p.n}'
        logger.info('B_{%d,%d}: %s', p.r, p.n, message)
        return ZeroSet(poly, bits, zeros, (mp.mpf(0),) * p.n, (message,), 0)

    if poly.degree == 1:
        with mp.workprec(bits):
            root = -mp.mpf(poly.coeffs[0]) / poly.coeffs[1]
        with mp.workprec(2 * bits):
            residual = backward_residual([mp.mpf(c) for c in poly.coeffs],
                                         mp.mpc(root))
        return ZeroSet(poly, bits, (BigComplex(root, mp.mpf(0), bits),),
                       (+residual,), (), 0)

    return AberthSolver(poly, bits, max_iterations).solve()


# --- Certificates ---
def verify_residuals(zs):
    """Re-evaluate every zero at doubled precision."""
    bits = zs.precision_bits
    with mp.workprec(2 * bits):
        exact = [mp.mpf(c) for c in zs.poly.coeffs]
        residuals = [backward_residual(exact, mp.mpc(z.re, z.im))
                     for z in zs.zeros]
        tolerance = mp.ldexp(1, -(bits // 2))
        worst = max(residuals) if residuals else mp.mpf(0)
        return ResidualCheck(bool(worst < tolerance), worst)


def vieta_check(zs):
    """Sum and product of the zeros against the exact coefficient ratios."""
    coeffs = zs.poly.coeffs
    degree = zs.poly.degree
    bits = zs.precision_bits
    with mp.workprec(2 * bits):
        values = [mp.mpc(z.re, z.im) for z in zs.zeros]
        total = mp.fsum(values)
        product = mp.fprod(values)
        exact_sum = to_mpf(Fraction(-coeffs[degree - 1], coeffs[degree]))
        exact_product = to_mpf(Fraction((-1) ** degree * coeffs[0],
                                        coeffs[degree]))
        tolerance = mp.ldexp(1, -(bits // 2) + 8)
        sum_error = _relative_error(total, exact_sum)
        product_error = _relative_error(product, exact_product)
        passed = sum_error <= tolerance and product_error <= tolerance
        return VietaCheck(bool(passed), sum_error, product_error)


def _relative_error(approx, exact):
    if exact == 0:
        return abs(approx)
    return abs(approx - exact) / abs(exact)


def is_conjugate_closed(zs):
    """Every non-real zero has its conjugate in the set."""
    bits = zs.precision_bits
    with mp.workprec(bits):
        tolerance = mp.ldexp(1, -(bits // 2))
        values = zs.values()
        for z in values:
            if z.imag == 0:
                continue
            target = mp.conj(z)
            if min(abs(w - target) for w in values) > tolerance:
                return False
        return True
