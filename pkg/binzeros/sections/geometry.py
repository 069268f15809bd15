"""
Limit curves of the zeros of binomial sections.

C_alpha is the part of the level set |z|^alpha / |1+z| = K_alpha with
|z| <= alpha/(1-alpha); C'_alpha is the part with |z| >= alpha/(1-alpha).
Both are starlike about the origin, so every point is found by solving a
one-dimensional problem along the ray of angle theta.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
import logging
import math

import mpmath as mp

from . import conf
from .bigcomplex import BigComplex, to_mpf
from .exceptions import DomainError, InsufficientDensityError

logger = logging.getLogger(__name__)

DEFAULT_ALPHA_PRECISION = 128
GUARD_BITS = 16
MIN_CURVE_POINTS = 16
BISECTION_STEPS = 80


class Branch(str, Enum):
    INNER = 'inner'
    OUTER = 'outer'
    SZEGO = 'szego'


# --- Alpha ---
@dataclass(frozen=True)
class Alpha:
    """Ratio alpha in the open interval (0, 1), kept exactly."""
    exact: Fraction
    precision_bits: int = DEFAULT_ALPHA_PRECISION

    def __post_init__(self):
        if not 0 < self.exact < 1:
            raise DomainError(
                f'alpha must lie strictly between 0 and 1, got {self.exact}',
                field='alpha',
            )

    @classmethod
    def from_ratio(cls, ratio, precision_bits=None):
        try:
            exact = Fraction(ratio)
        except (TypeError, ValueError, ZeroDivisionError):
            raise DomainError(f'{ratio!r} is not a ratio', field='alpha')
        return cls(exact, precision_bits or DEFAULT_ALPHA_PRECISION)

    @classmethod
    def parse(cls, text, precision_bits=None):
        """Accept '1/3' or '0.3333'."""
        return cls.from_ratio(str(text).strip(), precision_bits)

    @property
    def value(self):
        with mp.workprec(self.precision_bits):
            return to_mpf(self.exact)

    def with_precision(self, precision_bits):
        return Alpha(self.exact, precision_bits)

    def complement(self):
        return Alpha(1 - self.exact, self.precision_bits)

    def __str__(self):
        return str(self.exact)


# --- Constants ---
def _log_k(a):
    return a * mp.log(a) + (1 - a) * mp.log(1 - a)


def K(alpha):
    """alpha^alpha (1-alpha)^(1-alpha), in [1/2, 1)."""
    bits = alpha.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        value = mp.exp(_log_k(to_mpf(alpha.exact)))
    with mp.workprec(bits):
        return +value


def z_alpha(alpha):
    """Singular point alpha/(1-alpha) where C_alpha meets the real axis."""
    with mp.workprec(alpha.precision_bits):
        return to_mpf(alpha.exact / (1 - alpha.exact))


@lru_cache(maxsize=None)
def nu_constant(precision_bits):
    """Positive root of x e^(1+x) = 1, i.e. W(1/e)."""
    if precision_bits < 53:
        raise DomainError('nu_constant needs at least 53 bits',
                          field='precision_bits')
    with mp.workprec(precision_bits + GUARD_BITS):
        value = mp.lambertw(mp.exp(-1)).real
    with mp.workprec(precision_bits):
        return +value


@lru_cache(maxsize=None)
def X(alpha):
    """Modulus of the crossing of C_alpha with the negative real axis."""
    bits = alpha.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        a = to_mpf(alpha.exact)
        log_k = _log_k(a)

        # log form of t^alpha = K (1 - t); increasing in t on (0, 1)
        def level(t):
            return a * mp.log(t) - log_k - mp.log(1 - t)

        lower = nu_constant(bits) * a / 2
        root = _bracketed_root(level, lower, mp.mpf(1) / 2, bits)
    with mp.workprec(bits):
        return +root


def level_residual(alpha, z):
    """Signed |z|^alpha/|1+z| - K_alpha; positive outside C_alpha."""
    bits = z.precision_bits if isinstance(z, BigComplex) else \
        alpha.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        value = z.value if isinstance(z, BigComplex) else mp.mpc(z)
        a = to_mpf(alpha.exact)
        modulus = abs(value)
        if modulus == 0:
            result = -mp.exp(_log_k(a))
        else:
            result = modulus ** a / abs(1 + value) - mp.exp(_log_k(a))
    with mp.workprec(bits):
        return +result


def szego_residual(z):
    """Signed |z e^(1-z)| - 1."""
    bits = z.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        value = z.value
        result = abs(value) * mp.exp(1 - value.real) - 1
    with mp.workprec(bits):
        return +result


def w_argument(alpha, z):
    """Argument of K^-1 z^alpha/(1+z), with arg z taken in [0, 2pi)."""
    bits = z.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        value = z.value
        angle = mp.arg(value)
        if angle < 0:
            angle += 2 * mp.pi
        result = to_mpf(alpha.exact) * angle - mp.arg(1 + value)
    with mp.workprec(bits):
        return +result


# --- Root bracketing ---
def _bracketed_root(f, lo, hi, bits, steps=BISECTION_STEPS):
    """
    Root of f on [lo, hi] where f(lo) and f(hi) have opposite signs.

    Bisection narrows the bracket, the secant-type Anderson solver polishes
    it, and plain bisection finishes the job if the polish leaves the
    bracket or misses the tolerance.
    """
    f_lo = f(lo)
    if f_lo == 0:
        return lo
    rising = f_lo < 0
    for _ in range(steps):
        mid = (lo + hi) / 2
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == rising:
            lo = mid
        else:
            hi = mid

    tolerance = mp.ldexp(1, -bits)
    try:
        root = mp.findroot(f, (lo, hi), solver='anderson',
                           tol=mp.ldexp(1, -2 * bits))
        if lo <= root <= hi and abs(f(root)) < tolerance:
            return root
    except (ValueError, ZeroDivisionError):
        pass

    while hi - lo > abs(hi) * mp.ldexp(1, -bits - 4):
        mid = (lo + hi) / 2
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == rising:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


# --- Ray solving ---
def _peak_radius(a, cos_theta):
    """Maximiser of r^alpha / |1 + r e^(i theta)| along the ray."""
    b = (2 * a - 1) * cos_theta
    return (b + mp.sqrt(b * b + 4 * a * (1 - a))) / (2 * (1 - a))


def _reduce_angle(theta):
    """Map theta to [0, 2pi) and report whether it lies past pi."""
    two_pi = 2 * mp.pi
    theta = theta % two_pi
    if theta > mp.pi:
        return two_pi - theta, True
    return theta, False


def ray_point(alpha, branch, theta, precision_bits, guess=None):
    """
    The point of the requested branch on the ray of angle theta.

    alpha is ignored for the Szegő branch. guess narrows the bracket when
    a nearby radius is known.
    """
    bits = precision_bits
    with mp.workprec(bits + GUARD_BITS):
        theta, mirrored = _reduce_angle(mp.mpf(theta))
        # angles rounded at `bits` can miss pi by a few ulps
        if abs(theta - mp.pi) <= mp.ldexp(1, -(bits - 4)):
            theta = +mp.pi
        if branch == Branch.SZEGO:
            z = _szego_ray(theta, bits, guess)
        else:
            z = _level_ray(alpha, branch, theta, bits, guess)
        if mirrored:
            z = mp.conj(z)
    return BigComplex.from_value(z, bits)


def _level_ray(alpha, branch, theta, bits, guess):
    a = to_mpf(alpha.exact)
    log_k = _log_k(a)
    singular = a / (1 - a)
    cos_theta = mp.cos(theta)
    direction = _direction(theta)

    if branch == Branch.INNER:
        if theta == 0:
            return mp.mpc(singular)
        if theta == mp.pi:
            return mp.mpc(-X(alpha.with_precision(bits)))

    def level(rho):
        return (a * mp.log(rho)
                - mp.log(1 + 2 * rho * cos_theta + rho * rho) / 2
                - log_k)

    if branch == Branch.INNER:
        lo = X(alpha.with_precision(64)) / 2
        hi = min(_peak_radius(a, cos_theta), singular)
    else:
        if theta == 0:
            return mp.mpc(singular)
        if theta == mp.pi:
            lo = max(singular, 1 + mp.ldexp(1, -(bits // 4)))
        else:
            lo = max(_peak_radius(a, cos_theta), singular)
        hi = 2 * lo
        while level(hi) > 0:
            hi *= 2

    return _solve_ray(level, lo, hi, bits, guess) * direction


def _szego_ray(theta, bits, guess):
    if theta == 0:
        return mp.mpc(1)
    cos_theta = mp.cos(theta)

    # log |z e^(1-z)| along the ray, increasing on (0, 1]
    def level(rho):
        return mp.log(rho) + 1 - rho * cos_theta

    lo = nu_constant(max(bits, 53)) / 2
    hi = mp.mpf(1)
    return _solve_ray(level, lo, hi, bits, guess) * _direction(theta)


def _direction(theta):
    if theta == mp.pi:
        return mp.mpc(-1)
    return mp.expj(theta)


def _solve_ray(level, lo, hi, bits, guess):
    """Radius solving level(rho) = 0 on [lo, hi], narrowed around guess."""
    if guess is not None:
        guess = mp.mpf(guess)
        for width in (mp.mpf('1e-6'), mp.mpf('1e-3'), mp.mpf('0.05')):
            a = max(lo, guess * (1 - width))
            b = min(hi, guess * (1 + width))
            if a < b and level(a) * level(b) < 0:
                return _bracketed_root(level, a, b, bits, steps=16)
    return _bracketed_root(level, lo, hi, bits)


# --- Curve samples ---
@dataclass(frozen=True)
class CurveSample:
    """Points of one branch at uniformly spaced ray angles in [0, 2pi)."""
    alpha: Alpha
    branch: Branch
    precision_bits: int
    thetas: tuple
    points: tuple
    residuals: tuple

    def __len__(self):
        return len(self.points)

    def point_at(self, theta, guess=None):
        return ray_point(self.alpha, self.branch, theta,
                         self.precision_bits, guess)

    def residual(self, z):
        if self.branch == Branch.SZEGO:
            return szego_residual(z)
        return level_residual(self.alpha, z)

    @property
    def tolerance(self):
        with mp.workprec(self.precision_bits):
            return mp.ldexp(1, -(self.precision_bits // 2))

    def max_spacing(self):
        with mp.workprec(self.precision_bits):
            values = [z.value for z in self.points]
            return max(abs(values[i] - values[i - 1])
                       for i in range(len(values)))


def _sample(alpha, branch, m, bits):
    if m < MIN_CURVE_POINTS:
        raise DomainError(f'a curve sample needs at least '
                          f'{MIN_CURVE_POINTS} points, got {m}', field='m')
    with mp.workprec(bits):
        thetas = tuple(2 * mp.pi * j / m for j in range(m))

    points = [None] * m
    # upper half by ray solving, lower half by conjugation
    for j in range(m // 2 + 1):
        points[j] = ray_point(alpha, branch, thetas[j], bits)
    for j in range(m // 2 + 1, m):
        points[j] = points[m - j].conjugate()

    sample = CurveSample(alpha, branch, bits, thetas, tuple(points), ())
    residuals = tuple(abs(sample.residual(z)) for z in points)
    logger.debug('sampled %s branch (alpha=%s) at %d points, %d bits',
                 branch.value, alpha, m, bits)
    return CurveSample(alpha, branch, bits, thetas, tuple(points), residuals)


def sample_curve(alpha, branch=Branch.INNER, m=None, precision_bits=None):
    """m points of C_alpha (inner) or C'_alpha (outer)."""
    branch = Branch(branch)
    if branch == Branch.SZEGO:
        return sample_szego_curve(m, precision_bits)
    bits = precision_bits or alpha.precision_bits
    return _sample(alpha.with_precision(bits), branch,
                   m or conf.curve_points(), bits)


def sample_szego_curve(m=None, precision_bits=None):
    """m points of |z e^(1-z)| = 1, |z| <= 1."""
    bits = precision_bits or conf.distance_precision()
    return _sample(None, Branch.SZEGO, m or conf.curve_points(), bits)


# --- Distance ---
GOLDEN = (math.sqrt(5) - 1) / 2
GOLDEN_STEPS = 48


def distance_to_curve(z, sample, resolution=None):
    """
    Distance from z to the curve behind sample.

    The nearest sample vertex is refined by golden-section search along
    the two arcs meeting at it.
    """
    bits = sample.precision_bits
    m = len(sample)
    with mp.workprec(bits):
        target = mp.mpc(z.re, z.im)
        if resolution is not None:
            spacing = sample.max_spacing()
            resolution = mp.mpf(resolution)
            if spacing > resolution:
                required = int(mp.ceil(m * spacing / resolution))
                raise InsufficientDensityError(
                    f'sample of {m} points has spacing '
                    f'{mp.nstr(spacing, 5)} > {mp.nstr(resolution, 5)}; '
                    f'use at least {required} points',
                    required_points=required,
                )

        values = [p.value for p in sample.points]
        distances = [abs(target - v) for v in values]
        j = min(range(m), key=distances.__getitem__)
        best = distances[j]
        if best == 0:
            return best

        step = 2 * mp.pi / m
        center = sample.thetas[j]
        radius = abs(values[j])
        for lo, hi in ((center - step, center), (center, center + step)):
            best = min(best, _golden_arc(sample, target, lo, hi, radius))
        return best


def _golden_arc(sample, target, lo, hi, guess):
    def distance(theta):
        return abs(target - sample.point_at(theta, guess).value)

    return golden_section_minimum(distance, lo, hi)


def golden_section_minimum(f, lo, hi, steps=GOLDEN_STEPS):
    """Smallest value of a unimodal f on [lo, hi], endpoints included."""
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(steps):
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
    return min(f1, f2, f(lo), f(hi))


# --- Quantised points ---
def curve_points(alpha, n, phase=0):
    """
    Points of C_alpha where arg(K^-1 z^alpha/(1+z)) = 2 pi p/n - phase.

    One point for each integer p whose target lies in (0, 2 pi alpha).
    The argument increases monotonically from 0 to 2 pi alpha as theta
    runs over (0, 2 pi).
    """
    if n < 2:
        raise DomainError(f'curve_points needs n >= 2, got {n}', field='n')
    bits = alpha.precision_bits
    with mp.workprec(bits + GUARD_BITS):
        a = to_mpf(alpha.exact)
        phase = mp.mpf(phase)
        two_pi = 2 * mp.pi
        top = two_pi * a

        # w-argument as a function of the ray angle
        def angle(theta):
            z = ray_point(alpha, Branch.INNER, theta, bits + GUARD_BITS).value
            return a * theta - mp.arg(1 + z)

        points = []
        first = int(mp.floor(phase * n / two_pi))
        last = int(mp.ceil((top + phase) * n / two_pi))
        for p in range(first, last + 1):
            target = two_pi * p / n - phase
            if not 0 < target < top:
                continue
            theta = _bracketed_root(lambda t: angle(t) - target,
                                    mp.mpf(0), two_pi, bits, steps=24)
            points.append(ray_point(alpha, Branch.INNER, theta, bits))
    return points
