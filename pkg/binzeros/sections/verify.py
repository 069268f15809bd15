"""
Numerical checks of the bounds, inequalities and limit statements for the
zeros of binomial sections.

Geometric margins are compared at 2^(-p/4), since they inherit the error of
the computed zeros. Inequalities evaluated straight from exact coefficients
are compared at 2^-64.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
import logging
import math

import mpmath as mp
import numpy as np

from . import conf
from .bigcomplex import BigComplex, to_mpf
from .exactpoly import (
    SECTION,
    SectionParams,
    binomial,
    build_remainder,
    build_section,
    closed_form_zeros,
    evaluate_exact,
)
from .exceptions import ConvergenceError, DomainError, HypothesisError
from .geometry import (
    Alpha,
    Branch,
    distance_to_curve,
    golden_section_minimum,
    level_residual,
    sample_curve,
    sample_szego_curve,
)
from .solver import find_zeros, is_conjugate_closed, vieta_check

logger = logging.getLogger(__name__)

INEQUALITY_TOLERANCE = mp.mpf(2) ** -64
INEQUALITY_PRECISION = 128
BOUNDARY_POINTS = 10 ** 4
# Lower bound on min |z| of rescaled Szegő-regime zeros
SZEGO_ETA = Fraction(1, 4)
HALFLINE_OFFSET = 3
REGION_SWEEP_PRECISION = 96


def margin_tolerance(precision_bits):
    return mp.ldexp(1, -(precision_bits // 4))


def sweep_precision(n):
    return max(REGION_SWEEP_PRECISION, n + 64)


def require_region_hypothesis(p):
    if not 1 <= p.r < p.n - 1:
        raise HypothesisError(
            f'zero-region bounds require 1 <= r < n-1, got {p}', field='r'
        )


def _require_section(zs):
    if zs.poly.family != SECTION or zs.params is None:
        raise DomainError('expected the zero set of a section B_{r,n}',
                          field='poly')
    return zs.params


# --- Zero region ---
@dataclass(frozen=True)
class ZeroMargins:
    """Signed margins of one zero; negative means outside the region."""
    zero: BigComplex
    outer: mp.mpf
    circle: mp.mpf
    halfplane: mp.mpf
    curve: mp.mpf

    def as_tuple(self):
        return (self.outer, self.circle, self.halfplane, self.curve)

    def passes(self, tolerance):
        return all(m >= -tolerance for m in self.as_tuple())


@dataclass(frozen=True)
class RegionReport:
    params: SectionParams
    precision_bits: int
    margins: tuple

    @property
    def tolerance(self):
        return margin_tolerance(self.precision_bits)

    @property
    def passed(self):
        return all(m.passes(self.tolerance) for m in self.margins)

    def worst(self):
        """Smallest margin of each kind over all zeros."""
        return {
            kind: min(getattr(m, kind) for m in self.margins)
            for kind in ('outer', 'circle', 'halfplane', 'curve')
        }


def region_margins(p, z):
    """Margins of z against the disk, circle, half-plane and curve bounds."""
    bits = z.precision_bits
    gamma = p.gamma
    with mp.workprec(bits):
        value = z.value
        outer = to_mpf(Fraction(p.r, p.n + 1 - p.r)) - abs(value)
        center = to_mpf(gamma * gamma / (1 - gamma * gamma))
        radius = to_mpf(gamma / (1 - gamma * gamma))
        circle = radius - abs(value - center)
        halfplane = value.real + mp.mpf(1) / 2
    curve = level_residual(Alpha(p.beta, bits), z)
    return ZeroMargins(z, outer, circle, halfplane, curve)


def check_region(zs):
    """Four signed margins for every zero of B_{r,n}, 1 <= r < n-1."""
    p = _require_section(zs)
    require_region_hypothesis(p)
    margins = tuple(region_margins(p, z) for z in zs.zeros)
    report = RegionReport(p, zs.precision_bits, margins)
    if not report.passed:
        logger.warning('zero region check failed for %s', p)
    return report


@dataclass(frozen=True)
class RegionCase:
    r: int
    n: int
    region_passed: bool
    vieta_passed: bool
    conjugate_closed: bool

    @property
    def passed(self):
        return self.region_passed and self.vieta_passed \
            and self.conjugate_closed


@dataclass(frozen=True)
class RegionSweepResult:
    n_max: int
    cases: tuple

    @property
    def passed(self):
        return all(case.passed for case in self.cases)

    def failures(self):
        return [case for case in self.cases if not case.passed]


def check_region_sweep(n_max, precision_bits=None):
    """
    Region, Vieta and conjugacy checks for every 1 <= r < n-1, n <= n_max.

    Without an explicit precision each case runs at sweep_precision(n)
    bits.
    """
    if n_max < 3:
        raise DomainError('the sweep needs n_max >= 3', field='n_max')
    cases = []
    for n in range(3, n_max + 1):
        for r in range(1, n - 1):
            zs = find_zeros(build_section(SectionParams(r, n)),
                            precision_bits or sweep_precision(n))
            cases.append(RegionCase(
                r, n,
                check_region(zs).passed,
                vieta_check(zs).passed,
                is_conjugate_closed(zs),
            ))
        logger.info('region sweep: n=%d done', n)
    return RegionSweepResult(n_max, tuple(cases))


def check_reliability_annulus(zs):
    """Zeros q = z/(1+z) of H_{r,n} lie in 1/(n-r) <= |q| <= r/(n-1)."""
    p = _require_section(zs)
    if p.r == p.n or p.n < 2:
        raise HypothesisError('the annulus needs r < n and n >= 2',
                              field='r')
    bits = zs.precision_bits
    with mp.workprec(bits):
        tolerance = margin_tolerance(bits)
        inner = to_mpf(Fraction(1, p.n - p.r))
        outer = to_mpf(Fraction(p.r, p.n - 1))
        for z in zs.zeros:
            modulus = abs(z.value / (1 + z.value))
            if modulus < inner - tolerance or modulus > outer + tolerance:
                return False
        return True


# --- Minimum modulus (positive decreasing coefficients) ---
@dataclass(frozen=True)
class MinimumModulusResult:
    passed: bool
    minimum: mp.mpf
    bound: mp.mpf


def validate_admissible(b):
    """b_0 > b_1 >= 0, b_k >= 0 and b_1 b_{k-1} - b_0 b_k >= 0."""
    b = [Fraction(x) for x in b]
    if len(b) < 2:
        raise DomainError('the sequence needs at least two terms',
                          field='b[1]')
    if not b[0] > b[1] >= 0:
        raise DomainError('b_0 > b_1 >= 0 fails', field='b[1]')
    for k in range(2, len(b)):
        if b[k] < 0:
            raise DomainError(f'b_{k} is negative', field=f'b[{k}]')
        if b[1] * b[k - 1] - b[0] * b[k] < 0:
            raise DomainError(f'b_1 b_{k - 1} - b_0 b_{k} < 0',
                              field=f'b[{k}]')
    return b


def random_admissible_sequence(rng, length):
    """Random admissible sequence with small rational terms."""
    b0 = Fraction(int(rng.integers(2, 50)))
    b1 = Fraction(int(rng.integers(0, int(b0))))
    b = [b0, b1]
    for _ in range(2, length):
        shrink = Fraction(int(rng.integers(0, 11)), 10)
        b.append(b[-1] * b1 / b0 * shrink)
    return b


def check_minimum_modulus(b, trials=BOUNDARY_POINTS):
    """
    min |f| over the closed unit disk against (b0-b1)/(b0+b1) f(1).

    f has no zeros in the disk, so its minimum modulus sits on |z| = 1.
    The boundary is scanned in float64 and the smallest samples are
    refined at full precision by golden-section search.
    """
    b = validate_admissible(b)
    if trials < 8:
        raise DomainError('at least 8 boundary points are needed',
                          field='trials')

    angles = np.linspace(0.0, 2 * np.pi, trials, endpoint=False)
    samples = np.exp(1j * angles)
    coarse = np.abs(np.polyval([float(x) for x in reversed(b)], samples))
    candidates = np.argsort(coarse)[:4]

    with mp.workprec(INEQUALITY_PRECISION):
        coeffs = [to_mpf(x) for x in b]

        def modulus(theta):
            return abs(mp.polyval(coeffs[::-1], mp.expj(theta)))

        step = 2 * mp.pi / trials
        minimum = min(modulus(0), modulus(mp.pi))
        for j in candidates:
            center = mp.mpf(float(angles[j]))
            minimum = min(minimum, golden_section_minimum(
                modulus, center - step, center + step, steps=64))
        bound = to_mpf((b[0] - b[1]) / (b[0] + b[1]) * sum(b))
        passed = minimum >= bound * (1 - INEQUALITY_TOLERANCE)
        return MinimumModulusResult(bool(passed), minimum, bound)


# --- Remainder bounds ---
@dataclass(frozen=True)
class RemainderBoundsResult:
    params: SectionParams
    samples: int
    passed: bool
    max_upper_ratio: mp.mpf
    min_lower_ratio: mp.mpf


def tail_sum(p):
    """sum_{k>r} C(n,k) beta^k (1-beta)^(n-k) with beta = r/n, exactly."""
    if p.r >= p.n:
        raise DomainError('tail_sum needs r < n', field='r')
    beta = p.beta
    return sum(
        binomial(p.n, k) * beta ** k * (1 - beta) ** (p.n - k)
        for k in range(p.r + 1, p.n + 1)
    )


def remainder_coefficients(p):
    """b_k = C(n, k+r+1) z_beta^k: R_{r,n}(z_beta w) = z_beta w g(w)."""
    if p.r >= p.n:
        raise DomainError('the remainder needs r < n', field='r')
    rho = p.z_beta
    return [binomial(p.n, k + p.r + 1) * rho ** k
            for k in range(p.n - p.r)]


def remainder_lower_ratio(p):
    """(b0-b1)/(b0+b1) = (2n-r)/(2r(n-r)+2n-3r) for the rescaled remainder."""
    if p.r >= p.n - 1:
        # a single coefficient: the ratio is 1
        return Fraction(1)
    return Fraction(2 * p.n - p.r, 2 * p.r * (p.n - p.r) + 2 * p.n - 3 * p.r)


def remainder_upper_bound(p):
    """R_{r,n}(z_beta) = K_beta^-n * tail_sum(p)."""
    return evaluate_exact(build_remainder(p), p.z_beta)


def check_remainder_bounds(p, z_samples, seed=None):
    """
    Both remainder bounds on and inside |z| = z_beta.

    Upper: |R(z)| <= R(z_beta). Lower: |R(z)| >= |z| R(z_beta) /
    ((r+1) z_beta); for beta <= 1/2 this implies the weaker form without
    the 1/z_beta factor.
    """
    if not 1 <= p.r < p.n:
        raise HypothesisError(f'remainder bounds require 1 <= r < n, got {p}',
                              field='r')
    rng = np.random.default_rng(conf.seed() if seed is None else seed)
    remainder = build_remainder(p)
    rho = p.z_beta
    upper = remainder_upper_bound(p)
    bits = max(INEQUALITY_PRECISION, conf.default_precision(p.n))

    with mp.workprec(bits):
        coeffs = [mp.mpf(c) for c in remainder.coeffs]
        rho_mp = to_mpf(rho)
        upper_mp = to_mpf(upper)
        lower_scale = upper_mp / (rho_mp * (p.r + 1))

        points = [mp.mpc(rho_mp), mp.mpc(0)]
        # half on the circle, half inside (uniform in area)
        on_circle = z_samples // 2
        angles = rng.uniform(0.0, 2 * np.pi, z_samples)
        radii = np.sqrt(rng.uniform(0.0, 1.0, z_samples))
        radii[:on_circle] = 1.0
        for t, s in zip(angles, radii):
            points.append(rho_mp * mp.mpf(float(s)) * mp.expj(mp.mpf(float(t))))

        max_upper = mp.mpf(0)
        min_lower = mp.inf
        for z in points:
            value = abs(mp.polyval(coeffs[::-1], z))
            max_upper = max(max_upper, value / upper_mp)
            if z != 0:
                min_lower = min(min_lower, value / (abs(z) * lower_scale))
        passed = (max_upper <= 1 + INEQUALITY_TOLERANCE
                  and min_lower >= 1 - INEQUALITY_TOLERANCE)
    if not passed:
        logger.warning('remainder bounds fail for %s', p)
    return RemainderBoundsResult(p, len(points), bool(passed),
                                 max_upper, min_lower)


def remainder_zero_check(p, precision_bits=None):
    """
    Zeros of R_{r,n}(z)/z lie in |z| >= (r+2)/(n-r-1).

    Returns (passed, smallest modulus). Needs r < n-1 so that R/z is not
    a constant.
    """
    if not 1 <= p.r < p.n - 1:
        raise HypothesisError(f'remainder zeros require 1 <= r < n-1, '
                              f'got {p}', field='r')
    reduced = build_remainder(p).deflate_origin()
    zs = find_zeros(reduced, precision_bits or conf.default_precision(p.n))
    bits = zs.precision_bits
    with mp.workprec(bits):
        radius = to_mpf(Fraction(p.r + 2, p.n - p.r - 1))
        smallest = min(abs(z.value) for z in zs.zeros)
        passed = smallest >= radius - margin_tolerance(bits)
    return bool(passed), smallest


# --- Convergence to the limit curve ---
@dataclass(frozen=True)
class ConvergenceRecord:
    params: SectionParams
    sup_distance: mp.mpf
    rate_statistic: mp.mpf
    singular_gap: mp.mpf
    coverage: mp.mpf


def _sweep_params(alpha, n):
    r = int(math.floor(alpha.exact * n + Fraction(1, 2)))
    if not 1 <= r < n - 1:
        raise HypothesisError(
            f'n={n} gives r={r}; convergence requires 1 <= r < n-1',
            field='ns',
        )
    return SectionParams(r, n)


def convergence_record(p, precision_bits=None, points=None):
    """
    Distance statistics of the zeros of B_{r,n} to C_{r/n}.

    sup_distance bounds how far zeros sit from the curve; coverage is the
    largest distance from a curve sample point to its nearest zero, so it
    shrinks only if the zeros fill the whole curve.
    """
    zs = find_zeros(build_section(p), precision_bits)
    beta = Alpha(p.beta)
    sample = sample_curve(beta, Branch.INNER, points or conf.curve_points(),
                          conf.distance_precision())
    bits = sample.precision_bits
    with mp.workprec(bits):
        singular = to_mpf(p.z_beta)
        log_n = mp.log(p.n)
        sup_distance = mp.mpf(0)
        rate = mp.mpf(0)
        gap = mp.inf
        values = []
        for z in zs.zeros:
            z = BigComplex.from_parts(z.re, z.im, bits)
            d = distance_to_curve(z, sample)
            offset = abs(z.value - singular)
            sup_distance = max(sup_distance, d)
            rate = max(rate, d * offset * p.n / log_n)
            gap = min(gap, offset * mp.sqrt(p.n))
            values.append(z.value)
        coverage = max(min(abs(point.value - v) for v in values)
                       for point in sample.points)
    logger.info('convergence %s: sup distance %s, coverage %s', p,
                mp.nstr(sup_distance, 8), mp.nstr(coverage, 8))
    return ConvergenceRecord(p, sup_distance, rate, gap, coverage)


def _convergence_task(args):
    return convergence_record(*args)


def convergence_sweep(alpha, ns, precision_bits=None, workers=None,
                      points=None, allow_large_n=False):
    """One ConvergenceRecord per n, with r = round(alpha n)."""
    limit = conf.sweep_max_n()
    if not allow_large_n and any(n > limit for n in ns):
        raise DomainError(f'n above {limit} needs allow_large_n', field='ns')
    tasks = [(_sweep_params(alpha, n), precision_bits, points) for n in ns]
    workers = workers or conf.workers()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_convergence_task, tasks))
    else:
        records = [_convergence_task(task) for task in tasks]
    for n in sweep_inversions(records):
        logger.warning('sup distance does not decrease at n=%d', n)
    return records


def sweep_inversions(records):
    """Values of n at which sup_distance fails to decrease."""
    return [
        records[i].params.n
        for i in range(1, len(records))
        if records[i].sup_distance >= records[i - 1].sup_distance
    ]


# --- Zero of erfc nearest the origin ---
SEARCH_RECTANGLE = ((-3, 0), (0, 3))
LEAF_SIZE = Fraction(3, 8)


def _winding_number(f, lower_left, upper_right, samples=16):
    (x0, y0), (x1, y1) = lower_left, upper_right
    x0, y0, x1, y1 = (to_mpf(v) for v in (x0, y0, x1, y1))
    corners = [mp.mpc(x0, y0), mp.mpc(x1, y0), mp.mpc(x1, y1),
               mp.mpc(x0, y1), mp.mpc(x0, y0)]
    total = mp.mpf(0)
    for a, b in zip(corners, corners[1:]):
        for k in range(samples):
            total += _arg_change(f, a + (b - a) * k / samples,
                                 a + (b - a) * (k + 1) / samples)
    return int(mp.nint(total / (2 * mp.pi)))


def _arg_change(f, a, b, depth=0):
    change = mp.arg(f(b) / f(a))
    if abs(change) > mp.pi / 4 and depth < 12:
        mid = (a + b) / 2
        return (_arg_change(f, a, mid, depth + 1)
                + _arg_change(f, mid, b, depth + 1))
    return change


def _zero_boxes(f, lower_left, upper_right):
    """Leaves of a quadtree holding at least one zero of f."""
    if _winding_number(f, lower_left, upper_right) <= 0:
        return []
    (x0, y0), (x1, y1) = lower_left, upper_right
    if x1 - x0 <= LEAF_SIZE:
        return [(lower_left, upper_right)]
    xm, ym = (x0 + x1) / 2, (y0 + y1) / 2
    boxes = []
    for ll, ur in (((x0, y0), (xm, ym)), ((xm, y0), (x1, ym)),
                   ((x0, ym), (xm, y1)), ((xm, ym), (x1, y1))):
        boxes.extend(_zero_boxes(f, ll, ur))
    return boxes


def erfc_zero(precision_bits):
    """Zero of erfc closest to the origin, in the upper half plane."""
    if precision_bits < 53:
        raise DomainError('erfc_zero needs at least 53 bits',
                          field='precision_bits')
    with mp.workprec(53):
        (x0, x1), (y0, y1) = SEARCH_RECTANGLE
        boxes = _zero_boxes(mp.erfc, (Fraction(x0), Fraction(y0)),
                            (Fraction(x1), Fraction(y1)))
    if not boxes:
        raise ConvergenceError('no erfc zero found in the search rectangle')

    zeros = []
    bits = precision_bits + 16
    with mp.workprec(bits):
        scale = 2 / mp.sqrt(mp.pi)
        for (xa, ya), (xb, yb) in boxes:
            z = mp.mpc(to_mpf((xa + xb) / 2), to_mpf((ya + yb) / 2))
            for _ in range(100):
                step = mp.erfc(z) / (-scale * mp.exp(-z * z))
                z -= step
                if abs(step) <= abs(z) * mp.ldexp(1, -precision_bits):
                    break
            else:
                continue
            if abs(mp.erfc(z)) < mp.ldexp(1, -(precision_bits // 2)):
                zeros.append(z)
    if not zeros:
        raise ConvergenceError('Newton iteration for erfc did not converge')
    chi = min(zeros, key=abs)
    if chi.imag < 0:
        chi = mp.conj(chi)
    return BigComplex.from_value(chi, precision_bits)


# --- Zeros near the singular point ---
@dataclass(frozen=True)
class SingularRecord:
    params: SectionParams
    predicted: BigComplex
    nearest: BigComplex
    deviation: mp.mpf
    predicted_gap: mp.mpf
    singular_gap: mp.mpf


def singular_prediction(p, chi):
    """z_beta + sqrt(2 beta/(1-beta)^3) chi / sqrt(n)."""
    bits = chi.precision_bits
    beta = p.beta
    with mp.workprec(bits):
        scale = mp.sqrt(to_mpf(2 * beta / (1 - beta) ** 3))
        value = to_mpf(p.z_beta) + scale * chi.value / mp.sqrt(p.n)
    return BigComplex.from_value(value, bits)


def singular_check(p, chi, precision_bits=None):
    """|z* - predicted| sqrt(n) for the zero z* nearest the prediction."""
    if not 1 <= p.r < p.n - 1:
        raise HypothesisError(f'the singular point needs 1 <= r < n-1, '
                              f'got {p}', field='r')
    zs = find_zeros(build_section(p), precision_bits)
    predicted = singular_prediction(p, chi)
    bits = min(zs.precision_bits, chi.precision_bits)
    with mp.workprec(bits):
        target = predicted.value
        nearest = min(zs.zeros, key=lambda z: abs(z.value - target))
        root_n = mp.sqrt(p.n)
        singular = to_mpf(p.z_beta)
        deviation = abs(nearest.value - target) * root_n
        predicted_gap = abs(target - singular) * root_n
        singular_gap = abs(nearest.value - singular) * root_n
    return SingularRecord(p, predicted, nearest, deviation,
                          predicted_gap, singular_gap)


# --- Szegő regime ---
@dataclass(frozen=True)
class SzegoRecord:
    params: SectionParams
    sup_distance: mp.mpf
    max_modulus: mp.mpf
    min_modulus: mp.mpf


def szego_check(r, n, precision_bits=None, points=None):
    """Distance of the zeros of B_{r,n} rescaled by (n-r)/r to the Szegő curve."""
    p = SectionParams(r, n)
    if r == n:
        raise HypothesisError('the Szegő regime needs r < n', field='r')
    zs = find_zeros(build_section(p), precision_bits)
    sample = sample_szego_curve(points or conf.curve_points())
    bits = sample.precision_bits
    scale = Fraction(n - r, r)
    with mp.workprec(bits):
        sup_distance = mp.mpf(0)
        moduli = []
        for z in zs.zeros:
            with mp.workprec(zs.precision_bits):
                rescaled = z.value * to_mpf(scale)
            w = BigComplex.from_value(rescaled, bits)
            moduli.append(abs(w))
            sup_distance = max(sup_distance, distance_to_curve(w, sample))
    logger.info('Szegő %s: sup distance %s', p, mp.nstr(sup_distance, 8))
    return SzegoRecord(p, sup_distance, max(moduli), min(moduli))


# --- Half-line regime ---
@dataclass(frozen=True)
class HalfLineRecord:
    params: SectionParams
    max_deviation: mp.mpf
    min_real_margin: mp.mpf

    @property
    def strictly_right(self):
        return self.min_real_margin > 0


def _halfline_record(zs):
    with mp.workprec(zs.precision_bits):
        offsets = [z.re + mp.mpf(1) / 2 for z in zs.zeros]
        return HalfLineRecord(zs.params, max(abs(x) for x in offsets),
                              min(offsets))


def halfline_check(ns, precision_bits=None):
    """max |Re z* + 1/2| over the zeros of B_{n-3,n}, per n."""
    records = []
    for n in ns:
        r = n - HALFLINE_OFFSET
        if r < 1:
            raise DomainError(f'n={n} is too small for r = n-3', field='ns')
        zs = find_zeros(build_section(SectionParams(r, n)), precision_bits)
        records.append(_halfline_record(zs))
        logger.info('half-line n=%d: max deviation %s', n,
                    mp.nstr(records[-1].max_deviation, 8))
    return records


def halfline_control(n, precision_bits=None):
    """B_{n-1,n} from its closed form: every zero has Re = -1/2."""
    p = SectionParams(n - 1, n)
    bits = precision_bits or conf.default_precision(n)
    zeros = tuple(closed_form_zeros(p, bits))
    with mp.workprec(bits):
        offsets = [z.re + mp.mpf(1) / 2 for z in zeros]
        return HalfLineRecord(p, max(abs(x) for x in offsets), min(offsets))


# --- Limiting circles ---
@dataclass(frozen=True)
class NestedCirclesResult:
    alpha: Alpha
    max_excess: mp.mpf
    crossing: mp.mpf
    passed: bool


def check_nested_circles(alpha, m=None):
    """
    The limiting gamma-circle lies in |z| <= alpha/(1-alpha).

    Its center is alpha^2/(1-alpha^2) and radius alpha/(1-alpha^2); it
    crosses the negative axis at -alpha/(1+alpha).
    """
    m = m or conf.curve_points()
    bits = alpha.precision_bits
    a = alpha.exact
    with mp.workprec(bits):
        center = to_mpf(a * a / (1 - a * a))
        radius = to_mpf(a / (1 - a * a))
        limit = to_mpf(a / (1 - a))
        excess = max(
            abs(center + radius * mp.expjpi(mp.mpf(2 * j) / m)) - limit
            for j in range(m)
        )
        crossing = center - radius
        tolerance = mp.ldexp(1, -(bits // 2))
        passed = excess <= tolerance and \
            abs(crossing + to_mpf(a / (1 + a))) <= tolerance
    return NestedCirclesResult(alpha, excess, crossing, bool(passed))
