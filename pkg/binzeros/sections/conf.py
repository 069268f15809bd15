"""Defaults resolved from Django settings."""
from django.conf import settings


def default_precision(n):
    """Working precision in bits for polynomials built from C(n, k)."""
    override = getattr(settings, 'BINZEROS_PRECISION', None)
    if override:
        return override
    # log2 C(n, n/2) is about n, so leave n bits of headroom on top
    return max(128, 2 * n + 64)


def curve_points():
    return getattr(settings, 'BINZEROS_CURVE_POINTS', 512)


def distance_precision():
    return getattr(settings, 'BINZEROS_DISTANCE_PRECISION', 96)


def max_iterations():
    return getattr(settings, 'BINZEROS_MAX_ITERATIONS', 500)


def sweep_max_n():
    return getattr(settings, 'BINZEROS_SWEEP_MAX_N', 300)


def workers():
    return getattr(settings, 'BINZEROS_WORKERS', 1)


def seed():
    return getattr(settings, 'BINZEROS_SEED', 20100415)
