"""
Exact integer polynomials for sections of the binomial expansion.

B_{r,n}(z) = sum_{k<=r} C(n,k) z^k, its remainder R_{r,n}, the transformed
polynomial H_{r,n}(q) = (1-q)^r B_{r,n}(q/(1-q)) and the full reliability
polynomial Rel_{r,n}(q) = (1-q)^{n-r} H_{r,n}(q). Everything here is exact;
the only floating-point operation is `evaluate`.
"""
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .bigcomplex import BigComplex
from .exceptions import DegenerateError, DomainError

SECTION = 'section'
REMAINDER = 'remainder'
RELIABILITY = 'reliability'
RELIABILITY_FULL = 'reliability-full'
GENERIC = 'generic'


# --- Parameters ---
@dataclass(frozen=True)
class SectionParams:
    """Section index r and binomial exponent n, 1 <= r <= n."""
    r: int
    n: int

    def __post_init__(self):
        if not isinstance(self.r, int) or not isinstance(self.n, int):
            raise DomainError('r and n must be integers', field='r')
        if self.n < 1:
            raise DomainError(f'n must be at least 1, got {self.n}',
                              field='n')
        if not 1 <= self.r <= self.n:
            raise DomainError(
                f'r must satisfy 1 <= r <= n, got r={self.r}, n={self.n}',
                field='r',
            )

    @property
    def beta(self):
        return Fraction(self.r, self.n)

    @property
    def gamma(self):
        if self.n < 2:
            raise DomainError('gamma = r/(n-1) needs n >= 2', field='n')
        return Fraction(self.r, self.n - 1)

    @property
    def z_beta(self):
        """Singular point beta/(1-beta) = r/(n-r)."""
        if self.r == self.n:
            raise DegenerateError('r/(n-r) is undefined for r = n',
                                  field='r')
        return Fraction(self.r, self.n - self.r)

    def __str__(self):
        return f'r={self.r}, n={self.n}'


# --- Polynomial type ---
@dataclass(frozen=True)
class ExactPolynomial:
    """Dense polynomial with exact integer coefficients, index k <-> z^k."""
    coeffs: tuple
    family: str = GENERIC
    params: SectionParams = None

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs) or (0,)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.coeffs == (0,)

    def deflate_origin(self):
        """Divide out z^m, m being the multiplicity of the zero at 0."""
        coeffs = self.coeffs
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs = coeffs[1:]
        return ExactPolynomial(coeffs, GENERIC, self.params)

    def __eq__(self, other):
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)


# --- Exact building blocks ---
def binomial(n, k):
    """C(n, k) by the multiplicative formula, exactly."""
    if n < 0 or not 0 <= k <= n:
        raise DomainError(f'binomial needs 0 <= k <= n, got n={n}, k={k}',
                          field='k')
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # the running product is C(n-k+i, i) and stays an integer
        result = result * (n - k + i) // i
    return result


def _section_coeffs(r, n):
    # r = 0 is allowed here: B_{0,n} = 1 appears in the reversal identity
    return tuple(binomial(n, k) for k in range(r + 1))


def poly_add(a, b):
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def one_minus_q_power(m):
    """Coefficients of (1-q)^m."""
    return tuple((-1) ** j * binomial(m, j) for j in range(m + 1))


# --- Families ---
def build_section(p):
    """B_{r,n}: degree r, coeffs[k] = C(n, k)."""
    return ExactPolynomial(_section_coeffs(p.r, p.n), SECTION, p)


def build_remainder(p):
    """R_{r,n}(z) = sum_{k>r} C(n,k) z^{k-r}, with an explicit 0 constant."""
    if p.r == p.n:
        raise DegenerateError('the remainder of B_{n,n} is the zero '
                              'polynomial', field='r')
    coeffs = (0,) + tuple(binomial(p.n, j + p.r)
                          for j in range(1, p.n - p.r + 1))
    return ExactPolynomial(coeffs, REMAINDER, p)


def reversed_section_remainder(p):
    """z^{n-r} B_{n-r-1,n}(1/z), built by reversing coefficients."""
    if p.r == p.n:
        raise DegenerateError('no reversal form for r = n', field='r')
    section = _section_coeffs(p.n - p.r - 1, p.n)
    # coefficient of z^j is C(n, n-r-j); z^0 is empty
    return ExactPolynomial((0,) + tuple(reversed(section)), REMAINDER, p)


def reliability_form(p):
    """H_{r,n}(q) = sum_{k<=r} C(n,k) q^k (1-q)^{r-k}, expanded in q."""
    coeffs = [0] * (p.r + 1)
    for k in range(p.r + 1):
        c = binomial(p.n, k)
        for j, a in enumerate(one_minus_q_power(p.r - k)):
            coeffs[k + j] += c * a
    return ExactPolynomial(coeffs, RELIABILITY, p)


def reliability_polynomial(p):
    """Rel_{r,n}(q) = (1-q)^{n-r} H_{r,n}(q)."""
    h = reliability_form(p)
    coeffs = poly_mul(one_minus_q_power(p.n - p.r), h.coeffs)
    return ExactPolynomial(coeffs, RELIABILITY_FULL, p)


# --- Evaluation ---
def evaluate_exact(poly, q):
    """Exact value at a rational point."""
    q = Fraction(q)
    value = Fraction(0)
    for c in reversed(poly.coeffs):
        value = value * q + c
    return value


def evaluate(poly, z):
    """Horner evaluation at z.precision_bits; the result has that precision."""
    bits = z.precision_bits
    with mp.workprec(bits):
        x = z.value
        value = mp.mpc(0)
        for c in reversed(poly.coeffs):
            value = value * x + mp.mpf(c)
        return BigComplex(+value.real, +value.imag, bits)


# --- Identities ---
def reliability_identity_holds(p, q):
    """H_{r,n}(q) == (1-q)^r B_{r,n}(q/(1-q)) at a rational q != 1."""
    q = Fraction(q)
    if q == 1:
        raise DomainError('the identity needs q != 1', field='q')
    lhs = evaluate_exact(reliability_form(p), q)
    rhs = (1 - q) ** p.r * evaluate_exact(build_section(p), q / (1 - q))
    return lhs == rhs


def remainder_identity_holds(p):
    return build_remainder(p).coeffs == reversed_section_remainder(p).coeffs


def decomposition_identity_holds(p):
    """(1+z)^n == B_{r,n}(z) + z^r R_{r,n}(z), coefficient-wise."""
    full = _section_coeffs(p.n, p.n)
    shifted = (0,) * p.r + build_remainder(p).coeffs
    return poly_add(build_section(p).coeffs, shifted)[:p.n + 1] == full


# --- Zero bounds and closed forms ---
def kakeya_annulus(poly):
    """Annulus holding every zero of a positive-coefficient polynomial."""
    coeffs = poly.coeffs
    if poly.degree < 1 or any(c <= 0 for c in coeffs):
        raise DomainError('the annulus needs degree >= 1 and strictly '
                          'positive coefficients', field='coeffs')
    ratios = [Fraction(coeffs[k], coeffs[k + 1])
              for k in range(poly.degree)]
    return min(ratios), max(ratios)


def closed_form_zeros(p, precision_bits):
    """Zeros of the exactly solvable sections: r = 1, r = n-1, r = n."""
    with mp.workprec(precision_bits):
        if p.r == p.n:
            zeros = [mp.mpc(-1)] * p.n
        elif p.r == 1:
            zeros = [mp.mpc(mp.mpf(-1) / p.n)]
        elif p.r == p.n - 1:
            zeros = []
            for k in range(1, p.n):
                omega = mp.expjpi(mp.mpf(2 * k) / p.n)
                zeros.append(omega / (1 - omega))
        else:
            raise DomainError(
                f'no closed form for {p}; use solver.find_zeros', field='r'
            )
        return sorted(
            (BigComplex(+z.real, +z.imag, precision_bits) for z in zeros),
            key=BigComplex.sort_key,
        )
