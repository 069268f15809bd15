from fractions import Fraction

import mpmath as mp
from rest_framework import serializers

from . import conf
from .bigcomplex import decimal_digits
from .exceptions import DomainError
from .geometry import Alpha, Branch

COMMANDS = ('zeros', 'curve', 'verify', 'sweep', 'szego', 'halfline',
            'figure')
FORMATS = ('json', 'csv')


# --- Fields ---
class DecimalStringField(serializers.Field):
    """High-precision real rendered as a decimal string."""

    def __init__(self, **kwargs):
        kwargs['read_only'] = True
        super().__init__(**kwargs)

    def to_representation(self, value):
        return decimal_string(value, self.context.get('digits'))


class BigComplexField(serializers.Field):
    """BigComplex rendered as {"re": ..., "im": ...}."""

    def __init__(self, **kwargs):
        kwargs['read_only'] = True
        super().__init__(**kwargs)

    def to_representation(self, value):
        return value.to_strings(self.context.get('digits'))


def decimal_string(value, digits=None):
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        if isinstance(value, int) or value.denominator == 1:
            return str(int(value))
        value = mp.mpf(value.numerator) / value.denominator
    return mp.nstr(value, digits or 17)


def output_context(precision_bits):
    """Serializer context fixing the digit count for a run."""
    return {'digits': decimal_digits(precision_bits)}


# --- Polynomials and zeros ---
class ExactPolynomialSerializer(serializers.Serializer):
    """Integer coefficients as exact decimal strings."""
    r = serializers.IntegerField(source='params.r', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    family = serializers.CharField(read_only=True)
    coeffs = serializers.SerializerMethodField()

    def get_coeffs(self, obj):
        return [str(c) for c in obj.coeffs]


class ZeroSetSerializer(serializers.Serializer):
    """Zeros and residual certificates of one polynomial."""
    r = serializers.IntegerField(source='params.r', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    polynomial = ExactPolynomialSerializer(source='poly', read_only=True)
    precision_bits = serializers.IntegerField(read_only=True)
    zeros = serializers.ListField(child=BigComplexField(), read_only=True)
    residuals = serializers.ListField(child=DecimalStringField(),
                                      read_only=True)
    warnings = serializers.ListField(child=serializers.CharField(),
                                     read_only=True)


class CurveSampleSerializer(serializers.Serializer):
    alpha = serializers.SerializerMethodField()
    branch = serializers.SerializerMethodField()
    precision_bits = serializers.IntegerField(read_only=True)
    points = serializers.SerializerMethodField()

    def get_alpha(self, obj):
        return str(obj.alpha) if obj.alpha is not None else None

    def get_branch(self, obj):
        return Branch(obj.branch).value

    def get_points(self, obj):
        digits = self.context.get('digits')
        return [
            {
                'theta': decimal_string(theta, digits),
                **z.to_strings(digits),
                'residual': decimal_string(residual, digits),
            }
            for theta, z, residual in zip(obj.thetas, obj.points,
                                          obj.residuals)
        ]


# --- Reports ---
class ZeroMarginsSerializer(serializers.Serializer):
    zero = BigComplexField()
    outer = DecimalStringField()
    circle = DecimalStringField()
    halfplane = DecimalStringField()
    curve = DecimalStringField()


class RegionReportSerializer(serializers.Serializer):
    """Signed margins of every zero against the zero region."""
    r = serializers.IntegerField(source='params.r', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    precision_bits = serializers.IntegerField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    tolerance = DecimalStringField()
    margins = ZeroMarginsSerializer(many=True, read_only=True)


class RegionCaseSerializer(serializers.Serializer):
    r = serializers.IntegerField(read_only=True)
    n = serializers.IntegerField(read_only=True)
    region_passed = serializers.BooleanField(read_only=True)
    vieta_passed = serializers.BooleanField(read_only=True)
    conjugate_closed = serializers.BooleanField(read_only=True)


class RegionSweepSerializer(serializers.Serializer):
    n_max = serializers.IntegerField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    failures = serializers.SerializerMethodField()
    cases = serializers.SerializerMethodField()

    def get_cases(self, obj):
        return len(obj.cases)

    def get_failures(self, obj):
        return RegionCaseSerializer(obj.failures(), many=True).data


class ConvergenceRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField(source='params.n', read_only=True)
    r = serializers.IntegerField(source='params.r', read_only=True)
    sup_distance = DecimalStringField()
    rate_statistic = DecimalStringField()
    singular_gap = DecimalStringField()
    coverage = DecimalStringField()


class SingularRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField(source='params.n', read_only=True)
    r = serializers.IntegerField(source='params.r', read_only=True)
    predicted = BigComplexField()
    nearest = BigComplexField()
    deviation = DecimalStringField()
    predicted_gap = DecimalStringField()
    singular_gap = DecimalStringField()


class SzegoRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField(source='params.n', read_only=True)
    r = serializers.IntegerField(source='params.r', read_only=True)
    sup_distance = DecimalStringField()
    max_modulus = DecimalStringField()
    min_modulus = DecimalStringField()


class HalfLineRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField(source='params.n', read_only=True)
    r = serializers.IntegerField(source='params.r', read_only=True)
    max_deviation = DecimalStringField()
    min_real_margin = DecimalStringField()


class RemainderBoundsSerializer(serializers.Serializer):
    r = serializers.IntegerField(source='params.r', read_only=True)
    n = serializers.IntegerField(source='params.n', read_only=True)
    samples = serializers.IntegerField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    max_upper_ratio = DecimalStringField()
    min_lower_ratio = DecimalStringField()


# --- Run parameters ---
class RunConfigSerializer(serializers.Serializer):
    """Validates command-line parameters before any computation."""
    command = serializers.ChoiceField(choices=COMMANDS)
    r = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    n = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    alpha = serializers.CharField(required=False, allow_null=True)
    ns = serializers.CharField(required=False, allow_null=True)
    precision_bits = serializers.IntegerField(
        min_value=53, required=False, allow_null=True,
        error_messages={'min_value': 'Precision must be at least 53 bits.'},
    )
    points = serializers.IntegerField(
        min_value=16, required=False, allow_null=True,
        error_messages={'min_value': 'A curve needs at least 16 points.'},
    )
    format = serializers.ChoiceField(choices=FORMATS, default='json')
    out = serializers.CharField(required=False, allow_null=True)
    branch = serializers.ChoiceField(
        choices=[b.value for b in (Branch.INNER, Branch.OUTER)],
        default=Branch.INNER.value,
    )
    n_max = serializers.IntegerField(min_value=3, required=False,
                                     allow_null=True)
    allow_large_n = serializers.BooleanField(default=False)
    which = serializers.ChoiceField(choices=[1, 2, 3], required=False,
                                    allow_null=True)
    singular = serializers.BooleanField(default=False)

    def validate_alpha(self, value):
        if value is None:
            return None
        try:
            return Alpha.parse(value)
        except DomainError as exc:
            raise serializers.ValidationError(str(exc))

    def validate_ns(self, value):
        if value is None:
            return None
        try:
            ns = [int(item) for item in value.split(',') if item.strip()]
        except ValueError:
            raise serializers.ValidationError(
                'ns must be a comma-separated list of integers.'
            )
        if not ns:
            raise serializers.ValidationError('At least one n is required.')
        if len(ns) != len(set(ns)):
            raise serializers.ValidationError('Values of n must be unique.')
        return ns

    def _require(self, data, *fields):
        missing = [f for f in fields if data.get(f) is None]
        if missing:
            raise serializers.ValidationError(
                {f: f'--{f.replace("_", "-")} is required for '
                    f'{data["command"]}.' for f in missing}
            )

    def _check_section(self, data, strict=False):
        r, n = data['r'], data['n']
        upper = n - 1 if strict else n
        if r > upper:
            bound = 'r < n' if strict else 'r <= n'
            raise serializers.ValidationError(
                {'r': f'Expected 1 <= {bound}, got r={r}, n={n}.'}
            )

    def validate(self, data):
        command = data['command']
        if command == 'zeros':
            self._require(data, 'r', 'n')
            self._check_section(data)
        elif command == 'curve':
            self._require(data, 'alpha')
        elif command == 'verify':
            if data.get('n_max') is None:
                self._require(data, 'r', 'n')
                self._check_section(data)
        elif command == 'sweep':
            self._require(data, 'alpha', 'ns')
            limit = conf.sweep_max_n()
            if not data.get('allow_large_n') and max(data['ns']) > limit:
                raise serializers.ValidationError(
                    {'ns': f'n above {limit} needs --allow-large-n.'}
                )
        elif command == 'szego':
            self._require(data, 'r', 'n')
            self._check_section(data, strict=True)
        elif command == 'halfline':
            self._require(data, 'ns')
            if min(data['ns']) < 4:
                raise serializers.ValidationError(
                    {'ns': 'r = n - 3 needs n >= 4.'}
                )
        elif command == 'figure':
            self._require(data, 'which')
        return data
