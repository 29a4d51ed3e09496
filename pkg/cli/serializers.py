from rest_framework import serializers

from classes.base import CLASS_IDS
from darboux.coframe import equations_data, render_text
from exprdag.nodes import Node, node_count
from jetalg.coefficients import format_coefficient
from jetalg.poly import Poly
from jetalg.rational import RationalFn
from jetalg.textio import canonical_text

# Polynomials up to this many monomials are written out in full
INLINE_MONOMIALS = 2000


def poly_data(poly):
    data = {'monomials': poly.monomial_count(), 'split_monomials': poly.monomial_count_split()}
    if data['monomials'] <= INLINE_MONOMIALS:
        data['text'] = canonical_text(poly)
    return data


def value_data(value):
    """
    Plain data for a field element.

    Constants become their canonical text, expanded values carry their
    numerator (inline when small) and denominator pattern, DAG values
    their node count.
    """
    if isinstance(value, Node):
        if value.kind == 'const':
            return format_coefficient(value.payload)
        return {'dag_nodes': node_count(value)}
    if isinstance(value, RationalFn):
        if value.is_polynomial() and value.num.is_constant():
            return format_coefficient(value.num.constant_value())
        data = {'numerator': poly_data(value.num)}
        data['denominator'] = [[label, exp] for label, exp in value.denominator_pattern()]
        return data
    if isinstance(value, Poly):
        return poly_data(value)
    if isinstance(value, (int, str)):
        return value
    return format_coefficient(value)


class RunConfigSerializer(serializers.Serializer):
    """
    Validates the options shared by the commands.

    ``backend`` stays as given; ``auto`` is resolved by the class pipeline.
    """
    class_id = serializers.ChoiceField(choices=CLASS_IDS)
    backend = serializers.ChoiceField(choices=['auto', 'expanded', 'dag'], default='auto')
    seed = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    points = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    phi = serializers.CharField(required=False, allow_null=True, allow_blank=False)
    stress = serializers.BooleanField(default=False)
    mem = serializers.IntegerField(min_value=0, required=False, allow_null=True)
    rigid = serializers.BooleanField(default=False)
    out = serializers.CharField(required=False, allow_null=True)
    format = serializers.ChoiceField(choices=['json', 'text'], default='json')
    expr = serializers.ListField(child=serializers.CharField(), required=False)
    identity = serializers.ListField(child=serializers.CharField(), required=False)
    origin = serializers.BooleanField(required=False)
    search = serializers.BooleanField(required=False)
    commute = serializers.BooleanField(required=False)
    verify = serializers.BooleanField(required=False)
    limit = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate(self, attrs):
        if attrs.get('mem') is not None and not attrs.get('stress'):
            raise serializers.ValidationError({'mem': '--mem only applies with --stress'})
        if attrs.get('rigid') and attrs.get('backend') == 'dag':
            raise serializers.ValidationError({'rigid': 'rigid packages are built on the expanded backend'})
        return attrs

    def to_representation(self, instance):
        data = super().to_representation(instance)
        data.pop('out', None)
        return data


class VerdictSerializer(serializers.Serializer):
    name = serializers.CharField()
    holds = serializers.BooleanField()
    points_tested = serializers.IntegerField()
    retries = serializers.IntegerField()
    failures = serializers.SerializerMethodField()

    def get_failures(self, obj):
        """First failing points, with the nonzero values found there."""
        out = []
        for failure in obj.failures[:3]:
            if isinstance(failure[1], list):
                out.append({'identity': failure[0], 'points': len(failure[1])})
                continue
            point, value = failure
            out.append({
                'point': {k: format_coefficient(v) for k, v in point.items()},
                'value': value if isinstance(value, str) else format_coefficient(value),
            })
        return out


class CountSerializer(serializers.Serializer):
    expr = serializers.CharField()
    monomials = serializers.IntegerField()
    split = serializers.IntegerField(allow_null=True)
    expected = serializers.IntegerField(allow_null=True)
    matches = serializers.BooleanField()
    abandoned = serializers.BooleanField()
    cap = serializers.IntegerField(allow_null=True)


class StructureSerializer(serializers.Serializer):
    """A LieStructure as one row per nonvanishing bracket, in frame order."""
    class_id = serializers.CharField()
    members = serializers.ListField(child=serializers.CharField())
    brackets = serializers.SerializerMethodField()

    def get_brackets(self, obj):
        return [
            {
                'pair': [a, b],
                'terms': [{'member': member, 'coeff': coeff.label} for member, coeff in obj.terms(a, b)],
            }
            for a, b in obj.pairs()
            if obj.terms(a, b)
        ]


class FieldSerializer(serializers.Serializer):
    def to_representation(self, instance):
        arity = instance.arity
        return {
            arity.name(coord): value_data(value)
            for coord, value in sorted(instance.components.items())
        }


class FrameSerializer(serializers.Serializer):
    class_id = serializers.CharField()
    backend = serializers.SerializerMethodField()
    rigid = serializers.BooleanField()
    generators = serializers.SerializerMethodField()
    derived = serializers.SerializerMethodField()
    determinants = serializers.SerializerMethodField()
    numerators = serializers.SerializerMethodField()

    def get_backend(self, obj):
        return obj.backend.name

    def get_generators(self, obj):
        return {name: FieldSerializer(f).data for name, f in obj.generators.items()}

    def get_derived(self, obj):
        return {name: FieldSerializer(f).data for name, f in obj.derived.items()}

    def get_determinants(self, obj):
        return {name: value_data(value) for name, value in obj.determinants.items()}

    def get_numerators(self, obj):
        return {name: poly_data(poly) for name, poly in obj.numerators.items()}


class CoframeSerializer(serializers.Serializer):
    """Equations carry {"d_omega": member, "terms": [{"coeff": label, "wedge": [j, k]}]} per coframe member."""

    class_id = serializers.CharField()
    members = serializers.ListField(child=serializers.CharField())
    equations = serializers.SerializerMethodField()
    equations_text = serializers.SerializerMethodField()

    def get_equations(self, obj):
        return equations_data(obj)

    def get_equations_text(self, obj):
        return render_text(obj).splitlines()


class AmbiguityGroupSerializer(serializers.Serializer):
    class_id = serializers.CharField()
    dimension = serializers.IntegerField()
    parameters = serializers.ListField(child=serializers.CharField())
    constraints = serializers.ListField(child=serializers.CharField())
    entries = serializers.SerializerMethodField()

    def get_entries(self, obj):
        return [list(row) for row in obj.entries]


class RankReportSerializer(serializers.Serializer):
    class_id = serializers.CharField()
    satisfied = serializers.BooleanField()
    expected = serializers.SerializerMethodField()
    points = serializers.SerializerMethodField()
    witness = serializers.SerializerMethodField()

    def get_expected(self, obj):
        return [{'fields': name, 'rank': rank} for name, rank in obj.expected]

    def get_points(self, obj):
        return [self._point(entry) for entry in obj.points]

    def get_witness(self, obj):
        return self._point(obj.witness) if obj.witness else None

    @staticmethod
    def _point(entry):
        return {
            'point': {k: format_coefficient(v) for k, v in entry['point'].items()},
            'ranks': entry['ranks'],
        }


class OriginReportSerializer(serializers.Serializer):
    class_id = serializers.CharField()
    phi = serializers.ListField(child=serializers.CharField())
    rows = serializers.ListField(child=serializers.CharField())
    frame_fields = serializers.SerializerMethodField()
    matrix = serializers.SerializerMethodField()
    determinant = serializers.SerializerMethodField()
    levi = serializers.SerializerMethodField()

    def get_frame_fields(self, obj):
        return {
            name: {coord: format_coefficient(v) for coord, v in components.items() if v}
            for name, components in obj.fields.items()
        }

    def get_matrix(self, obj):
        return obj.formatted_matrix()

    def get_determinant(self, obj):
        return format_coefficient(obj.determinant)

    def get_levi(self, obj):
        if obj.levi is None:
            return None
        return [[format_coefficient(v) for v in row] for row in obj.levi]
