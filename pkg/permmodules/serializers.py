from dataclasses import dataclass

from rest_framework import serializers

from exactalgebra.domains import DOMAIN_KINDS, ScalarDomain
from hecke.algebra import HeckeAlgebra
from heckecentral.exceptions import HeckeCentralError
from partitions.shapes import Partition
from .modules import Summand, direct_sum


@dataclass(frozen=True)
class ModuleSpec:
    """A Young sum description that can be instantiated over any field."""

    n: int
    summands: tuple
    domain: ScalarDomain
    q_text: str = '1'

    def algebra(self, domain=None):
        domain = domain or self.domain
        return HeckeAlgebra(self.n, domain, domain.parse_value(self.q_text))

    def instantiate(self, domain=None):
        return direct_sum(self.summands, self.algebra(domain))

    def with_summands(self, summands):
        return ModuleSpec(self.n, tuple(summands), self.domain, self.q_text)

    def describe(self):
        return ' + '.join(s.label() for s in self.summands)


class PartitionField(serializers.ListField):
    child = serializers.IntegerField(min_value=1)

    def to_representation(self, value):
        if isinstance(value, Partition):
            return value.as_list()
        return super().to_representation(value)


class ParameterSerializer(serializers.Serializer):
    domain = serializers.ChoiceField(choices=DOMAIN_KINDS, default='Q')
    p = serializers.IntegerField(required=False, allow_null=True, min_value=2)
    value = serializers.CharField(default='1')

    def validate(self, attrs):
        try:
            domain = ScalarDomain(attrs['domain'], attrs.get('p'))
            domain.parse_value(attrs['value'])
        except HeckeCentralError as exc:
            raise serializers.ValidationError(str(exc))
        except (TypeError, ValueError, SyntaxError) as exc:
            raise serializers.ValidationError(f"Cannot read q = {attrs['value']}: {exc}")
        attrs['scalar_domain'] = domain
        return attrs


class SummandSerializer(serializers.Serializer):
    partition = PartitionField()
    mult = serializers.IntegerField(min_value=0, default=1)
    signed = serializers.BooleanField(default=False)

    def validate_partition(self, value):
        try:
            return Partition.of(value)
        except HeckeCentralError as exc:
            raise serializers.ValidationError(str(exc))


class ModuleSpecSerializer(serializers.Serializer):
    """
    Validates module specification documents such as
    {"n": 4, "q": {"domain": "Fp", "p": 2, "value": 1},
     "summands": [{"partition": [2, 2], "mult": 1, "signed": false}]}
    and builds a ModuleSpec from them.
    """

    n = serializers.IntegerField(min_value=1, max_value=7)
    q = ParameterSerializer(required=False)
    summands = SummandSerializer(many=True, allow_empty=False)
    field = serializers.CharField(required=False)

    def validate(self, attrs):
        n = attrs['n']
        for summand in attrs['summands']:
            if summand['partition'].degree != n:
                raise serializers.ValidationError(
                    f"Summand {summand['partition']} is not a partition of {n}"
                )
        if 'field' in attrs:
            try:
                attrs['field_domain'] = ScalarDomain.parse(attrs['field'])
            except (HeckeCentralError, ValueError) as exc:
                raise serializers.ValidationError({'field': str(exc)})
        return attrs

    def create(self, validated_data):
        q = validated_data.get('q') or {'scalar_domain': ScalarDomain.rationals(), 'value': '1'}
        domain = validated_data.get('field_domain') or q['scalar_domain']
        summands = tuple(
            Summand(s['partition'], s['mult'], s['signed'])
            for s in validated_data['summands'] if s['mult']
        )
        return ModuleSpec(validated_data['n'], summands, domain, str(q['value']))
