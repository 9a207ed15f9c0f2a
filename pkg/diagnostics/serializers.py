from rest_framework import serializers

from centraliser.serializers import (
    CentraliserReportSerializer,
    CosaturationReportSerializer,
    PartitionListField,
)


class HookReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    domain = serializers.DictField()
    summands = serializers.ListField(child=serializers.CharField())
    idx = serializers.IntegerField()
    N = serializers.IntegerField()
    ann = serializers.IntegerField()
    dend = serializers.IntegerField()
    dc_holds = serializers.BooleanField()
    holds = serializers.BooleanField()


class CounterexampleReportSerializer(serializers.Serializer):
    domain = serializers.DictField()
    square = CentraliserReportSerializer()
    rational = CentraliserReportSerializer()
    divisors = serializers.ListField(child=serializers.IntegerField())
    failing_primes = serializers.ListField(child=serializers.IntegerField())
    ternary = CentraliserReportSerializer()
    ternary_rational = CentraliserReportSerializer()
    cosaturation = CosaturationReportSerializer()
    confirmed = serializers.BooleanField()


class TensorFieldCheckSerializer(serializers.Serializer):
    domain = serializers.DictField()
    ann = serializers.IntegerField()
    dend = serializers.IntegerField()
    dc_holds = serializers.BooleanField()


class TensorReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    r = serializers.IntegerField()
    m = serializers.IntegerField()
    zeta = PartitionListField()
    idx = serializers.IntegerField()
    expected_ann = serializers.IntegerField()
    results = TensorFieldCheckSerializer(many=True, source='fields')
    lattice_rank = serializers.IntegerField(allow_null=True)
    failing_primes = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    holds = serializers.BooleanField()


class GammaFieldCheckSerializer(serializers.Serializer):
    domain = serializers.DictField()
    graph_dimension = serializers.IntegerField()
    annihilator_dimension = serializers.IntegerField()
    dc_holds = serializers.BooleanField(allow_null=True)
    agrees = serializers.BooleanField()


class GammaReportSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    t = serializers.ListField(child=serializers.IntegerField())
    vertices = serializers.IntegerField()
    edges = serializers.IntegerField()
    components = serializers.IntegerField()
    bipartite_components = serializers.IntegerField()
    odd_cycle = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()), allow_null=True,
    )
    results = GammaFieldCheckSerializer(many=True, source='fields')
    holds = serializers.BooleanField()
