from rest_framework import serializers


class PartitionListField(serializers.Field):
    """A Partition, PartitionSet or list of partitions rendered as nested lists."""

    def to_representation(self, value):
        if hasattr(value, 'as_lists'):
            return value.as_lists()
        if hasattr(value, 'as_list'):
            return value.as_list()
        return [p.as_list() for p in value]


class CentraliserReportSerializer(serializers.Serializer):
    module = serializers.CharField()
    domain = serializers.DictField()
    order = serializers.IntegerField()
    dims = serializers.DictField(child=serializers.IntegerField())
    dc_holds = serializers.BooleanField()
    divisors = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    failing_primes = serializers.ListField(child=serializers.IntegerField(), allow_null=True)


class FieldDimensionsSerializer(serializers.Serializer):
    domain = serializers.DictField()
    ann = serializers.IntegerField()
    end = serializers.IntegerField()
    ann_exceeds_generic = serializers.BooleanField()
    end_exceeds_generic = serializers.BooleanField()


class BaseChangeReportSerializer(serializers.Serializer):
    module = serializers.CharField()
    generic = FieldDimensionsSerializer()
    results = FieldDimensionsSerializer(many=True, source='fields')
    divisors = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    failing_primes = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    integral_rank = serializers.IntegerField(allow_null=True)
    probed = serializers.DictField(child=serializers.IntegerField(), allow_null=True)
    consistent = serializers.BooleanField()
    base_change_holds = serializers.BooleanField()


class CosaturationReportSerializer(serializers.Serializer):
    module = serializers.CharField()
    domain = serializers.DictField()
    closure = PartitionListField()
    ann = serializers.IntegerField()
    ann_closure = serializers.IntegerField()
    relation = serializers.CharField()
    failing_minimal = PartitionListField()
    base_change_holds = serializers.BooleanField()
