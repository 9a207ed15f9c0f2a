from rest_framework import serializers

from centraliser.serializers import PartitionListField


class CellVerificationSerializer(serializers.Serializer):
    module = serializers.CharField()
    tau = PartitionListField()
    ann = serializers.IntegerField()
    ideal = serializers.IntegerField()
    relation = serializers.CharField()
    holds = serializers.BooleanField()


class TriangularityReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    domain = serializers.DictField()
    pairs_checked = serializers.IntegerField()
    diagonal = serializers.SerializerMethodField()

    def get_diagonal(self, report):
        return [
            {'lambda': lam.as_list(), 's': s.as_lists(), 't': t.as_lists(), 'value': value}
            for lam, s, t, value in report.diagonal
        ]


class SharpTransportSerializer(serializers.Serializer):
    sigma = PartitionListField()
    relation = serializers.CharField()
    murphy_ideal_law = serializers.BooleanField(allow_null=True)
    holds = serializers.BooleanField()
