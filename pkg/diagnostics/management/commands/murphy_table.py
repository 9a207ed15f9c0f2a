from django.core.management.base import CommandError

from cellular.datum import cell_basis_export, regular_cell_basis
from cellular.serializers import SharpTransportSerializer, TriangularityReportSerializer
from cellular.services import sharp_transport_check, triangularity_check
from diagnostics.engine import USAGE_ERROR, EngineCommand
from partitions.shapes import PartitionSet, dominance_upward_closure, partitions_of


class Command(EngineCommand):
    help = 'Pairing table of the Murphy basis against its sharp-twisted dual, and the sharp transport of ideals'

    def add_engine_arguments(self, parser):
        parser.add_argument('--export', action='store_true', help='Include the regular cell basis')

    def run(self, options):
        n = options['n']
        if not n:
            raise CommandError('--n is required', returncode=USAGE_ERROR)
        domain = self.scalar_fields(options)[0]
        datum = regular_cell_basis(n, self.parameter(options), domain)
        report = triangularity_check(datum)
        transports = [
            sharp_transport_check(datum, dominance_upward_closure(PartitionSet(n, (lam,))))
            for lam in partitions_of(n)
        ]
        payload = {
            'triangularity': TriangularityReportSerializer(report).data,
            'transport': SharpTransportSerializer(transports, many=True).data,
        }
        if options['export']:
            payload['basis'] = cell_basis_export(datum)
        return payload, all(t.holds for t in transports)
