from django.core.management.base import CommandError

from cellular.datum import cell_basis_export, cell_ideal, ideal_law_holds, is_ideal_set, regular_cell_basis
from diagnostics.engine import USAGE_ERROR, EngineCommand, parse_partition
from partitions.shapes import PartitionSet


class Command(EngineCommand):
    help = 'Span A(tau) of the regular cell basis for the partitions given with --partition'

    def add_engine_arguments(self, parser):
        parser.add_argument('--export', action='store_true', help='Include the whole cell basis')

    def run(self, options):
        n = options['n']
        if not n:
            raise CommandError('--n is required', returncode=USAGE_ERROR)
        domain = self.scalar_fields(options)[0]
        datum = regular_cell_basis(n, self.parameter(options), domain)
        tau = PartitionSet(n, tuple(parse_partition(text, n) for text in options['partition'] or ()))
        ideal = cell_ideal(datum, tau)
        payload = {
            'n': n,
            'q': self.parameter(options),
            'domain': domain.descriptor(),
            'tau': tau.as_lists(),
            'dimension': ideal.dimension,
            'closed_downwards': is_ideal_set(tau),
        }
        holds = True
        if payload['closed_downwards']:
            payload['ideal_law'] = holds = ideal_law_holds(ideal, datum.algebra)
        if options['export']:
            payload['basis'] = cell_basis_export(datum)
        return payload, holds
