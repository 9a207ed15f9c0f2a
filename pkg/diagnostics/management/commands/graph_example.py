from django.core.management.base import CommandError

from diagnostics.engine import USAGE_ERROR, EngineCommand
from diagnostics.graphs import gamma_graph_analysis
from diagnostics.serializers import GammaReportSerializer
from hecke.permutations import Perm


class Command(EngineCommand):
    help = 'Components of the graph Gamma(Sym(m), {e, t}) against Ann of F[Sym(m)/<t>]'

    default_fields = ['Q', 'Fp:2', 'Fp:3']

    def add_engine_arguments(self, parser):
        parser.add_argument('--t', default='3,4,1,2', help='Involution in one-line notation')
        parser.add_argument('--dc', action='store_true', help='Also run the double centraliser check')

    def run(self, options):
        m = options['n'] or 4
        try:
            t = Perm(tuple(int(a) for a in options['t'].replace(',', ' ').split()))
        except ValueError:
            raise CommandError(f"Cannot read --t {options['t']}", returncode=USAGE_ERROR)
        report = gamma_graph_analysis(m, t, self.scalar_fields(options), with_dc=options['dc'])
        if report.odd_cycle:
            self.stderr.write(self.style.WARNING(f"Odd cycle of length {len(report.odd_cycle)}"))
        return GammaReportSerializer(report).data, report.holds
