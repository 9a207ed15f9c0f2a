from diagnostics.engine import EngineCommand
from diagnostics.serializers import TensorReportSerializer
from diagnostics.services import tensor_report


class Command(EngineCommand):
    help = 'Sym(m) acting on r-tuples over 1..n: annihilator rank against m! - N(m, idx)'

    default_fields = ['Q', 'Fp:2']

    def add_engine_arguments(self, parser):
        parser.add_argument('--r', type=int, default=1, help='Tensor power')
        parser.add_argument('--m', type=int, help='Degree of the acting symmetric group (default n)')

    def run(self, options):
        n = options['n'] or 3
        m = options['m'] or n
        report = tensor_report(n, options['r'], m, self.scalar_fields(options))
        return TensorReportSerializer(report).data, report.holds
