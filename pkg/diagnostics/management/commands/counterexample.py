from diagnostics.engine import EngineCommand
from diagnostics.serializers import CounterexampleReportSerializer
from diagnostics.services import counterexample_report


class Command(EngineCommand):
    help = 'M(2,2) in characteristic 2: no double centraliser property and no base change'

    default_fields = ['Fp:2']

    def run(self, options):
        report = counterexample_report(self.scalar_fields(options)[0])
        if report.confirmed:
            self.stderr.write(self.style.SUCCESS('Counterexample reproduced'))
        return CounterexampleReportSerializer(report).data, report.confirmed
