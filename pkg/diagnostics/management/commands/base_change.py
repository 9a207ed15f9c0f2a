from centraliser.serializers import BaseChangeReportSerializer
from centraliser.services import base_change_report
from diagnostics.engine import EngineCommand
from exactalgebra.domains import ScalarDomain


class Command(EngineCommand):
    help = 'Annihilator and endomorphism dimensions over several fields against the generic ones'

    default_fields = ['Fp:2', 'Fp:3']

    def run(self, options):
        spec = self.module_spec(options)
        if options['field']:
            fields = self.scalar_fields(options)
        else:
            fields = [ScalarDomain.parse(name) for name in self.default_fields]
        report = base_change_report(spec, fields)
        if not report.base_change_holds:
            self.stderr.write(self.style.WARNING(f"Base change fails for {report.module}"))
        return BaseChangeReportSerializer(report).data, report.consistent
