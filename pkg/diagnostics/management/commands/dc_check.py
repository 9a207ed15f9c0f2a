from centraliser.serializers import CentraliserReportSerializer
from centraliser.services import dc_check, per_field
from diagnostics.engine import EngineCommand


class Command(EngineCommand):
    help = 'Compare the image of Hec(n) with the double endomorphism algebra of a Young sum'

    def run(self, options):
        spec = self.module_spec(options)
        reports = per_field(
            lambda domain: dc_check(spec.instantiate(domain), integral=True), self.spec_fields(spec, options)
        )
        for report in reports:
            style = self.style.SUCCESS if report.dc_holds else self.style.WARNING
            self.stderr.write(style(f"{report.module}: dc_holds = {report.dc_holds}"))
        return CentraliserReportSerializer(reports, many=True).data, True
