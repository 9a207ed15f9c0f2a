from diagnostics.engine import EngineCommand
from diagnostics.serializers import HookReportSerializer
from diagnostics.services import hook_report
from exactalgebra.domains import ScalarDomain


class Command(EngineCommand):
    help = 'Double centraliser dimensions of a hook sum against n! - N(n, idx)'

    default_fields = ['Q', 'Fp:2', 'Fp:3']

    def run(self, options):
        spec = self.module_spec(options)
        if options['field']:
            fields = self.spec_fields(spec, options)
        else:
            fields = [ScalarDomain.parse(name) for name in self.default_fields]
        reports = hook_report(spec, fields)
        return HookReportSerializer(reports, many=True).data, all(r.holds for r in reports)
