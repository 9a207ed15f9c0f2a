from cellular.serializers import CellVerificationSerializer
from cellular.services import ann_cell_verify
from centraliser.services import per_field
from diagnostics.engine import EngineCommand


class Command(EngineCommand):
    help = 'Check that the annihilator of a Young sum is the cell ideal of the complement of its closure'

    def run(self, options):
        spec = self.module_spec(options)
        verdicts = per_field(lambda domain: ann_cell_verify(spec.instantiate(domain)), self.spec_fields(spec, options))
        return CellVerificationSerializer(verdicts, many=True).data, all(v.holds for v in verdicts)
