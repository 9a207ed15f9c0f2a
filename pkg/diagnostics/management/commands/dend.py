from centraliser.services import double_end, end_algebra, per_field
from diagnostics.engine import EngineCommand


class Command(EngineCommand):
    help = 'Dimension of the double endomorphism algebra of a Young sum over each field'

    def run(self, options):
        spec = self.module_spec(options)

        def compute(domain):
            module = spec.instantiate(domain)
            end = end_algebra(module)
            return {'domain': domain.descriptor(), 'end': end.dimension, 'dend': double_end(module, end).dimension}

        results = per_field(compute, self.spec_fields(spec, options))
        return {'module': spec.describe(), 'results': results}, True
