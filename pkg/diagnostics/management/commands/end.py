from centraliser.services import end_algebra, end_dimension_oracle, per_field
from diagnostics.engine import EngineCommand


class Command(EngineCommand):
    help = 'Dimension of the endomorphism algebra of a Young sum over each field'

    def run(self, options):
        spec = self.module_spec(options)
        fields = self.spec_fields(spec, options)
        dims = per_field(lambda domain: end_algebra(spec.instantiate(domain)).dimension, fields)
        payload = {
            'module': spec.describe(),
            'results': [{'domain': f.descriptor(), 'end': d} for f, d in zip(fields, dims)],
        }
        holds = True
        if len({s.signed for s in spec.summands}) == 1:
            shapes = [s.partition for s in spec.summands for _ in range(s.mult)]
            payload['double_cosets'] = end_dimension_oracle(shapes)
            holds = all(d == payload['double_cosets'] for d in dims)
        return payload, holds
