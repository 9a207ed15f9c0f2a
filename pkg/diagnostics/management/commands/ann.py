from centraliser.services import annihilator, per_field, predicted_dimensions
from diagnostics.engine import EngineCommand
from heckecentral.exceptions import HypothesisFails, NotAYoungSum


class Command(EngineCommand):
    help = 'Dimension of the annihilator of a Young sum over each field'

    def add_engine_arguments(self, parser):
        parser.add_argument('--basis', action='store_true', help='Include the echelon basis in T_w coordinates')

    def run(self, options):
        spec = self.module_spec(options)

        def compute(domain):
            module = spec.instantiate(domain)
            ann = annihilator(module)
            entry = {'domain': domain.descriptor(), 'ann': ann.dimension}
            if options['basis']:
                entry['basis'] = [[domain.to_str(c) for c in row] for row in ann.rows]
            return entry, module

        results = per_field(compute, self.spec_fields(spec, options))
        payload = {'module': spec.describe(), 'n': spec.n, 'q': spec.q_text, 'results': [r for r, _ in results]}
        holds = True
        try:
            prediction = predicted_dimensions(results[0][1])
        except (HypothesisFails, NotAYoungSum):
            prediction = None
        if prediction is not None:
            payload['predicted_ann'] = prediction['ann']
            holds = all(r['ann'] == prediction['ann'] for r, _ in results)
        return payload, holds
