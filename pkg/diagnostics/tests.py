import json
import os
import tempfile
from io import StringIO
from itertools import combinations

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, tag

from exactalgebra.domains import ScalarDomain
from hecke.permutations import Perm
from heckecentral.exceptions import NotAHookSum, NotAnInvolution, WrongCharacteristic
from partitions.shapes import Partition
from permmodules.modules import Summand
from permmodules.serializers import ModuleSpec
from .graphs import GammaGraph, gamma_graph_analysis
from .services import counterexample_report, hook_report, tensor_report


def spec_of(*shapes, domain=None, q='1'):
    n = sum(shapes[0])
    summands = tuple(Summand(Partition(shape)) for shape in shapes)
    return ModuleSpec(n, summands, domain or ScalarDomain.rationals(), q)


class GammaGraphTests(SimpleTestCase):

    def setUp(self):
        self.fields = [ScalarDomain.rationals(), ScalarDomain.prime_field(2), ScalarDomain.prime_field(3)]

    def test_two_vertices(self):
        """Test Gamma(Sym(2), {e, (12)}) is a single edge"""
        graph = GammaGraph(2, Perm((2, 1)))
        self.assertEqual(len(graph.components), 1)
        self.assertEqual(graph.bipartite_count, 1)
        self.assertEqual(graph.edge_count, 1)
        report = gamma_graph_analysis(2, Perm((2, 1)), self.fields)
        self.assertTrue(report.holds)
        self.assertEqual([f.annihilator_dimension for f in report.fields], [1, 1, 1])

    def test_transposition_graph_is_bipartite(self):
        """Test the transposition graph on Sym(3) has no odd cycle"""
        report = gamma_graph_analysis(3, Perm((2, 1, 3)), self.fields)
        self.assertIsNone(report.odd_cycle)
        self.assertEqual(report.components, report.bipartite_components)
        self.assertTrue(report.holds)
        self.assertEqual(report.fields[0].annihilator_dimension, 1)

    def test_double_transposition_has_odd_cycle(self):
        """Test Gamma(Sym(4), {e, (13)(24)}) has an odd cycle and a larger F_2 annihilator"""
        t = Perm.from_cycles([(1, 3), (2, 4)], 4)
        graph = GammaGraph(4, t)
        cycle = next(c.odd_cycle for c in graph.components if c.odd_cycle)
        self.assertEqual(len(cycle) % 2, 1)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            self.assertIn(b, graph.adjacency[a])
        report = gamma_graph_analysis(4, t, self.fields, with_dc=True)
        self.assertTrue(report.holds)
        rational, binary, ternary = report.fields
        self.assertGreater(binary.annihilator_dimension, rational.annihilator_dimension)
        self.assertEqual(ternary.annihilator_dimension, rational.annihilator_dimension)
        self.assertIsNotNone(binary.dc_holds)

    def test_not_an_involution(self):
        """Test the identity and a 3-cycle are refused"""
        with self.assertRaises(NotAnInvolution):
            GammaGraph(3, Perm.identity(3))
        with self.assertRaises(NotAnInvolution):
            GammaGraph(3, Perm((2, 3, 1)))

    @tag('slow')
    def test_degree_five(self):
        """Test the two routes agree for Sym(5)/<(12)(34)>, 60 points"""
        t = Perm.from_cycles([(1, 2), (3, 4)], 5)
        report = gamma_graph_analysis(5, t, self.fields[:2])
        self.assertTrue(report.holds)


class HookReportTests(SimpleTestCase):

    def setUp(self):
        self.fields = [ScalarDomain.rationals(), ScalarDomain.prime_field(2), ScalarDomain.prime_field(3)]

    def test_hook_sum(self):
        """Test M(3,1) + M(4): Ann 14, DEnd 10 over Q, F_2, F_3"""
        reports = hook_report(spec_of((3, 1), (4,)), self.fields)
        for report in reports:
            self.assertEqual((report.idx, report.N), (3, 10))
            self.assertEqual((report.ann, report.dend), (14, 10))
            self.assertTrue(report.holds)

    def test_every_hook_sum_of_rank_four(self):
        """Test all 15 nonempty sums of distinct hooks of 4 over F_2 and F_3"""
        hooks = [(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)]
        for size in range(1, len(hooks) + 1):
            for shapes in combinations(hooks, size):
                for report in hook_report(spec_of(*shapes), self.fields[1:]):
                    self.assertTrue(report.holds, (shapes, report))

    def test_small_index(self):
        """Test M(2,1,1) has idx 2 and Ann of dimension 1"""
        report = hook_report(spec_of((2, 1, 1)), self.fields[:2])[1]
        self.assertEqual(report.N, 23)
        self.assertEqual(report.ann, 1)
        self.assertTrue(report.holds)

    def test_trivial_module(self):
        """Test M(n) has Ann of dimension n! - 1"""
        report = hook_report(spec_of((3,)), self.fields[:1])[0]
        self.assertEqual(report.ann, 5)

    def test_non_hook_refused(self):
        """Test M(2,2) is not a hook sum"""
        with self.assertRaises(NotAHookSum):
            hook_report(spec_of((2, 2)), self.fields)

    @tag('slow')
    def test_rank_five_hooks(self):
        """Test the double centraliser property for hook sums of rank 5 over F_2 and F_3"""
        for shapes in [((3, 1, 1),), ((4, 1), (5,)), ((2, 1, 1, 1), (4, 1))]:
            for report in hook_report(spec_of(*shapes), self.fields[1:]):
                self.assertTrue(report.holds, report)


class CounterexampleTests(SimpleTestCase):

    def test_characteristic_two(self):
        """Test M(2,2) over F_2 reproduces the counterexample"""
        report = counterexample_report(ScalarDomain.prime_field(2))
        self.assertTrue(report.confirmed)
        self.assertGreaterEqual(report.square.ann, 11)
        self.assertEqual(report.rational.ann, 10)
        self.assertEqual(report.failing_primes, [2])
        self.assertTrue(report.ternary.dc_holds)

    def test_other_characteristic_refused(self):
        """Test fields of characteristic other than 2 are refused"""
        with self.assertRaises(WrongCharacteristic):
            counterexample_report(ScalarDomain.prime_field(3))
        with self.assertRaises(WrongCharacteristic):
            counterexample_report(ScalarDomain.rationals())


class TensorReportTests(SimpleTestCase):

    def setUp(self):
        self.fields = [ScalarDomain.rationals(), ScalarDomain.prime_field(2)]

    def test_worked_cases(self):
        """Test the Ann ranks 0, 1, 1 for (n, r, m) = (4, 2, 3), (4, 1, 3), (4, 2, 4)"""
        for (n, r, m), ann in [((4, 2, 3), 0), ((4, 1, 3), 1), ((4, 2, 4), 1)]:
            report = tensor_report(n, r, m, self.fields)
            self.assertEqual(report.expected_ann, ann)
            self.assertTrue(report.holds, report)
            self.assertEqual(report.failing_primes, [])

    @tag('slow')
    def test_all_small_cases(self):
        """Test the closed form for every n <= 4, r <= 2, m <= n"""
        for n in range(1, 5):
            for r in range(1, 3):
                for m in range(1, n + 1):
                    self.assertTrue(tensor_report(n, r, m, self.fields).holds, (n, r, m))


class CommandTests(SimpleTestCase):

    def setUp(self):
        self.out = StringIO()
        self.err = StringIO()

    def call(self, name, **options):
        call_command(name, stdout=self.out, stderr=self.err, **options)
        return json.loads(self.out.getvalue())

    def test_ann(self):
        """Test the ann command on M(3,1) + M(4) over F_2"""
        data = self.call('ann', n=4, partition=['3,1', '4'], field=['Fp:2'])
        self.assertEqual(data['results'][0]['ann'], 14)
        self.assertEqual(data['predicted_ann'], 14)

    def test_end_from_spec_file(self):
        """Test the end command reading a module specification document"""
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'square.json')
            with open(path, 'w') as stream:
                json.dump({'n': 4, 'summands': [{'partition': [2, 2]}]}, stream)
            data = self.call('end', spec=path)
        self.assertEqual(data['results'][0]['end'], 3)
        self.assertEqual(data['double_cosets'], 3)

    def test_dend_and_dc_check(self):
        """Test dend and dc_check on M(2,2) over Q and F_2"""
        data = self.call('dend', n=4, partition=['2,2'], field=['Q'])
        self.assertEqual(data['results'][0]['dend'], 14)
        self.out = StringIO()
        reports = self.call('dc_check', n=4, partition=['2,2'], field=['Q', 'Fp:2'])
        self.assertEqual([r['dc_holds'] for r in reports], [True, False])
        self.assertEqual(reports[0]['dims']['ann'], 10)
        self.assertEqual(reports[0]['failing_primes'], [2])
        self.assertIsNone(reports[1]['divisors'])

    def test_base_change(self):
        """Test base_change reports 2 as the failing prime of M(2,2)"""
        data = self.call('base_change', n=4, partition=['2,2'])
        self.assertEqual(data['failing_primes'], [2])
        self.assertTrue(data['consistent'])
        self.assertFalse(data['base_change_holds'])

    def test_cell_commands(self):
        """Test cell_ideal, cell_verify and murphy_table"""
        data = self.call('cell_ideal', n=3, partition=['1,1,1'])
        self.assertEqual(data['dimension'], 1)
        self.assertTrue(data['ideal_law'])
        self.out = StringIO()
        verdicts = self.call('cell_verify', n=3, partition=['2,1'], field=['Fp:3'])
        self.assertEqual(verdicts[0]['relation'], 'equal')
        self.out = StringIO()
        table = self.call('murphy_table', n=3, q='t')
        self.assertEqual(len(table['triangularity']['diagonal']), 6)

    def test_graph_and_tensor(self):
        """Test graph_example and tensor_report"""
        data = self.call('graph_example', n=4, t='3,4,1,2', field=['Q', 'Fp:2'])
        self.assertIsNotNone(data['odd_cycle'])
        self.assertGreater(data['results'][1]['annihilator_dimension'], data['results'][0]['annihilator_dimension'])
        self.out = StringIO()
        tensor = self.call('tensor_report', n=4, r=2, m=4, field=['Fp:2'])
        self.assertEqual(tensor['expected_ann'], 1)
        self.assertTrue(tensor['holds'])

    def test_counterexample_and_hooks(self):
        """Test counterexample and hook_report through the command line"""
        data = self.call('counterexample')
        self.assertTrue(data['confirmed'])
        self.out = StringIO()
        reports = self.call('hook_report', n=4, partition=['2,1,1'], field=['Fp:2'])
        self.assertEqual(reports[0]['ann'], 1)

    def test_usage_errors(self):
        """Test input errors exit with status 1"""
        with self.assertRaises(CommandError) as raised:
            call_command('ann', n=4, partition=['2,1'], stdout=self.out)
        self.assertEqual(raised.exception.returncode, 1)
        with self.assertRaises(CommandError) as raised:
            call_command('counterexample', field=['Q'], stdout=self.out)
        self.assertEqual(raised.exception.returncode, 1)
        with self.assertRaises(CommandError) as raised:
            call_command('cell_verify', n=4, partition=['2,2'], stdout=self.out)
        self.assertEqual(raised.exception.returncode, 1)
        with self.assertRaises(CommandError) as raised:
            call_command('ann', stdout=self.out)
        self.assertEqual(raised.exception.returncode, 1)
        for field in ('Q:2', 'Fp:x'):
            with self.assertRaises(CommandError) as raised:
                call_command('graph_example', n=4, t='3,4,1,2', field=[field], stdout=self.out)
            self.assertEqual(raised.exception.returncode, 1)

    def test_pretty_and_out(self):
        """Test the table output and writing to a file"""
        call_command('dc_check', n=3, partition=['2,1'], pretty=True, stdout=self.out, stderr=self.err)
        self.assertIn('dc_holds', self.out.getvalue())
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'report.json')
            call_command('ann', n=3, partition=['3'], out=path, stdout=StringIO(), stderr=self.err)
            with open(path) as stream:
                self.assertEqual(json.load(stream)['results'][0]['ann'], 5)
