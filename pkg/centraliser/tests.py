from django.test import SimpleTestCase, override_settings, tag

from exactalgebra.domains import Scalar, ScalarDomain
from exactalgebra.lattices import failing_primes
from exactalgebra.matrices import EQUAL, V_IN_U, Subspace, rref_nullspace
from hecke.algebra import HeckeAlgebra
from heckecentral.exceptions import (
    BasisMismatch,
    DomainNotField,
    HypothesisFails,
    InvariantViolation,
    NonIntegralParameter,
)
from partitions.shapes import Partition, partitions_of
from permmodules.gsets import young_gset
from permmodules.modules import Summand, build_young_module, direct_sum
from permmodules.serializers import ModuleSpec
from .serializers import BaseChangeReportSerializer, CentraliserReportSerializer
from .services import (
    _check_ideal,
    annihilator,
    as_matrices,
    base_change_report,
    commutation_system,
    cosaturation_criterion,
    dc_check,
    double_end,
    end_algebra,
    end_dimension_oracle,
    integral_annihilator_lattice,
    predicted_dimensions,
    specialise_module,
)


def P(*parts):
    return Partition(parts)


def young_sum(shapes, domain, q=1):
    n = shapes[0].degree
    return direct_sum([Summand(s) for s in shapes], HeckeAlgebra(n, domain, q))


class AnnihilatorTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()
        self.F2 = ScalarDomain.prime_field(2)
        self.F3 = ScalarDomain.prime_field(3)

    def test_trivial_module(self):
        """Test Ann(M(3)) has dimension 5 over Q"""
        self.assertEqual(annihilator(young_sum([P(3)], self.Q)).dimension, 5)

    def test_regular_module_is_faithful(self):
        """Test M(1^3) has zero annihilator at generic q"""
        module = build_young_module(P(1, 1, 1), HeckeAlgebra.generic(3))
        self.assertEqual(annihilator(module).dimension, 0)

    def test_annihilator_kills_module(self):
        """Test that every basis vector of Ann(M(2,1)) acts as zero"""
        module = young_sum([P(2, 1)], self.Q, 2)
        ann = annihilator(module)
        zero = module.act(module.algebra.zero())
        for row in ann.rows:
            self.assertEqual(module.act(module.algebra.from_coordinates(row)), zero)

    def test_annihilator_needs_a_field(self):
        """Test that Z coefficients are refused"""
        module = young_sum([P(2)], ScalarDomain.integers())
        with self.assertRaises(DomainNotField):
            annihilator(module)

    def test_gset_input(self):
        """Test Ann of a G-set module equals Ann of the Young module at q = 1"""
        gset = young_gset([P(2, 2)], 4, self.Q)
        self.assertEqual(annihilator(gset).dimension, 10)


    @override_settings(HECKE_SANITY_CHECKS=True)
    def test_ideal_check_rejects_a_non_ideal(self):
        """Test the two-sided closure check refuses the span of T_e in Hec(4)"""
        module = young_sum([P(2, 2)], ScalarDomain.rationals())
        identity = Subspace.from_rows([[1] + [0] * 23], 24, ScalarDomain.rationals())
        with self.assertRaises(InvariantViolation):
            _check_ideal(module, identity)


class EndomorphismTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()

    def test_end_of_square_shape(self):
        """Test dim End(M(2,2)) = 3"""
        self.assertEqual(end_algebra(young_sum([P(2, 2)], self.Q)).dimension, 3)

    def test_generators_suffice(self):
        """Test End over the generators equals End over every T_w for n <= 4"""
        for shapes in ([P(2, 1)], [P(2, 2)], [P(3, 1), P(4)]):
            module = young_sum(shapes, self.Q, -1)
            self.assertEqual(
                end_algebra(module).rows,
                end_algebra(module, full_system=True).rows,
            )

    def test_end_matches_double_cosets(self):
        """Test dim End against the double coset count"""
        shapes = [P(3, 1), P(2, 2)]
        module = young_sum(shapes, ScalarDomain.function_field(), 't')
        self.assertEqual(end_algebra(module).dimension, end_dimension_oracle(shapes))
        self.assertEqual(end_dimension_oracle([P(3, 1), P(4)]), 5)

    @tag('slow')
    def test_end_is_field_independent(self):
        """Test End of the sum of all M(lam), lam of 4, over Q, F_2, F_3, F_5"""
        shapes = list(partitions_of(4))
        expected = end_dimension_oracle(shapes)
        for domain in (self.Q, *(ScalarDomain.prime_field(p) for p in (2, 3, 5))):
            self.assertEqual(end_algebra(young_sum(shapes, domain)).dimension, expected)

    def test_double_end_basis_mismatch(self):
        """Test that an End basis of another module is refused"""
        small = young_sum([P(3, 1)], self.Q)
        large = young_sum([P(2, 2)], self.Q)
        with self.assertRaises(BasisMismatch):
            double_end(large, end_algebra(small))

    def test_blockwise_commutant(self):
        """Test DEnd(M(2,2)) reduced block by block equals the one-shot commutation system"""
        module = young_sum([P(2, 2)], self.Q)
        end = end_algebra(module)
        _, whole = rref_nullspace(commutation_system(as_matrices(end, 6), 6, self.Q), self.Q)
        self.assertEqual(whole.dimension, 14)
        self.assertEqual(double_end(module, end).rows, whole.rows)


class DoubleCentraliserTests(SimpleTestCase):

    def setUp(self):
        self.shapes = [P(3, 1), P(4)]

    def test_hook_sum_over_several_fields(self):
        """Test Ann 14, End 5, DEnd 10 for M(3,1) + M(4)"""
        cases = [
            (ScalarDomain.rationals(), 1),
            (ScalarDomain.prime_field(2), 1),
            (ScalarDomain.prime_field(3), 1),
            (ScalarDomain.rationals(), -1),
        ]
        for domain, q in cases:
            report = dc_check(young_sum(self.shapes, domain, q))
            self.assertEqual((report.ann, report.end, report.dend), (14, 5, 10))
            self.assertTrue(report.dc_holds)

    def test_square_shape_fails_in_characteristic_two(self):
        """Test M(2,2) is a double centraliser module over Q but not over F_2"""
        rational = dc_check(young_sum([P(2, 2)], ScalarDomain.rationals()))
        self.assertEqual(rational.ann, 10)
        self.assertTrue(rational.dc_holds)
        binary = dc_check(young_sum([P(2, 2)], ScalarDomain.prime_field(2)))
        self.assertGreaterEqual(binary.ann, 11)
        self.assertFalse(binary.dc_holds)
        self.assertLess(binary.image, binary.dend)

    def test_report_serializer(self):
        """Test the JSON shape of a centraliser report"""
        data = CentraliserReportSerializer(dc_check(young_sum(self.shapes, ScalarDomain.rationals()))).data
        self.assertEqual(data['dims'], {'ann': 14, 'end': 5, 'dend': 10, 'image': 10})
        self.assertTrue(data['dc_holds'])
        self.assertEqual(data['domain']['domain'], 'Q')
        self.assertIsNone(data['failing_primes'])

    def test_report_with_lattice(self):
        """Test an integral check of M(2,2) lists the divisors and the failing prime 2"""
        report = dc_check(young_sum([P(2, 2)], ScalarDomain.rationals()), integral=True)
        data = CentraliserReportSerializer(report).data
        self.assertEqual(data['failing_primes'], [2])
        self.assertEqual(len(data['divisors']), 24 - 10)
        self.assertEqual(set(data), {'module', 'domain', 'order', 'dims', 'dc_holds', 'divisors', 'failing_primes'})
        binary = dc_check(young_sum([P(2, 2)], ScalarDomain.prime_field(2)), integral=True)
        self.assertIsNone(binary.divisors)

    @tag('slow')
    def test_rank_five_hook(self):
        """Test Ann(M(3,1,1)) has dimension 42 over Q"""
        module = young_sum([P(3, 1, 1)], ScalarDomain.rationals())
        self.assertEqual(annihilator(module).dimension, 42)


class PredictionTests(SimpleTestCase):

    def test_cosaturated_prediction(self):
        """Test the closed form dimensions for M(3,1,1) and M(3,1) + M(4)"""
        algebra5 = HeckeAlgebra(5, ScalarDomain.rationals(), 1)
        prediction = predicted_dimensions(direct_sum([Summand(P(3, 1, 1))], algebra5))
        self.assertEqual((prediction['ann'], prediction['dend']), (42, 78))
        hook = young_sum([P(3, 1), P(4)], ScalarDomain.rationals())
        self.assertEqual(predicted_dimensions(hook)['ann'], 14)

    def test_prediction_needs_cosaturation(self):
        """Test that M(2,2) has no closed form prediction"""
        with self.assertRaises(HypothesisFails):
            predicted_dimensions(young_sum([P(2, 2)], ScalarDomain.rationals()))

    def test_prediction_agrees_at_generic_q(self):
        """Test the prediction against the computed Ann over Q(t)"""
        module = young_sum([P(3, 1), P(4)], ScalarDomain.function_field(), 't')
        self.assertEqual(annihilator(module).dimension, predicted_dimensions(module)['ann'])


class BaseChangeTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()
        self.fields = [ScalarDomain.prime_field(p) for p in (2, 3)]
        self.square = ModuleSpec(4, (Summand(P(2, 2)),), self.Q, '1')

    def test_integral_lattice(self):
        """Test the integral annihilator of M(2,2) has rank 10 and fails only at 2"""
        lattice, divisors = integral_annihilator_lattice(self.square.instantiate())
        self.assertEqual(lattice.rank, 10)
        self.assertTrue(lattice.is_saturated())
        self.assertTrue(any(d % 2 == 0 for d in divisors))
        self.assertFalse(any(d % p == 0 for d in divisors for p in (3, 5, 7)))

    def test_integral_lattice_needs_unit_parameter(self):
        """Test q = 2 and F_2 coefficients are refused"""
        with self.assertRaises(NonIntegralParameter):
            integral_annihilator_lattice(young_sum([P(2, 1)], self.Q, 2))
        with self.assertRaises(NonIntegralParameter):
            integral_annihilator_lattice(young_sum([P(2, 1)], ScalarDomain.prime_field(2)))

    def test_square_shape_report(self):
        """Test base change for M(2,2) fails over F_2 only"""
        report = base_change_report(self.square, self.fields)
        self.assertEqual(report.generic.ann, 10)
        self.assertEqual([f.ann_exceeds_generic for f in report.fields], [True, False])
        self.assertEqual(report.failing_primes, [2])
        self.assertGreaterEqual(report.probed[2], 11)
        for p in (3, 5, 7):
            self.assertEqual(report.probed[p], 10)
        self.assertTrue(report.consistent)
        self.assertFalse(report.base_change_holds)

    @override_settings(HECKE_FIELD_WORKERS=2)
    def test_report_keeps_field_order(self):
        """Test the per-field results follow the input order with a worker pool"""
        fields = [ScalarDomain.prime_field(3), ScalarDomain.prime_field(2)]
        report = base_change_report(self.square, fields)
        self.assertEqual([f.domain['p'] for f in report.fields], [3, 2])
        data = BaseChangeReportSerializer(report).data
        self.assertEqual(data['failing_primes'], [2])

    def test_generic_parameter(self):
        """Test q = t compares Q(t) with F_p(t) and skips the lattice"""
        spec = ModuleSpec(3, (Summand(P(2, 1)),), ScalarDomain.function_field(), 't')
        report = base_change_report(spec, self.fields)
        self.assertEqual(report.generic.domain['domain'], ScalarDomain.function_field().kind)
        self.assertEqual([f.domain['domain'] for f in report.fields], ['Fpt', 'Fpt'])
        self.assertIsNone(report.divisors)
        self.assertTrue(report.base_change_holds)

    def test_specialised_parameter_against_generic(self):
        """Test M(2,2) at q = -1 over Q has Ann 11 against 10 over Q(t)"""
        spec = ModuleSpec(4, (Summand(P(2, 2)),), self.Q, '-1')
        report = base_change_report(spec, [self.Q])
        self.assertEqual(report.generic.domain['domain'], ScalarDomain.function_field().kind)
        self.assertEqual(report.generic.ann, 10)
        self.assertEqual(report.fields[0].ann, 11)
        self.assertEqual(report.fields[0].end, report.generic.end)
        self.assertTrue(report.fields[0].ann_exceeds_generic)
        self.assertFalse(report.base_change_holds)
        self.assertEqual(report.integral_rank, 11)
        self.assertTrue(report.consistent)

    def test_specialised_module_matches_direct_build(self):
        """Test t -> 1 in F_2 and t -> -1 in Q of the generic M(3,1) give the directly built modules"""
        generic = ModuleSpec(4, (Summand(P(3, 1)),), ScalarDomain.function_field(), 't')
        generic_module = generic.instantiate()
        for field, q in ((ScalarDomain.prime_field(2), 1), (self.Q, -1)):
            special = specialise_module(generic_module, Scalar.of(field, q))
            direct = young_sum([P(3, 1)], field, q)
            self.assertEqual(
                [g.to_list() for g in special.generators],
                [g.to_list() for g in direct.generators],
            )

    def test_annihilator_dimensions_follow_divisors(self):
        """Test Ann over F_2 and F_3 exceeds Ann over Q exactly at the failing primes, for every lam of 4"""
        for lam in partitions_of(4):
            rational = young_sum([lam], self.Q)
            lattice, divisors = integral_annihilator_lattice(rational)
            primes = failing_primes(divisors)
            rational_ann = annihilator(rational).dimension
            self.assertEqual(lattice.rank, rational_ann, lam)
            for p in (2, 3):
                ann = annihilator(young_sum([lam], ScalarDomain.prime_field(p))).dimension
                self.assertGreaterEqual(ann, rational_ann, (lam, p))
                self.assertEqual(ann > rational_ann, p in primes, (lam, p))
            report = base_change_report(ModuleSpec(4, (Summand(lam),), self.Q, '1'), self.fields)
            self.assertTrue(report.consistent, lam)
            self.assertEqual(report.failing_primes, primes)


class CosaturationTests(SimpleTestCase):

    def test_square_coset_space(self):
        """Test Ann of Sym(4)/Sigma(2,2) against its co-saturation over F_2 and F_3"""
        gset = young_gset([P(2, 2)], 4, ScalarDomain.rationals())
        binary = cosaturation_criterion(gset, ScalarDomain.prime_field(2))
        self.assertEqual(binary.relation, V_IN_U)
        self.assertEqual(binary.ann_closure, 10)
        self.assertEqual(binary.failing_minimal, [P(2, 2)])
        self.assertFalse(binary.base_change_holds)
        ternary = cosaturation_criterion(gset, ScalarDomain.prime_field(3))
        self.assertEqual(ternary.relation, EQUAL)
        self.assertEqual(ternary.failing_minimal, [])

    def test_hook_coset_space(self):
        """Test a co-saturated G-set passes over F_2"""
        gset = young_gset([P(3, 1), P(4)], 4, ScalarDomain.prime_field(2))
        report = cosaturation_criterion(gset)
        self.assertTrue(report.base_change_holds)
        self.assertEqual(report.ann, 14)
