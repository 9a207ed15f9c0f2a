from math import factorial

from django.test import SimpleTestCase, tag

from exactalgebra.domains import ScalarDomain
from hecke.algebra import HeckeAlgebra, x_element
from hecke.permutations import Perm, all_perms, min_coset_reps
from heckecentral.exceptions import MixedParameters, NotAHookSum, NotAYoungSum, RangeError
from partitions.shapes import Partition, PartitionSet, partitions_of
from .gsets import (
    coset_space_module,
    cosaturation_gset,
    orbital_count,
    tensor_closed_form,
    tensor_orbit_profile,
    tensor_space_module,
    young_gset,
)
from .modules import (
    Summand,
    build_signed_module,
    build_young_module,
    direct_sum,
    hook_index,
    sharp_twist,
    zeta_and_index,
)
from .serializers import ModuleSpecSerializer


def P(*parts):
    return Partition(parts)


def trace(matrix, domain):
    return sum((row[i] for i, row in enumerate(matrix.to_list())), domain.zero)


def traces(module):
    return [trace(module.matrix(w), module.domain) for w in all_perms(module.n)]


class YoungModuleTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()
        self.generic4 = HeckeAlgebra.generic(4)

    def test_trivial_shape_is_rank_one(self):
        """Test that every T_i acts on M(n) as q"""
        module = build_young_module(P(4), self.generic4)
        self.assertEqual(module.dimension, 1)
        for g in module.generators:
            self.assertEqual(g.to_list(), [[self.generic4.q]])

    def test_dimensions(self):
        """Test dim M(lam) = dim M_s(lam) = n!/prod lam_i! for n <= 5"""
        for n in range(1, 6):
            algebra = HeckeAlgebra(n, self.Q, -1)
            for lam in partitions_of(n):
                expected = factorial(n)
                for part in lam:
                    expected //= factorial(part)
                self.assertEqual(build_young_module(lam, algebra).dimension, expected)
                self.assertEqual(build_signed_module(lam, algebra).dimension, expected)

    def test_relations_hold(self):
        """Test quadratic and braid relations for Young and signed modules"""
        for n in range(2, 5):
            algebra = HeckeAlgebra.generic(n)
            for lam in partitions_of(n):
                self.assertTrue(build_young_module(lam, algebra).check_relations())
                self.assertTrue(build_signed_module(lam, algebra).check_relations())

    @tag('slow')
    def test_relations_hold_rank_five(self):
        """Test the relations for every Young module of Hec(5) over F_3 with q = 2"""
        algebra = HeckeAlgebra(5, ScalarDomain.prime_field(3), 2)
        for lam in partitions_of(5):
            self.assertTrue(build_young_module(lam, algebra).check_relations())
            self.assertTrue(build_signed_module(lam, algebra).check_relations())

    def test_action_matches_left_multiplication(self):
        """Test rho(T_w) on M(2,1) against products T_w T_d x(2,1)"""
        algebra = HeckeAlgebra.generic(3)
        lam = P(2, 1)
        module = build_young_module(lam, algebra)
        x = x_element(algebra, lam)
        reps = min_coset_reps(lam)
        basis = [algebra.T(d) * x for d in reps]
        for w in algebra.basis:
            matrix = module.matrix(w).to_list()
            for s, d in enumerate(reps):
                expected = algebra.zero()
                for t in range(len(reps)):
                    expected = expected + basis[t].scale(matrix[t][s])
                self.assertEqual(algebra.T(w) * algebra.T(d) * x, expected)

    def test_signed_sign_shape(self):
        """Test T_1 acts on M_s(2) as -1 and M_s(1^n) has dimension n!"""
        H2 = HeckeAlgebra.generic(2)
        module = build_signed_module(P(2), H2)
        self.assertEqual(module.generators[0].to_list(), [[-H2.ring.one]])
        self.assertEqual(build_signed_module(P(1, 1, 1), HeckeAlgebra.generic(3)).dimension, 6)

    def test_sharp_twist_of_young_is_signed(self):
        """Test M(lam)^sharp and M_s(lam) have equal traces for n <= 4"""
        for n in range(2, 5):
            algebra = HeckeAlgebra.generic(n)
            for lam in partitions_of(n):
                twisted = sharp_twist(build_young_module(lam, algebra))
                self.assertEqual(traces(twisted), traces(build_signed_module(lam, algebra)))
                self.assertTrue(twisted.summands[0].signed)

    def test_q_one_matches_coset_action(self):
        """Test that M(lam) at q = 1 equals the permutation module on Sym(n)/Sigma(lam)"""
        for n in range(2, 6):
            algebra = HeckeAlgebra(n, self.Q, 1)
            for lam in partitions_of(n):
                module = build_young_module(lam, algebra)
                gset = young_gset([lam], n, self.Q).as_module()
                for a, b in zip(module.generators, gset.generators):
                    self.assertEqual(a, b)


class DirectSumTests(SimpleTestCase):

    def setUp(self):
        self.algebra = HeckeAlgebra(4, ScalarDomain.prime_field(2), 1)

    def test_dimensions_add(self):
        """Test dim(M(3,1) + M(4)) = 5 and doubled M(2,2)"""
        module = direct_sum([Summand(P(3, 1)), Summand(P(4))], self.algebra)
        self.assertEqual(module.dimension, 5)
        doubled = direct_sum([Summand(P(2, 2), 2)], self.algebra)
        self.assertEqual(doubled.dimension, 12)
        self.assertEqual(doubled.summands[0].mult, 2)
        self.assertTrue(module.check_relations())

    def test_mixed_degrees(self):
        """Test that summands of another degree are refused"""
        with self.assertRaises(MixedParameters):
            direct_sum([Summand(P(3))], self.algebra)

    def test_zeta_and_index(self):
        """Test zeta and idx of Young sums"""
        module = direct_sum([Summand(P(3, 1)), Summand(P(4))], self.algebra)
        zeta, idx = zeta_and_index(module)
        self.assertEqual(list(zeta), [P(4), P(3, 1)])
        self.assertEqual(idx, 3)
        self.assertEqual(zeta_and_index(direct_sum([Summand(P(4))], self.algebra))[1], 4)
        square = direct_sum([Summand(P(2, 2))], self.algebra)
        self.assertIsNone(zeta_and_index(square)[1])
        with self.assertRaises(NotAHookSum):
            hook_index(square)

    def test_gset_module_is_not_a_young_sum(self):
        """Test zeta of a module without summand description"""
        module = coset_space_module(3, [], ScalarDomain.rationals()).as_module()
        with self.assertRaises(NotAYoungSum):
            zeta_and_index(module)


class GSetTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()

    def test_coset_spaces(self):
        """Test sizes of Sym(m)/T"""
        whole = [Perm.simple(i, 4) for i in range(1, 4)]
        self.assertEqual(coset_space_module(4, whole, self.Q).size, 1)
        self.assertEqual(coset_space_module(4, [], self.Q).size, 24)
        t = Perm.from_cycles([(1, 3), (2, 4)], 4)
        self.assertEqual(coset_space_module(4, [t], self.Q).size, 12)

    def test_permutation_module_relations(self):
        """Test the permutation matrices satisfy the q = 1 relations"""
        t = Perm.from_cycles([(1, 3), (2, 4)], 4)
        module = coset_space_module(4, [t], self.Q).as_module()
        self.assertTrue(module.check_relations())

    def test_tensor_space(self):
        """Test sizes and orbit counts of I(n, r)"""
        self.assertEqual(tensor_space_module(3, 1, 3, self.Q).size, 3)
        gset = tensor_space_module(4, 2, 4, self.Q)
        self.assertEqual(gset.size, 16)
        self.assertEqual(len(gset.orbits()), 2)
        with self.assertRaises(RangeError):
            tensor_space_module(3, 1, 4, self.Q)

    def test_tensor_profiles(self):
        """Test stabiliser types of I(n, r) against the counting formulas"""
        self.assertEqual(
            tensor_orbit_profile(4, 2, 4),
            (PartitionSet.of(4, [[3, 1], [2, 1, 1]]), 2),
        )
        self.assertEqual(tensor_orbit_profile(4, 1, 3), (PartitionSet.of(3, [[3], [2, 1]]), 2))
        for n in range(1, 6):
            for r in range(1, 4):
                for m in range(1, n + 1):
                    self.assertEqual(tensor_orbit_profile(n, r, m), tensor_closed_form(n, r, m))

    def test_orbital_count_is_double_coset_count(self):
        """Test orbits on X x X for Sym(4)/Sigma(2,2)"""
        self.assertEqual(orbital_count(young_gset([P(2, 2)], 4, self.Q)), 3)
        self.assertEqual(orbital_count(young_gset([P(3, 1), P(4)], 4, self.Q)), 5)

    def test_young_gset_zeta_and_cosaturation(self):
        """Test zeta(X) and C(X) for Sym(4)/Sigma(2,2)"""
        gset = young_gset([P(2, 2)], 4, self.Q)
        self.assertEqual(list(gset.young_zeta()), [P(2, 2)])
        closure = cosaturation_gset(gset)
        self.assertEqual(closure.size, 6 + 4 + 1)
        self.assertEqual(list(closure.young_zeta()), [P(4), P(3, 1), P(2, 2)])


class ModuleSpecSerializerTests(SimpleTestCase):

    def test_valid_document(self):
        """Test a module specification document builds the module"""
        serializer = ModuleSpecSerializer(data={
            'n': 4,
            'q': {'domain': 'Fp', 'p': 2, 'value': 1},
            'summands': [{'partition': [2, 2], 'mult': 1, 'signed': False}],
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.save()
        self.assertEqual(spec.domain, ScalarDomain.prime_field(2))
        self.assertEqual(spec.instantiate().dimension, 6)

    def test_field_override(self):
        """Test that a field entry replaces the parameter domain"""
        serializer = ModuleSpecSerializer(data={
            'n': 3, 'summands': [{'partition': [2, 1]}], 'field': 'Fp:3',
        })
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().domain, ScalarDomain.prime_field(3))

    def test_invalid_documents(self):
        """Test degree and parameter errors are reported"""
        wrong_degree = ModuleSpecSerializer(data={'n': 4, 'summands': [{'partition': [2, 1]}]})
        self.assertFalse(wrong_degree.is_valid())
        bad_prime = ModuleSpecSerializer(data={
            'n': 2, 'q': {'domain': 'Fp', 'p': 4}, 'summands': [{'partition': [2]}],
        })
        self.assertFalse(bad_prime.is_valid())
        increasing = ModuleSpecSerializer(data={'n': 3, 'summands': [{'partition': [1, 2]}]})
        self.assertFalse(increasing.is_valid())

    def test_unreadable_field_is_a_validation_error(self):
        """Test field entries with a bad or misplaced prime fail validation"""
        for field in ('Fp:x', 'Q:2', 'Fp:4'):
            serializer = ModuleSpecSerializer(data={'n': 3, 'summands': [{'partition': [2, 1]}], 'field': field})
            self.assertFalse(serializer.is_valid())
            self.assertIn('field', serializer.errors)
