import random

from django.test import SimpleTestCase

from heckecentral.exceptions import (
    AmbientMismatch,
    DenominatorVanishes,
    DomainNotField,
    HeckeCentralError,
    ZeroParameter,
)
from .domains import Scalar, ScalarDomain, is_unit_monomial, laurent_bounds, specialize
from .lattices import (
    IntegerLattice,
    elementary_divisors,
    failing_primes,
    integer_rank,
    modular_rank,
    smith_normal_form,
)
from .matrices import (
    EQUAL,
    INCOMPARABLE,
    U_IN_V,
    Subspace,
    build_matrix,
    reduced_row_space,
    rref_nullspace,
    subspace_compare,
)


class ScalarDomainTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()
        self.Qt = ScalarDomain.function_field()
        self.F5 = ScalarDomain.prime_field(5)

    def test_parse_field_flags(self):
        """Test the command line spellings of fields"""
        self.assertEqual(ScalarDomain.parse('Q'), self.Q)
        self.assertEqual(ScalarDomain.parse('Fp:5'), self.F5)
        self.assertEqual(ScalarDomain.parse('Qt'), self.Qt)
        self.assertEqual(ScalarDomain.parse('Fpt:2'), ScalarDomain.function_field(2))
        self.assertFalse(ScalarDomain.parse('Z').is_field)

    def test_prime_only_for_finite_kinds(self):
        """Test a prime is refused for Q, Q(t) and Z and required for F_p"""
        for text in ('Q:2', 'Qt:3', 'Z:5', 'Fp', 'Fp:4', 'Fp:x'):
            with self.assertRaises(HeckeCentralError):
                ScalarDomain.parse(text)
        self.assertEqual(ScalarDomain.laurent(3).characteristic, 3)
        self.assertEqual(self.Q.characteristic, 0)

    def test_prime_field_values_are_reduced(self):
        """Test that F_p values live in [0, p)"""
        value = self.F5.convert(-1)
        self.assertEqual(self.F5.to_str(value), '4')

    def test_field_axioms_on_random_scalars(self):
        """Test a * a^-1 = 1 for random nonzero scalars"""
        rng = random.Random(7)
        for domain in (self.Q, self.F5, self.Qt):
            for _ in range(20):
                a = Scalar.of(domain, rng.randint(1, 4))
                if domain.is_generic:
                    a = a * Scalar(domain, domain.generator()) + Scalar.of(domain, 1)
                self.assertEqual(a * a.inverse(), Scalar.of(domain, 1))

    def test_rational_function_is_reduced(self):
        """Test that (t^2-1)/(t-1) is stored as t+1"""
        value = self.Qt.parse_value('(t^2-1)/(t-1)')
        self.assertEqual(value, self.Qt.parse_value('t+1'))


class SpecializeTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()
        self.Qt = ScalarDomain.function_field()

    def test_identity_substitution(self):
        """Test specialize(t, 1) = 1"""
        t = Scalar(self.Qt, self.Qt.generator())
        self.assertEqual(specialize(t, Scalar.of(self.Q, 1)), Scalar.of(self.Q, 1))

    def test_reduces_before_evaluating(self):
        """Test specialize((t^2-1)/(t-1), 3) = 4"""
        s = Scalar.of(self.Qt, self.Qt.parse_value('(t**2-1)/(t-1)'))
        self.assertEqual(specialize(s, Scalar.of(self.Q, 3)), Scalar.of(self.Q, 4))

    def test_laurent_inverse_mod_five(self):
        """Test specialize(t^-1, 2 in F_5) = 3"""
        laurent = ScalarDomain.laurent(5)
        F5 = ScalarDomain.prime_field(5)
        s = Scalar(laurent, laurent.parse_value('1/t'))
        self.assertEqual(specialize(s, Scalar.of(F5, 2)), Scalar.of(F5, 3))

    def test_pole_and_zero_parameter(self):
        """Test the two specialisation errors"""
        s = Scalar(self.Qt, self.Qt.parse_value('1/(t-2)'))
        with self.assertRaises(DenominatorVanishes):
            specialize(s, Scalar.of(self.Q, 2))
        with self.assertRaises(ZeroParameter):
            specialize(s, Scalar.of(self.Q, 0))

    def test_specialisation_is_multiplicative(self):
        """Test specialize(ab) = specialize(a) specialize(b)"""
        a = Scalar(self.Qt, self.Qt.parse_value('(t+3)/(t-5)'))
        b = Scalar(self.Qt, self.Qt.parse_value('t^2+2*t'))
        point = Scalar.of(self.Q, 7)
        self.assertEqual(specialize(a * b, point), specialize(a, point) * specialize(b, point))

    def test_laurent_bounds(self):
        """Test lowest and highest exponents of a Laurent polynomial"""
        laurent = ScalarDomain.laurent()
        s = Scalar(laurent, laurent.parse_value('t^-2 + 3 + t^4'))
        self.assertEqual(laurent_bounds(s), (-2, 4))
        self.assertIsNone(laurent_bounds(Scalar.of(laurent, 0)))

    def test_unit_monomial(self):
        """Test recognition of +-q^N"""
        q = self.Qt.generator()
        self.assertTrue(is_unit_monomial(-q ** 3, self.Qt, q))
        self.assertTrue(is_unit_monomial(self.Qt.one, self.Qt, q))
        self.assertFalse(is_unit_monomial(q + 1, self.Qt, q))
        F3 = ScalarDomain.prime_field(3)
        self.assertTrue(is_unit_monomial(F3.convert(2), F3, F3.one))


class FieldLinearAlgebraTests(SimpleTestCase):

    def setUp(self):
        self.Q = ScalarDomain.rationals()

    def test_identity_has_zero_nullspace(self):
        """Test rref_nullspace on the identity"""
        rank, null = rref_nullspace(build_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], self.Q), self.Q)
        self.assertEqual(rank, 3)
        self.assertEqual(null.dimension, 0)

    def test_zero_matrix_nullspace_is_everything(self):
        """Test rref_nullspace on a zero 2x5 matrix"""
        rank, null = rref_nullspace(build_matrix([[0] * 5, [0] * 5], self.Q), self.Q)
        self.assertEqual(rank, 0)
        self.assertEqual(null.dimension, 5)

    def test_hand_elimination(self):
        """Test [[1,1],[2,2]] has nullspace spanned by (1,-1)"""
        m = build_matrix([[1, 1], [2, 2]], self.Q)
        rank, null = rref_nullspace(m, self.Q)
        self.assertEqual(rank, 1)
        self.assertTrue(null.contains([self.Q.convert(1), self.Q.convert(-1)]))
        self.assertEqual(null.dimension, 1)

    def test_integer_matrix_needs_a_field(self):
        """Test that rref refuses Z"""
        Z = ScalarDomain.integers()
        with self.assertRaises(DomainNotField):
            rref_nullspace(build_matrix([[1]], Z), Z)

    def test_rref_is_canonical(self):
        """Test that equal row spaces give identical bases"""
        a = Subspace.from_rows([[1, 2, 3], [0, 1, 1]], 3, self.Q)
        b = Subspace.from_rows([[1, 3, 4], [2, 5, 7], [1, 1, 2]], 3, self.Q)
        self.assertEqual(a.rows, b.rows)
        again = Subspace.from_rows(a.rows, 3, self.Q)
        self.assertEqual(again.rows, a.rows)

    def test_subspace_compare(self):
        """Test the four comparison outcomes"""
        whole = Subspace.full(2, self.Q)
        zero = Subspace.zero(2, self.Q)
        e1 = Subspace.from_rows([[1, 0]], 2, self.Q)
        diagonal = Subspace.from_rows([[1, 1]], 2, self.Q)
        self.assertEqual(subspace_compare(whole, whole), EQUAL)
        self.assertEqual(subspace_compare(zero, whole), U_IN_V)
        self.assertEqual(subspace_compare(e1, diagonal), INCOMPARABLE)
        with self.assertRaises(AmbientMismatch):
            subspace_compare(e1, Subspace.zero(3, self.Q))

    def test_blockwise_reduction(self):
        """Test reducing block by block gives the row space of the whole stack"""
        rng = random.Random(7)
        rows = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(15)]
        blocks = [
            {k: {j: self.Q.convert(v) for j, v in enumerate(row) if v} for k, row in enumerate(rows[i:i + 5])}
            for i in range(0, 15, 5)
        ]
        reduced = reduced_row_space(blocks, 6, self.Q)
        self.assertLessEqual(reduced.shape[0], 6)
        whole = Subspace.from_rows(rows, 6, self.Q)
        self.assertEqual(Subspace.from_rows(reduced, 6, self.Q).rows, whole.rows)
        self.assertEqual(reduced_row_space([], 4, self.Q).shape, (0, 4))


class IntegerLatticeTests(SimpleTestCase):

    def test_diagonal_divisors(self):
        """Test diag(2, 6)"""
        divisors, kernel = smith_normal_form([[2, 0], [0, 6]])
        self.assertEqual(divisors, [2, 6])
        self.assertEqual(kernel.rank, 0)

    def test_zero_matrix(self):
        """Test the zero 3x3 matrix has no divisors and kernel Z^3"""
        divisors, kernel = smith_normal_form([[0, 0, 0]] * 3)
        self.assertEqual(divisors, [])
        self.assertEqual(kernel.rank, 3)

    def test_gcd_elimination(self):
        """Test [[2, 4]] has divisor 2 and kernel spanned by (2, -1)"""
        divisors, kernel = smith_normal_form([[2, 4]])
        self.assertEqual(divisors, [2])
        self.assertEqual(kernel.basis, ((2, -1),))

    def test_kernel_is_saturated(self):
        """Test that n v in L forces v in L"""
        divisors, kernel = smith_normal_form([[2, 4, 6], [4, 8, 12]])
        self.assertTrue(kernel.is_saturated())
        self.assertTrue(kernel.contains([2, -1, 0]))
        self.assertTrue(kernel.contains([3, 0, -1]))
        self.assertFalse(kernel.contains([1, 0, 0]))
        lattice = IntegerLattice.span([[2, 0]], 2)
        self.assertFalse(lattice.is_saturated())
        self.assertFalse(lattice.contains([1, 0]))

    def test_modular_rank_drops_exactly_at_divisor_primes(self):
        """Test rank over F_p < rank over Q iff p divides an elementary divisor"""
        rng = random.Random(11)
        for _ in range(10):
            m = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(6)]
            divisors = elementary_divisors(m)
            bad = set(failing_primes(divisors))
            generic = integer_rank(m)
            self.assertEqual(generic, len(divisors))
            for p in (2, 3, 5, 7, 11):
                self.assertEqual(modular_rank(m, p) < generic, p in bad)
