import random
from itertools import product

from django.conf import settings
from django.test import SimpleTestCase

from exactalgebra.domains import Scalar, ScalarDomain
from heckecentral.exceptions import DegreeMismatch, RankMismatch
from partitions.shapes import Composition, Partition, partitions_of
from .algebra import (
    HeckeAlgebra,
    dagger_involution,
    hecke_multiply,
    pairing,
    sharp_automorphism,
    specialise_element,
    star_involution,
    x_element,
    y_element,
)
from .permutations import (
    Perm,
    all_perms,
    coset_factorise,
    double_coset_count,
    min_coset_reps,
    young_subgroup,
)


def random_element(algebra, rng, size=4):
    """A random element with small integer (times q) coefficients."""
    terms = {}
    for w in rng.sample(algebra.basis, min(size, len(algebra.basis))):
        c = algebra.domain.convert(rng.randint(-3, 3))
        if rng.random() < 0.5:
            c = c * algebra.q
        terms[w] = c
    return algebra.element(terms)


class PermutationTests(SimpleTestCase):

    def test_composition_convention(self):
        """Test (u*w)(i) = u(w(i))"""
        u = Perm((2, 3, 1))
        w = Perm((2, 1, 3))
        self.assertEqual((u * w).images, (3, 2, 1))
        self.assertEqual(Perm.simple(1, 3).left_simple(2), Perm.simple(2, 3) * Perm.simple(1, 3))

    def test_reduced_words(self):
        """Test that reduced words have length l(w) and rebuild w"""
        for n in range(1, 5):
            for w in all_perms(n):
                self.assertEqual(len(w.reduced_word), w.length)
                self.assertEqual(Perm.from_word(w.reduced_word, n), w)

    def test_left_length_rule(self):
        """Test l(s_i w) > l(w) iff i appears before i+1"""
        for w in all_perms(4):
            for i in range(1, 4):
                self.assertEqual(w.left_length_increases(i), w.left_simple(i).length > w.length)

    def test_young_subgroup(self):
        """Test order and generators of Sigma(2,2)"""
        data = young_subgroup(Composition((2, 2)), 4)
        self.assertEqual(data.order, 4)
        self.assertEqual(data.generators, (1, 3))
        with self.assertRaises(DegreeMismatch):
            young_subgroup(Composition((2, 1)), 4)

    def test_min_coset_reps(self):
        """Test |D_lam| and minimality in each coset"""
        self.assertEqual(min_coset_reps(Partition((3,))), [Perm.identity(3)])
        self.assertEqual(len(min_coset_reps(Partition((2, 2)))), 6)
        for n in range(1, 6):
            for lam in partitions_of(n):
                subgroup = young_subgroup(lam).elements
                for d in min_coset_reps(lam):
                    self.assertTrue(all((d * v).length >= d.length for v in subgroup))

    def test_coset_factorise(self):
        """Test w = d v with additive lengths for all w in Sym(4)"""
        lam = Partition((2, 2))
        reps = set(min_coset_reps(lam))
        subgroup = set(young_subgroup(lam).elements)
        for w in all_perms(4):
            d, v = coset_factorise(w, lam)
            self.assertIn(d, reps)
            self.assertIn(v, subgroup)
            self.assertEqual(d * v, w)
            self.assertEqual(d.length + v.length, w.length)
        d = Perm((1, 3, 2, 4))
        self.assertEqual(coset_factorise(d, lam), (d, Perm.identity(4)))

    def test_double_coset_count(self):
        """Test |Sigma(2,2) \\ Sym(4) / Sigma(2,2)| = 3"""
        self.assertEqual(double_coset_count(Partition((2, 2)), Partition((2, 2))), 3)
        self.assertEqual(double_coset_count(Partition((3, 1)), Partition((4,))), 1)


class HeckeMultiplicationTests(SimpleTestCase):

    def setUp(self):
        self.H3 = HeckeAlgebra.generic(3)
        self.H4 = HeckeAlgebra.generic(4)
        self.rng = random.Random(settings.HECKE_RANDOM_SEED)

    def test_identity(self):
        """Test T_e T_w = T_w"""
        for w in self.H3.basis:
            self.assertEqual(self.H3.one() * self.H3.T(w), self.H3.T(w))
            self.assertEqual(self.H3.T(w) * self.H3.one(), self.H3.T(w))

    def test_quadratic_relation(self):
        """Test T_1 T_1 = (q-1) T_1 + q T_e"""
        T1 = self.H3.generator(1)
        q = self.H3.q
        expected = T1.scale(q - 1) + self.H3.one().scale(q)
        self.assertEqual(T1 * T1, expected)

    def test_braid_relation(self):
        """Test T_1 T_2 T_1 = T_2 T_1 T_2"""
        T1, T2 = self.H3.generator(1), self.H3.generator(2)
        self.assertEqual(T1 * T2 * T1, T2 * T1 * T2)
        self.assertEqual(T1 * T2 * T1, self.H3.T(Perm((3, 2, 1))))

    def test_group_algebra_at_q_equal_one(self):
        """Test T_u T_w = T_{uw} when q = 1"""
        H = HeckeAlgebra(3, ScalarDomain.rationals(), 1)
        for u, w in product(H.basis, repeat=2):
            self.assertEqual(H.T(u) * H.T(w), H.T(u * w))

    def test_associativity_exhaustive_rank_three(self):
        """Test (T_u T_v) T_w = T_u (T_v T_w) on Sym(3)"""
        H = self.H3
        for u, v, w in product(H.basis, repeat=3):
            self.assertEqual((H.T(u) * H.T(v)) * H.T(w), H.T(u) * (H.T(v) * H.T(w)))

    def test_associativity_random_rank_four(self):
        """Test associativity on random elements of Hec(4)"""
        for _ in range(5):
            a, b, c = (random_element(self.H4, self.rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))

    def test_rank_mismatch(self):
        """Test that elements of different ranks cannot be multiplied"""
        with self.assertRaises(RankMismatch):
            hecke_multiply(self.H3.one(), self.H4.one())


class InvolutionTests(SimpleTestCase):

    def setUp(self):
        self.H3 = HeckeAlgebra.generic(3)
        self.H4 = HeckeAlgebra.generic(4)
        self.rng = random.Random(settings.HECKE_RANDOM_SEED)

    def test_star_is_an_anti_automorphism(self):
        """Test (ab)^* = b^* a^* and ** = id"""
        T1, T2 = self.H3.generator(1), self.H3.generator(2)
        self.assertEqual(star_involution(self.H3.one()), self.H3.one())
        self.assertEqual(star_involution(T1 * T2), T2 * T1)
        for _ in range(5):
            a, b = random_element(self.H4, self.rng), random_element(self.H4, self.rng)
            self.assertEqual(star_involution(a * b), star_involution(b) * star_involution(a))
            self.assertEqual(star_involution(star_involution(a)), a)

    def test_star_fixes_x_elements(self):
        """Test x(alpha)^* = x(alpha) for compositions of 4"""
        for alpha in [(4,), (2, 2), (1, 3), (2, 1, 1), (1, 2, 1), (1, 1, 1, 1)]:
            x = x_element(self.H4, Composition(alpha))
            self.assertEqual(star_involution(x), x)

    def test_sharp_is_an_involutive_automorphism(self):
        """Test sharp(sharp(T_w)) = T_w and sharp(ab) = sharp(a) sharp(b)"""
        self.assertEqual(sharp_automorphism(self.H4.one()), self.H4.one())
        for w in self.H4.basis:
            T = self.H4.T(w)
            self.assertEqual(sharp_automorphism(sharp_automorphism(T)), T)
        for _ in range(5):
            a, b = random_element(self.H4, self.rng), random_element(self.H4, self.rng)
            self.assertEqual(sharp_automorphism(a * b), sharp_automorphism(a) * sharp_automorphism(b))

    def test_sharp_at_q_equal_one_is_the_sign_twist(self):
        """Test sharp(T_w) = (-1)^l(w) T_w when q = 1"""
        H = HeckeAlgebra(4, ScalarDomain.rationals(), 1)
        for w in H.basis:
            self.assertEqual(sharp_automorphism(H.T(w)), H.T(w).scale((-1) ** w.length))

    def test_dagger_is_sharp_after_star(self):
        """Test dagger = sharp o star on every T_w for n <= 4"""
        for n in range(1, 5):
            H = HeckeAlgebra.generic(n)
            for w in H.basis:
                T = H.T(w)
                self.assertEqual(dagger_involution(T), sharp_automorphism(star_involution(T)))
                self.assertEqual(dagger_involution(dagger_involution(T)), T)


class YoungElementTests(SimpleTestCase):

    def setUp(self):
        self.H4 = HeckeAlgebra.generic(4)

    def test_x_elements(self):
        """Test x(1^n), x(2,2) and x(n)"""
        self.assertEqual(x_element(self.H4, Composition((1, 1, 1, 1))), self.H4.one())
        x = x_element(self.H4, Composition((2, 2)))
        self.assertEqual(
            set(x.terms),
            {Perm((1, 2, 3, 4)), Perm((2, 1, 3, 4)), Perm((1, 2, 4, 3)), Perm((2, 1, 4, 3))},
        )
        self.assertEqual(len(x_element(self.H4, Composition((4,))).terms), 24)

    def test_y_elements(self):
        """Test y(1^n) and y(2) at n = 2"""
        q = self.H4.q
        self.assertEqual(y_element(self.H4, Composition((1, 1, 1, 1))), self.H4.one().scale(q ** 6))
        H2 = HeckeAlgebra.generic(2)
        expected = H2.one().scale(-H2.q) + H2.generator(1)
        self.assertEqual(y_element(H2, Composition((2,))), expected)

    def test_eigenvalue_laws(self):
        """Test T_i x(lam) = q x(lam) and T_i y(lam) = -y(lam) for i in J(lam)"""
        for n in range(2, 6):
            H = HeckeAlgebra.generic(n)
            for lam in partitions_of(n):
                x, y = x_element(H, lam), y_element(H, lam)
                for i in young_subgroup(lam).generators:
                    T = H.generator(i)
                    self.assertEqual(T * x, x.scale(H.q))
                    self.assertEqual(T * y, -y)


class PairingTests(SimpleTestCase):

    def setUp(self):
        self.H3 = HeckeAlgebra.generic(3)
        self.rng = random.Random(settings.HECKE_RANDOM_SEED)

    def test_basic_values(self):
        """Test <T_e, T_e> = 1 and <T_1, T_1> = q at n = 2"""
        H2 = HeckeAlgebra.generic(2)
        self.assertEqual(pairing(H2.one(), H2.one()), Scalar.of(H2.domain, 1))
        self.assertEqual(pairing(H2.generator(1), H2.generator(1)), H2.parameter())

    def test_symmetric_and_matches_identity_coefficient(self):
        """Test <a,b> = <b,a> = coefficient of T_e in a b^*"""
        e = Perm.identity(3)
        for _ in range(10):
            a, b = random_element(self.H3, self.rng), random_element(self.H3, self.rng)
            self.assertEqual(pairing(a, b), pairing(b, a))
            product_coefficient = (a * star_involution(b)).coefficient(e)
            self.assertEqual(pairing(a, b).value, product_coefficient)


class SpecialisationTests(SimpleTestCase):

    def test_specialise_to_q_equal_one(self):
        """Test that t -> 1 turns Hecke products into group products"""
        generic = HeckeAlgebra.generic(3)
        group = HeckeAlgebra(3, ScalarDomain.rationals(), 1)
        T1, T2 = generic.generator(1), generic.generator(2)
        image = specialise_element(T1 * T1 * T2, group)
        self.assertEqual(image, group.T(Perm.simple(2, 3)))

    def test_specialisation_is_multiplicative(self):
        """Test specialise(ab) = specialise(a) specialise(b) at q = 2 over F_5"""
        generic = HeckeAlgebra.generic(3, 5)
        target = HeckeAlgebra(3, ScalarDomain.prime_field(5), 2)
        rng = random.Random(3)
        a, b = random_element(generic, rng), random_element(generic, rng)
        self.assertEqual(
            specialise_element(a * b, target),
            specialise_element(a, target) * specialise_element(b, target),
        )
