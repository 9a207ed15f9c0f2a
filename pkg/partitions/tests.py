from math import factorial

from django.test import SimpleTestCase

from heckecentral.exceptions import DegreeMismatch, InvalidPartition, RangeError, ShapeMismatch
from .shapes import (
    Composition,
    Partition,
    PartitionSet,
    coarsening_closure,
    composition_to_partition,
    dominance_leq,
    dominance_upward_closure,
    hook_partition,
    is_cosaturated,
    is_hook,
    partitions_of,
    simple_coarsenings,
    transpose,
)
from .tableaux import (
    StandardTableau,
    capital_N,
    d_permutation,
    hook_lengths,
    restrict,
    spec_dimension,
    standard_tableaux,
    tableau_dominance,
    transpose_tableau,
)


def P(*parts):
    return Partition(parts)


class PartitionTests(SimpleTestCase):

    def test_partitions_of_small_degrees(self):
        """Test enumeration sizes and canonical order"""
        self.assertEqual(partitions_of(0).members, (P(),))
        self.assertEqual(
            list(partitions_of(4)),
            [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)],
        )
        self.assertEqual(len(partitions_of(6)), 11)

    def test_rejects_bad_parts(self):
        """Test that increasing or non-positive parts are refused"""
        with self.assertRaises(InvalidPartition):
            P(1, 2)
        with self.assertRaises(InvalidPartition):
            P(2, 0)
        with self.assertRaises(InvalidPartition):
            Partition.parse('3,1', degree=5)

    def test_dominance(self):
        """Test prefix sum comparisons"""
        self.assertTrue(dominance_leq(P(2, 2), P(3, 1)))
        self.assertFalse(dominance_leq(P(3, 1), P(2, 2)))
        self.assertTrue(dominance_leq(P(2, 1, 1), P(2, 1, 1)))
        with self.assertRaises(DegreeMismatch):
            dominance_leq(P(2), P(2, 1))

    def test_transpose_reverses_dominance(self):
        """Test lam <= mu iff mu' <= lam' for n <= 6"""
        for n in range(1, 7):
            for lam in partitions_of(n):
                self.assertEqual(transpose(transpose(lam)), lam)
                for mu in partitions_of(n):
                    self.assertEqual(
                        dominance_leq(lam, mu), dominance_leq(transpose(mu), transpose(lam))
                    )

    def test_hooks(self):
        """Test hook recognition and construction"""
        self.assertTrue(is_hook(P(3, 1, 1)))
        self.assertTrue(is_hook(P(5)))
        self.assertFalse(is_hook(P(2, 2)))
        self.assertEqual(hook_partition(2, 4), P(2, 1, 1))

    def test_composition_to_partition(self):
        """Test sorting and dropping zeros"""
        self.assertEqual(composition_to_partition(Composition((1, 0, 3))), P(3, 1))
        self.assertEqual(list(Composition((2, 0, 2)).blocks()), [range(1, 3), range(3, 5)])


class ClosureTests(SimpleTestCase):

    def setUp(self):
        self.n = 4

    def test_coarsening_closure_examples(self):
        """Test closures of (2,1,1), (4) and (2,2)"""
        closure = coarsening_closure(PartitionSet.of(4, [[2, 1, 1]]))
        self.assertEqual(list(closure), [P(4), P(3, 1), P(2, 2), P(2, 1, 1)])
        self.assertEqual(list(coarsening_closure(PartitionSet.of(4, [[4]]))), [P(4)])
        self.assertEqual(list(coarsening_closure(PartitionSet.of(4, [[2, 2]]))), [P(4), P(2, 2)])

    def test_simple_coarsenings(self):
        """Test one merge step of (2,1,1)"""
        self.assertEqual(list(simple_coarsenings(P(2, 1, 1))), [P(3, 1), P(2, 2)])

    def test_hook_closure_is_first_part_bound(self):
        """Test closure of (a,1^b) is every partition with first part at least a"""
        for n in range(1, 8):
            for a in range(1, n + 1):
                closure = coarsening_closure(PartitionSet(n, (hook_partition(a, n),)))
                expected = [lam for lam in partitions_of(n) if lam.first >= a]
                self.assertEqual(list(closure), expected)

    def test_coarsening_implies_dominance(self):
        """Test every coarsening of lam dominates lam"""
        for n in range(1, 7):
            for lam in partitions_of(n):
                for mu in coarsening_closure(PartitionSet(n, (lam,))):
                    self.assertTrue(dominance_leq(lam, mu))

    def test_upward_closure(self):
        """Test dominance upward closures"""
        self.assertEqual(
            list(dominance_upward_closure(PartitionSet.of(4, [[2, 2]]))),
            [P(4), P(3, 1), P(2, 2)],
        )
        self.assertEqual(dominance_upward_closure(PartitionSet.of(4, [[1, 1, 1, 1]])), partitions_of(4))
        self.assertEqual(list(dominance_upward_closure(PartitionSet.of(4, [[4]]))), [P(4)])

    def test_cosaturation(self):
        """Test the co-saturation predicate"""
        self.assertTrue(is_cosaturated(PartitionSet.of(4, [[2, 2], [3, 1], [4]])))
        self.assertFalse(is_cosaturated(PartitionSet.of(4, [[2, 2], [4]])))
        self.assertTrue(is_cosaturated(partitions_of(self.n)))

    def test_closures_are_idempotent_and_monotone(self):
        """Test closure(closure(s)) = closure(s) and s <= t implies closure(s) <= closure(t)"""
        small = PartitionSet.of(5, [[3, 2]])
        large = PartitionSet.of(5, [[3, 2], [2, 2, 1]])
        for closure in (coarsening_closure, dominance_upward_closure):
            self.assertEqual(closure(closure(large)), closure(large))
            self.assertTrue(closure(small).issubset(closure(large)))


class TableauTests(SimpleTestCase):

    def setUp(self):
        self.square = P(2, 2)
        self.column_filled = StandardTableau(((1, 3), (2, 4)))

    def test_standard_tableaux_counts(self):
        """Test tableau counts and that t^lam comes first"""
        self.assertEqual(len(standard_tableaux(P(4))), 1)
        self.assertEqual(len(standard_tableaux(self.square)), 2)
        tableaux = standard_tableaux(P(3, 1))
        self.assertEqual(len(tableaux), 3)
        self.assertEqual(tableaux[0], StandardTableau.superstandard(P(3, 1)))

    def test_invalid_tableau(self):
        """Test that a decreasing column is refused"""
        with self.assertRaises(ShapeMismatch):
            StandardTableau(((2, 3), (1, 4)))

    def test_tableau_dominance(self):
        """Test dominance between the two (2,2) tableaux"""
        top = StandardTableau.superstandard(self.square)
        self.assertTrue(tableau_dominance(top, top))
        self.assertTrue(tableau_dominance(self.column_filled, top))
        self.assertFalse(tableau_dominance(top, self.column_filled))
        with self.assertRaises(ShapeMismatch):
            tableau_dominance(top, StandardTableau.superstandard(P(3, 1)))

    def test_d_permutation(self):
        """Test d(t^lam) = e and d for the column filled (2,2) tableau"""
        self.assertEqual(d_permutation(StandardTableau.superstandard(self.square)), (1, 2, 3, 4))
        self.assertEqual(d_permutation(self.column_filled), (1, 3, 2, 4))

    def test_d_permutation_reproduces_tableau(self):
        """Test applying d(s) to t^lam gives back s"""
        shape = P(3, 1)
        reference = StandardTableau.superstandard(shape)
        for s in standard_tableaux(shape):
            d = d_permutation(s)
            image = tuple(tuple(d[a - 1] for a in row) for row in reference.rows)
            self.assertEqual(image, s.rows)

    def test_restrict_and_transpose(self):
        """Test restriction shapes and transposed tableaux"""
        self.assertEqual(restrict(self.column_filled, 2).shape, P(1, 1))
        self.assertEqual(transpose_tableau(self.column_filled).rows, ((1, 2), (3, 4)))
        self.assertEqual(hook_lengths(P(3, 1)), [[4, 2, 1], [1]])


class DimensionTests(SimpleTestCase):

    def test_spec_dimension(self):
        """Test dim(n) = 1 and dim(3,1) = 3"""
        self.assertEqual(spec_dimension(P(4)), 1)
        self.assertEqual(spec_dimension(P(3, 1)), 3)

    def test_sum_of_squares_is_factorial(self):
        """Test sum of dim^2 over partitions of n equals n! for n <= 6"""
        for n in range(1, 7):
            self.assertEqual(sum(spec_dimension(lam) ** 2 for lam in partitions_of(n)), factorial(n))

    def test_capital_N(self):
        """Test N(n,m) values"""
        self.assertEqual(capital_N(4, 4), 1)
        self.assertEqual(capital_N(4, 3), 10)
        self.assertEqual(capital_N(4, 2), 23)
        self.assertEqual(capital_N(5, 3), 78)
        with self.assertRaises(RangeError):
            capital_N(4, 5)
