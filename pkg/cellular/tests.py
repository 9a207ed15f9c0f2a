from django.test import SimpleTestCase, tag

from centraliser.services import annihilator
from exactalgebra.domains import ScalarDomain
from exactalgebra.matrices import EQUAL
from hecke.algebra import HeckeAlgebra, x_element
from heckecentral.exceptions import HypothesisFails, ShapeMismatch
from partitions.shapes import Partition, PartitionSet, coarsening_closure, partitions_of
from partitions.tableaux import StandardTableau, spec_dimension, standard_tableaux
from permmodules.modules import Summand, direct_sum, young_sum
from .datum import (
    basis_rank,
    cell_basis_export,
    cell_ideal,
    cell_module,
    cell_module_is_independent,
    ideal_law_holds,
    is_ideal_set,
    murphy_element,
    regular_cell_basis,
)
from .serializers import CellVerificationSerializer
from .services import ann_cell_verify, sharp_transport_check, triangularity_check


def P(*parts):
    return Partition(parts)


class MurphyBasisTests(SimpleTestCase):

    def setUp(self):
        self.generic3 = HeckeAlgebra.generic(3)

    def test_superstandard_pair_is_x(self):
        """Test x_st with s = t = t^lam is x(lam)"""
        for lam in partitions_of(3):
            t = StandardTableau.superstandard(lam)
            self.assertEqual(murphy_element(self.generic3, t, t), x_element(self.generic3, lam))

    def test_shapes_must_agree(self):
        """Test tableaux of different shapes are refused"""
        with self.assertRaises(ShapeMismatch):
            murphy_element(
                self.generic3,
                StandardTableau.superstandard(P(2, 1)),
                StandardTableau.superstandard(P(3)),
            )

    def test_basis_sizes(self):
        """Test the datum has n! elements for n = 2, 3"""
        self.assertEqual(len(regular_cell_basis(2, 't', ScalarDomain.function_field())), 2)
        self.assertEqual(len(regular_cell_basis(3, 't', ScalarDomain.function_field())), 6)

    def test_basis_is_complete(self):
        """Test the C elements have full rank over Q(t) and F_2(t)"""
        self.assertEqual(basis_rank(regular_cell_basis(3, 't', ScalarDomain.function_field())), 6)
        self.assertEqual(basis_rank(regular_cell_basis(3, 't', ScalarDomain.function_field(2))), 6)
        self.assertEqual(basis_rank(regular_cell_basis(4, 't', ScalarDomain.function_field())), 24)

    def test_export(self):
        """Test the JSON export lists every basis element"""
        exported = cell_basis_export(regular_cell_basis(3, 1, ScalarDomain.rationals()))
        self.assertEqual(len(exported), 6)
        self.assertEqual(set(exported[0]), {'lambda', 's', 't', 'element'})
        self.assertEqual(len(exported[0]['element']), 6)


class CellIdealTests(SimpleTestCase):

    def setUp(self):
        self.datum = regular_cell_basis(3, 1, ScalarDomain.rationals())
        self.generic = regular_cell_basis(4, 't', ScalarDomain.function_field())

    def test_extreme_ideals(self):
        """Test A(empty set) = 0 and A(Par(n)) is the algebra"""
        self.assertEqual(cell_ideal(self.datum, PartitionSet(3, ())).dimension, 0)
        self.assertEqual(cell_ideal(self.datum, partitions_of(3)).dimension, 6)

    def test_sign_ideal(self):
        """Test A({(1,1,1)}) at q = 1 is spanned by the alternating sum"""
        ideal = cell_ideal(self.datum, PartitionSet.of(3, [[1, 1, 1]]))
        self.assertEqual(ideal.dimension, 1)
        algebra = self.datum.algebra
        alternating = [(-1) ** w.length for w in algebra.basis]
        self.assertTrue(ideal.subspace.contains([algebra.domain.convert(a) for a in alternating]))

    def test_nesting_and_sums(self):
        """Test A(tau1) in A(tau2) for tau1 in tau2, and A(tau1 + tau2) = A(tau1) + A(tau2)"""
        small = PartitionSet.of(4, [[1, 1, 1, 1], [2, 1, 1]])
        large = PartitionSet.of(4, [[1, 1, 1, 1], [2, 1, 1], [2, 2]])
        other = PartitionSet.of(4, [[3, 1]])
        self.assertTrue(cell_ideal(self.generic, large).subspace.contains_subspace(
            cell_ideal(self.generic, small).subspace
        ))
        joined = cell_ideal(self.generic, small).subspace.join(cell_ideal(self.generic, other).subspace)
        self.assertEqual(cell_ideal(self.generic, small.union(other)).subspace, joined)

    def test_ideal_law(self):
        """Test A(tau) is a two-sided ideal for tau closed downwards"""
        for tau in (
            PartitionSet.of(4, [[1, 1, 1, 1]]),
            PartitionSet.of(4, [[1, 1, 1, 1], [2, 1, 1], [2, 2]]),
            PartitionSet.of(4, [[1, 1, 1, 1], [2, 1, 1], [2, 2], [3, 1]]),
        ):
            self.assertTrue(is_ideal_set(tau))
            self.assertTrue(ideal_law_holds(cell_ideal(self.generic, tau), self.generic.algebra))
        self.assertFalse(is_ideal_set(PartitionSet.of(4, [[4]])))


class CellModuleTests(SimpleTestCase):

    def setUp(self):
        self.generic = regular_cell_basis(4, 't', ScalarDomain.function_field())

    def test_trivial_and_sign(self):
        """Test W(n) has T_i = q and W(1^n) has T_i = -1"""
        algebra = self.generic.algebra
        top = cell_module(self.generic, P(4))
        bottom = cell_module(self.generic, P(1, 1, 1, 1))
        for g in top.generators:
            self.assertEqual(g.to_list(), [[algebra.q]])
        for g in bottom.generators:
            self.assertEqual(g.to_list(), [[-algebra.ring.one]])

    def test_dimensions_and_relations(self):
        """Test dim W(lam) = dim(lam), the Hecke relations and independence of v0"""
        for lam in partitions_of(4):
            module = cell_module(self.generic, lam)
            self.assertEqual(module.dimension, spec_dimension(lam))
            self.assertTrue(module.check_relations())
            self.assertTrue(cell_module_is_independent(self.generic, lam))

    def test_standard_character(self):
        """Test W(2,1) at q = 1 has the character of the standard representation"""
        datum = regular_cell_basis(3, 1, ScalarDomain.rationals())
        module = cell_module(datum, P(2, 1))
        for w in datum.algebra.basis:
            fixed = sum(1 for i in range(1, 4) if w(i) == i)
            diagonal = sum((row[i] for i, row in enumerate(module.matrix(w).to_list())), datum.domain.zero)
            self.assertEqual(diagonal, datum.domain.convert(fixed - 1))


class TriangularityTests(SimpleTestCase):

    def test_small_ranks(self):
        """Test the pairing table for n = 2 and 3 over Q(t)"""
        two = triangularity_check(regular_cell_basis(2, 't', ScalarDomain.function_field()))
        self.assertEqual(two.pairs_checked, 2)
        three = triangularity_check(regular_cell_basis(3, 't', ScalarDomain.function_field()))
        self.assertEqual(three.pairs_checked, 1 + 16 + 1)
        self.assertEqual(len(three.diagonal), 6)

    def test_rank_four(self):
        """Test the pairing table for n = 4 over Q(t)"""
        report = triangularity_check(regular_cell_basis(4, 't', ScalarDomain.function_field()))
        self.assertEqual(report.pairs_checked, 1 + 81 + 16 + 81 + 1)
        self.assertEqual(len(report.diagonal), 24)

    def test_numeric_parameter(self):
        """Test the pairing table at q = 1 over F_3"""
        report = triangularity_check(regular_cell_basis(3, 1, ScalarDomain.prime_field(3)))
        self.assertEqual(len(report.diagonal), 6)


class CellVerifyTests(SimpleTestCase):

    def test_annihilators_are_cell_ideals(self):
        """Test Ann(X) = A(tau) for hook sums over F_3, F_2 and Q"""
        cases = [
            ([P(2, 1)], ScalarDomain.prime_field(3), 1, 1),
            ([P(3, 1), P(4)], ScalarDomain.prime_field(2), 1, 14),
            ([P(2, 1)], ScalarDomain.rationals(), -1, 1),
        ]
        for shapes, domain, q, dimension in cases:
            module = young_sum(shapes, HeckeAlgebra(shapes[0].degree, domain, q))
            verdict = ann_cell_verify(module)
            self.assertEqual(verdict.relation, EQUAL)
            self.assertEqual(verdict.ann, dimension)
        verdict = ann_cell_verify(young_sum([P(2, 1)], HeckeAlgebra(3, ScalarDomain.prime_field(3), 1)))
        self.assertEqual(list(verdict.tau), [P(1, 1, 1)])
        self.assertTrue(CellVerificationSerializer(verdict).data['holds'])

    def test_signed_sum(self):
        """Test Ann(M_s(2,1)) is the image of the cell ideal under sharp"""
        module = young_sum([P(2, 1)], HeckeAlgebra(3, ScalarDomain.rationals(), 1), signed=True)
        self.assertTrue(ann_cell_verify(module).holds)

    def test_square_shape_is_refused(self):
        """Test M(2,2) has no co-saturated closure"""
        module = young_sum([P(2, 2)], HeckeAlgebra(4, ScalarDomain.rationals(), 1))
        with self.assertRaises(HypothesisFails):
            ann_cell_verify(module)

    def test_sharp_transport(self):
        """Test sharp carries the Murphy spans onto the cell ideals of the transposed sets"""
        datum = regular_cell_basis(3, 't', ScalarDomain.function_field())
        report = sharp_transport_check(datum, PartitionSet.of(3, [[3], [2, 1]]))
        self.assertEqual(report.relation, EQUAL)
        self.assertTrue(report.murphy_ideal_law)
        self.assertTrue(report.holds)

    @tag('slow')
    def test_annihilators_shrink_under_coarsening(self):
        """Test Ann(M(lam)) lies in Ann(M(mu)) for every coarsening mu of lam"""
        for domain in (ScalarDomain.rationals(), ScalarDomain.prime_field(2), ScalarDomain.prime_field(3)):
            for q in (1, -1):
                algebra = HeckeAlgebra(4, domain, q)
                anns = {lam: annihilator(young_sum([lam], algebra)) for lam in partitions_of(4)}
                for lam in partitions_of(4):
                    for mu in coarsening_closure(PartitionSet(4, (lam,))):
                        self.assertTrue(anns[mu].contains_subspace(anns[lam]))

    def test_closure_does_not_change_annihilator(self):
        """Test Ann(X) = Ann(X-hat) for M(2,2) and M(2,1,1) over F_2"""
        algebra = HeckeAlgebra(4, ScalarDomain.prime_field(2), 1)
        for lam in (P(2, 2), P(2, 1, 1)):
            closure = coarsening_closure(PartitionSet(4, (lam,)))
            hat = direct_sum([Summand(mu) for mu in closure], algebra)
            self.assertEqual(annihilator(young_sum([lam], algebra)), annihilator(hat))


class TableauIndexTests(SimpleTestCase):

    def test_index_sets_are_conjugate_tableaux(self):
        """Test N(lam) is the set of standard lam'-tableaux"""
        datum = regular_cell_basis(4, 1, ScalarDomain.rationals())
        self.assertEqual(list(datum.index[P(3, 1)]), standard_tableaux(P(2, 1, 1)))
        self.assertEqual(sum(len(v) ** 2 for v in datum.index.values()), 24)
