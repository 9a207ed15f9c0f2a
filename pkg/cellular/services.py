import logging
from dataclasses import dataclass, field

from centraliser.services import annihilator
from exactalgebra.domains import is_unit_monomial
from exactalgebra.matrices import EQUAL, Subspace, subspace_compare
from hecke.algebra import pairing, sharp_automorphism
from heckecentral.exceptions import HypothesisFails, TriangularityViolation
from partitions.shapes import PartitionSet, coarsening_closure, is_cosaturated, partitions_of, transpose
from partitions.tableaux import standard_tableaux, tableau_dominance, transpose_tableau
from permmodules.modules import zeta_and_index
from .datum import cell_ideal, datum_for, ideal_law_holds, murphy_ideal

logger = logging.getLogger(__name__)


@dataclass
class TriangularityReport:
    n: int
    domain: dict
    pairs_checked: int = 0
    diagonal: list = field(default_factory=list)


@dataclass
class CellVerification:
    """Ann(X) against the cell ideal of the complement of the coarsening closure."""

    module: str
    tau: PartitionSet
    ann: int
    ideal: int
    relation: str

    @property
    def holds(self):
        return self.relation == EQUAL


@dataclass
class SharpTransport:
    sigma: PartitionSet
    relation: str
    murphy_ideal_law: bool = None

    @property
    def holds(self):
        return self.relation == EQUAL and self.murphy_ideal_law is not False


def _below(u, v, s, t):
    return tableau_dominance(u, s) and tableau_dominance(v, t)


def triangularity_check(datum):
    """
    Pairing table of the dual elements sharp(x_{s't'}) against the Murphy basis.

    For every lam and standard lam-tableaux s, t, u, v the pairing
    <sharp(x_{s't'}), x_uv> vanishes unless (u, v) is dominated by (s, t),
    and on the diagonal it is +-q^N.

    Raises:
        TriangularityViolation with the witness (lam, s, t, u, v)
    """
    algebra = datum.algebra
    domain = algebra.domain
    report = TriangularityReport(algebra.n, domain.descriptor())
    for lam in partitions_of(algebra.n):
        tableaux = standard_tableaux(lam)
        for s in tableaux:
            for t in tableaux:
                dual = datum.cell(lam, transpose_tableau(s), transpose_tableau(t))
                for u in tableaux:
                    for v in tableaux:
                        value = pairing(dual, datum.murphy[(lam, u, v)])
                        report.pairs_checked += 1
                        witness = (lam, s, t, u, v)
                        if (u, v) == (s, t):
                            if not is_unit_monomial(value.value, domain, algebra.q):
                                raise TriangularityViolation(
                                    f"Diagonal pairing {value} at {lam}, {s}, {t} is not a unit monomial",
                                    witness,
                                )
                            report.diagonal.append((lam, s, t, str(value)))
                        elif not value.is_zero and not _below(u, v, s, t):
                            raise TriangularityViolation(
                                f"Pairing {value} at {lam}: ({u}, {v}) is not below ({s}, {t})",
                                witness,
                            )
    logger.info(f"Triangularity holds for {algebra.describe()}: {report.pairs_checked} pairings")
    return report


def ann_cell_verify(module):
    """
    Compare Ann(X) with the cell ideal A(tau), tau the complement of the
    coarsening closure of zeta(X).

    For signed sums the comparison is with the Murphy ideal of the
    transposed set, the image of A(tau) under sharp.

    Raises:
        HypothesisFails when the coarsening closure is not co-saturated
    """
    zeta, _ = zeta_and_index(module)
    closure = coarsening_closure(zeta)
    if not is_cosaturated(closure):
        logger.warning(f"{module.describe()}: closure {closure} is not co-saturated")
        raise HypothesisFails(f"The coarsening closure {closure} of {zeta} is not co-saturated")
    tau = closure.complement()
    datum = datum_for(module.algebra)
    if any(s.signed for s in module.summands):
        transposed = PartitionSet(tau.degree, tuple(transpose(lam) for lam in tau))
        ideal = murphy_ideal(datum, transposed)
    else:
        ideal = cell_ideal(datum, tau)
    ann = annihilator(module)
    verdict = CellVerification(
        module=module.describe(),
        tau=tau,
        ann=ann.dimension,
        ideal=ideal.dimension,
        relation=subspace_compare(ann, ideal.subspace),
    )
    if not verdict.holds:
        logger.error(f"Ann({module.describe()}) is not the cell ideal A({tau}): {verdict.relation}")
    return verdict


def sharp_transport_check(datum, sigma):
    """
    sharp maps the Murphy span over sigma onto A(sigma'); when sigma is
    co-saturated the Murphy span is also checked to be an ideal.
    """
    algebra = datum.algebra
    if not isinstance(sigma, PartitionSet):
        sigma = PartitionSet(datum.n, tuple(sigma))
    tilde = murphy_ideal(datum, sigma)
    image = Subspace.from_rows(
        [sharp_automorphism(algebra.from_coordinates(row)).coordinates() for row in tilde.subspace.rows],
        algebra.dimension,
        algebra.domain,
    )
    transposed = PartitionSet(sigma.degree, tuple(transpose(mu) for mu in sigma))
    report = SharpTransport(sigma, subspace_compare(image, cell_ideal(datum, transposed).subspace))
    if is_cosaturated(sigma):
        report.murphy_ideal_law = ideal_law_holds(tilde, algebra)
    return report
