import logging
from dataclasses import dataclass, field
from math import factorial

from centraliser.services import (
    cosaturation_criterion,
    dc_check,
    integral_annihilator_lattice,
    per_field,
)
from exactalgebra.domains import ScalarDomain
from exactalgebra.lattices import failing_primes
from heckecentral.exceptions import WrongCharacteristic
from partitions.shapes import Partition
from partitions.tableaux import capital_N
from permmodules.gsets import tensor_orbit_profile, tensor_space_module, young_gset
from permmodules.modules import Summand, hook_index
from permmodules.serializers import ModuleSpec

logger = logging.getLogger(__name__)


@dataclass
class HookReport:
    """Double centraliser data of a hook sum over one field."""

    n: int
    domain: dict
    summands: list
    idx: int
    N: int
    ann: int
    dend: int
    dc_holds: bool

    @property
    def holds(self):
        return self.dc_holds and self.ann == factorial(self.n) - self.N and self.dend == self.N


def hook_report(spec, fields):
    """
    One HookReport per field for a hook sum given as a ModuleSpec.

    Raises:
        NotAHookSum
    """
    _, idx = hook_index(spec.instantiate())
    N = capital_N(spec.n, idx)

    def run(domain):
        report = dc_check(spec.instantiate(domain))
        return HookReport(
            n=spec.n,
            domain=domain.descriptor(),
            summands=[s.label() for s in spec.summands],
            idx=idx,
            N=N,
            ann=report.ann,
            dend=report.dend,
            dc_holds=report.dc_holds,
        )

    reports = per_field(run, fields)
    for report in reports:
        if not report.holds:
            logger.error(f"Hook sum {spec.describe()} over {report.domain['label']}: {report}")
    return reports


@dataclass
class CounterexampleReport:
    domain: dict
    square: object
    rational: object
    divisors: list
    failing_primes: list
    ternary: object
    ternary_rational: object
    cosaturation: object

    @property
    def confirmed(self):
        return all([
            self.square.ann > self.rational.ann == 10,
            not self.square.dc_holds,
            self.rational.dc_holds,
            self.failing_primes == [2],
            self.ternary.dc_holds,
            self.ternary.ann == self.ternary_rational.ann,
            not self.cosaturation.base_change_holds,
        ])


def counterexample_report(domain):
    """
    M(2,2) over a field of characteristic 2 against its rational counterpart.

    Also covers M(2,2) + M(3,1) + M(4) over F_3 and the co-saturation
    criterion for Sym(4)/Sigma(2,2) over the given field.

    Raises:
        WrongCharacteristic unless the field has characteristic 2
    """
    if domain.characteristic != 2:
        raise WrongCharacteristic(f"The counterexample needs characteristic 2, not {domain.label}")
    square = (Summand(Partition((2, 2))),)
    rational_domain = ScalarDomain.rationals()
    spec = ModuleSpec(4, square, rational_domain, '1')
    rational_module = spec.instantiate()
    _, divisors = integral_annihilator_lattice(rational_module)
    ternary = spec.with_summands(square + (Summand(Partition((3, 1))), Summand(Partition((4,)))))
    report = CounterexampleReport(
        domain=domain.descriptor(),
        square=dc_check(spec.instantiate(domain)),
        rational=dc_check(rational_module),
        divisors=divisors,
        failing_primes=failing_primes(divisors),
        ternary=dc_check(ternary.instantiate(ScalarDomain.prime_field(3))),
        ternary_rational=dc_check(ternary.instantiate()),
        cosaturation=cosaturation_criterion(young_gset([Partition((2, 2))], 4, domain)),
    )
    if report.confirmed:
        logger.warning(f"M(2,2) over {domain.label} has no double centraliser property")
    else:
        logger.error(f"Counterexample over {domain.label} not reproduced: {report}")
    return report


@dataclass
class TensorFieldCheck:
    domain: dict
    ann: int
    dend: int
    dc_holds: bool


@dataclass
class TensorReport:
    n: int
    r: int
    m: int
    zeta: object
    idx: int
    expected_ann: int
    fields: list = field(default_factory=list)
    lattice_rank: int = None
    failing_primes: list = None

    @property
    def holds(self):
        fields_ok = all(f.dc_holds and f.ann == self.expected_ann for f in self.fields)
        lattice_ok = self.lattice_rank in (None, self.expected_ann) and not self.failing_primes
        return fields_ok and lattice_ok


def tensor_report(n, r, m, fields):
    """
    F[I(n, r)] as a Sym(m)-module: orbit data, closed form Ann rank
    m! - N_{m, idx}, per-field double centraliser checks and the integral lattice.
    """
    zeta, idx = tensor_orbit_profile(n, r, m)
    report = TensorReport(n, r, m, zeta, idx, factorial(m) - capital_N(m, idx))

    def run(domain):
        check = dc_check(tensor_space_module(n, r, m, domain))
        return TensorFieldCheck(domain.descriptor(), check.ann, check.dend, check.dc_holds)

    report.fields = per_field(run, fields)
    lattice, divisors = integral_annihilator_lattice(tensor_space_module(n, r, m, ScalarDomain.rationals()))
    report.lattice_rank = lattice.rank
    report.failing_primes = failing_primes(divisors)
    if not report.holds:
        logger.error(f"I({n},{r}) over Sym({m}) misses the closed form: {report}")
    return report
