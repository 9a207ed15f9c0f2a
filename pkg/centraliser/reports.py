from dataclasses import dataclass, field


@dataclass
class CentraliserReport:
    """
    Dimensions of Ann, End, DEnd and the image of the action map for one module.

    divisors and failing_primes come from the integral annihilator lattice and
    stay None unless the check was asked for them over Q with q = 1 or -1.
    """

    module: str
    domain: dict
    order: int
    ann: int
    end: int
    dend: int
    divisors: list = None
    failing_primes: list = None
    dc_holds: bool = field(init=False)

    def __post_init__(self):
        self.dc_holds = self.image == self.dend

    @property
    def image(self):
        return self.order - self.ann

    @property
    def dims(self):
        return {'ann': self.ann, 'end': self.end, 'dend': self.dend, 'image': self.image}


@dataclass
class FieldDimensions:
    domain: dict
    ann: int
    end: int
    ann_exceeds_generic: bool = False
    end_exceeds_generic: bool = False


@dataclass
class BaseChangeReport:
    """
    Per-field dimensions of Ann and End against the generic ones.

    For integral parameters the elementary divisors of the annihilator system
    and the primes dividing them are included, with the rank of the integral
    annihilator lattice; `probed` maps each small prime to the annihilator
    dimension over F_p.
    """

    module: str
    generic: FieldDimensions
    fields: list
    divisors: list = None
    failing_primes: list = None
    integral_rank: int = None
    probed: dict = None
    consistent: bool = True

    @property
    def base_change_holds(self):
        return not any(f.ann_exceeds_generic for f in self.fields)


@dataclass
class CosaturationReport:
    """Ann(F X) against Ann(F C(X)) for a Young Sym(n)-set X."""

    module: str
    domain: dict
    closure: object
    ann: int
    ann_closure: int
    relation: str
    failing_minimal: list = field(default_factory=list)

    @property
    def base_change_holds(self):
        return self.relation == 'equal'
