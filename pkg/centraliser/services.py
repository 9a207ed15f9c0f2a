"""
Annihilators, endomorphism algebras and double centralisers.

Every computation reduces to the nullspace of a linear system over a field:

* Ann(P): h = sum c_w T_w with sum_w c_w rho(T_w) = 0,
* End(P): matrices commuting with rho(T_1), ..., rho(T_{n-1}),
* DEnd(P): matrices commuting with a basis of End(P).

Integral questions (q = 1 or -1) go through the Smith normal form of the
annihilator system.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from math import factorial

from django.conf import settings
from sympy import primerange

from exactalgebra.domains import RATIONAL, Scalar, ScalarDomain, specialize
from exactalgebra.lattices import failing_primes, modular_rank, smith_normal_form
from exactalgebra.matrices import (
    build_matrix,
    reduced_row_space,
    rref_nullspace,
    sparse_matrix,
    subspace_compare,
)
from hecke.algebra import HeckeAlgebra
from hecke.permutations import double_coset_count
from heckecentral.exceptions import (
    BasisMismatch,
    DomainNotField,
    HypothesisFails,
    InvariantViolation,
    NonIntegralParameter,
)
from partitions.shapes import coarsening_closure, is_cosaturated
from partitions.tableaux import spec_dimension
from permmodules.gsets import GSetModule, cosaturation_gset, young_gset
from permmodules.modules import ModuleRep, zeta_and_index
from permmodules.serializers import ModuleSpec
from .reports import BaseChangeReport, CentraliserReport, CosaturationReport, FieldDimensions

logger = logging.getLogger(__name__)


def as_representation(p):
    """A ModuleRep for either a ModuleRep or a GSetModule."""
    if isinstance(p, GSetModule):
        return p.as_module()
    return p


def _require_field(module):
    if not module.domain.is_field:
        raise DomainNotField(f"{module.describe()}: linear systems need a field")


def _action_rows(module):
    """Distinct non-zero rows (a, b) -> (rho(T_w)[a][b])_w of the annihilator system."""
    table = [matrix.to_list() for matrix in module.action_table()]
    d = module.dimension
    seen, rows = set(), []
    for a in range(d):
        for b in range(d):
            row = tuple(matrix[a][b] for matrix in table)
            if any(row) and row not in seen:
                seen.add(row)
                rows.append(list(row))
    return rows


def annihilator_system(module):
    return build_matrix(_action_rows(module), module.domain, factorial(module.n))


def _check_ideal(module, ann, members=5, words=5):
    """Spot check that T_w h and h T_w stay in Ann for random members h and words w."""
    if not settings.HECKE_SANITY_CHECKS or not ann.dimension:
        return
    rng = random.Random(settings.HECKE_RANDOM_SEED)
    algebra = module.algebra
    for _ in range(members):
        h = algebra.from_coordinates(rng.choice(ann.rows))
        for _ in range(words):
            T = algebra.T(rng.choice(algebra.basis))
            for product in (T * h, h * T):
                if not ann.contains(product.coordinates()):
                    raise InvariantViolation(f"Ann({module.describe()}) is not closed under multiplication")


def annihilator(p):
    """
    Ann(P) as a subspace of the algebra, in T_w coordinates.

    Args:
        p: ModuleRep or GSetModule over a field
    """
    module = as_representation(p)
    _require_field(module)
    _, ann = rref_nullspace(annihilator_system(module), module.domain)
    _check_ideal(module, ann)
    logger.info(f"Ann({module.describe()}) has dimension {ann.dimension}")
    return ann


def _commutation_equations(g, d, zero):
    """{row: {column: value}} for g sigma - sigma g = 0 in the entries of sigma (row major)."""
    g = g.to_list() if hasattr(g, 'to_list') else g
    nonzero = [(a, b, g[a][b]) for a in range(d) for b in range(d) if g[a][b]]
    equations = {}
    # (g sigma)[u][s] = sum_t g[u][t] sigma[t][s]
    for u, t, value in nonzero:
        for s in range(d):
            row = equations.setdefault(u * d + s, {})
            row[t * d + s] = row.get(t * d + s, zero) + value
    # (sigma g)[u][s] = sum_t sigma[u][t] g[t][s]
    for t, s, value in nonzero:
        for u in range(d):
            row = equations.setdefault(u * d + s, {})
            row[u * d + t] = row.get(u * d + t, zero) - value
    return equations


def commutation_system(matrices, d, domain):
    """
    Sparse system in the d*d entries of sigma (row major) expressing
    g sigma = sigma g for every g in `matrices`.
    """
    entries = {}
    for k, g in enumerate(matrices):
        for key, row in _commutation_equations(g, d, domain.zero).items():
            entries[k * d * d + key] = row
    return sparse_matrix(entries, (len(matrices) * d * d, d * d), domain)


def commutant(matrices, d, domain):
    """
    The matrices commuting with every g in `matrices`, as a subspace of K^(d*d).

    The equations of one g are reduced against those already seen before the
    next g is added, so at most d*d rows are held at a time.
    """
    blocks = (_commutation_equations(g, d, domain.zero) for g in matrices)
    _, space = rref_nullspace(reduced_row_space(blocks, d * d, domain), domain)
    return space


def as_matrices(subspace, d):
    """Basis vectors of a subspace of K^(d*d) as d x d row-major DomainMatrices."""
    domain = subspace.domain
    return [
        build_matrix([row[k * d:(k + 1) * d] for k in range(d)], domain, d)
        for row in subspace.rows
    ]


def _check_end_closure(module, end, limit=6):
    if not settings.HECKE_SANITY_CHECKS:
        return
    d = module.dimension
    if not end.contains(_flatten(module.identity_matrix())):
        raise InvariantViolation(f"End({module.describe()}) misses the identity")
    basis = as_matrices(end, d)[:limit]
    for a in basis:
        for b in basis:
            if not end.contains(_flatten(a * b)):
                raise InvariantViolation(f"End({module.describe()}) is not closed under products")


def _flatten(matrix):
    return [entry for row in matrix.to_list() for entry in row]


def end_algebra(p, full_system=False):
    """
    End(P) as a subspace of the d x d matrices (row-major coordinates).

    The commutation equations are taken over the generators T_i; with
    full_system=True every T_w is used instead.
    """
    module = as_representation(p)
    _require_field(module)
    d = module.dimension
    matrices = module.action_table() if full_system else module.generators
    end = commutant(matrices, d, module.domain)
    _check_end_closure(module, end)
    logger.info(f"End({module.describe()}) has dimension {end.dimension}")
    return end


def double_end(p, end_basis):
    """DEnd(P): the commutant of End(P) inside the d x d matrices."""
    module = as_representation(p)
    _require_field(module)
    d = module.dimension
    if end_basis.ambient != d * d or end_basis.domain != module.domain:
        raise BasisMismatch(f"End basis of ambient {end_basis.ambient} for a module of dimension {d}")
    matrices = as_matrices(end_basis, d)
    for sigma in matrices[:3]:
        for g in module.generators:
            if g * sigma != sigma * g:
                raise BasisMismatch(f"End basis does not commute with {module.describe()}")
    dend = commutant(matrices, d, module.domain)
    logger.info(f"DEnd({module.describe()}) has dimension {dend.dimension}")
    return dend


def _has_integral_parameter(module):
    domain = module.domain
    return domain.kind == RATIONAL and module.q in (domain.one, -domain.one)


def dc_check(p, integral=False):
    """
    Compare the image of the action map with DEnd(P).

    With integral=True a module over Q with q = 1 or -1 also gets the
    elementary divisors of its integral annihilator system and the primes
    dividing them.
    """
    module = as_representation(p)
    ann = annihilator(module)
    end = end_algebra(module)
    dend = double_end(module, end)
    report = CentraliserReport(
        module=module.describe(),
        domain=module.domain.descriptor(),
        order=factorial(module.n),
        ann=ann.dimension,
        end=end.dimension,
        dend=dend.dimension,
    )
    if report.image > report.dend:
        raise InvariantViolation(
            f"{module.describe()}: image of dimension {report.image} exceeds DEnd ({report.dend})"
        )
    if integral and _has_integral_parameter(module):
        lattice, divisors = integral_annihilator_lattice(module)
        if lattice.rank != report.ann:
            raise InvariantViolation(f"{module.describe()}: lattice rank {lattice.rank} != {report.ann}")
        report.divisors = divisors
        report.failing_primes = failing_primes(divisors)
    if not report.dc_holds:
        logger.warning(f"{module.describe()} is not a double centraliser module: {report.dims}")
    return report


def _integer_value(domain, value):
    expr = domain.ring.to_sympy(value)
    if not expr.is_Integer:
        raise NonIntegralParameter(f"Structure constant {expr} is not an integer")
    return int(expr)


def integral_annihilator_lattice(p):
    """
    The saturated lattice Ann over Z and the elementary divisors of its system.

    Returns:
        (IntegerLattice, divisors)
    """
    module = as_representation(p)
    domain = module.domain
    if domain.is_generic or domain.characteristic:
        raise NonIntegralParameter(f"{module.describe()}: integral lattices need Q or Z scalars")
    if module.q not in (domain.one, -domain.one):
        raise NonIntegralParameter(f"{module.describe()}: q must be 1 or -1")
    rows = [[_integer_value(domain, v) for v in row] for row in _action_rows(module)]
    if not rows:
        rows = [[0] * factorial(module.n)]
    divisors, lattice = smith_normal_form(rows)
    logger.info(f"Integral Ann({module.describe()}): rank {lattice.rank}, divisors {divisors}")
    return lattice, divisors


def _is_generic(source):
    return isinstance(source, ModuleSpec) and 't' in source.q_text


def _field_for(source, field):
    if _is_generic(source) and not field.is_generic:
        return ScalarDomain.function_field(field.p)
    return field


def instantiate(source, domain):
    """Build the module described by a ModuleSpec or GSetModule over `domain`."""
    if isinstance(source, GSetModule):
        return source.with_domain(domain).as_module()
    return source.instantiate(domain)


def _describe(source):
    return source.describe()


def specialise_module(generic, qbar):
    """
    The module over qbar's field obtained from a module over Q(t) or F_p(t)
    by sending t to qbar in every structure constant.
    """
    domain = qbar.domain
    source = generic.domain
    generators = []
    for g in generic.generators:
        rows = [
            [specialize(Scalar(source, v), qbar).value if v else domain.zero for v in row]
            for row in g.to_list()
        ]
        generators.append(build_matrix(rows, domain, generic.dimension))
    algebra = HeckeAlgebra(generic.n, domain, qbar.value)
    module = ModuleRep(algebra, generic.labels, generators, generic.summands, generic.name)
    if settings.HECKE_SANITY_CHECKS and not module.check_relations():
        raise InvariantViolation(f"{module.describe()}: specialised matrices break the Hecke relations")
    return module


def _specialisation(source, generic_module, field):
    qbar = Scalar.of(field, field.parse_value(source.q_text))
    return specialise_module(generic_module, qbar)


def _measure(module):
    return FieldDimensions(
        domain=module.domain.descriptor(),
        ann=annihilator(module).dimension,
        end=end_algebra(module).dimension,
    )


def per_field(function, fields):
    """Run `function` over the fields in a thread pool; results keep the field order."""
    workers = max(1, settings.HECKE_FIELD_WORKERS)
    if workers == 1:
        return [function(f) for f in fields]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, fields))


def _integral_extras(report, rational, results):
    """Elementary divisors, failing primes and per-prime Ann dimensions for q = 1 or -1 over Q."""
    lattice, divisors = integral_annihilator_lattice(rational)
    rational_ann = annihilator(rational).dimension
    if lattice.rank != rational_ann:
        raise InvariantViolation(f"{rational.describe()}: lattice rank {lattice.rank} != {rational_ann}")
    report.divisors = divisors
    report.failing_primes = failing_primes(divisors)
    report.integral_rank = lattice.rank
    order = factorial(rational.n)
    rows = [[_integer_value(rational.domain, v) for v in row] for row in _action_rows(rational)]
    rows = rows or [[0] * order]
    report.probed = {
        p: order - modular_rank(rows, p)
        for p in primerange(2, settings.HECKE_FAILING_PRIME_BOUND + 1)
    }
    for result in results:
        p = result.domain['p']
        if p is not None and (p in report.failing_primes) != (result.ann > rational_ann):
            report.consistent = False


def base_change_report(source, fields):
    """
    Ann and End dimensions of one module over several fields against the generic ones.

    The generic side of a ModuleSpec is always Hec(n) over Q(t) with q = t.
    For a numeric q each field's module is the specialisation t -> q of the
    generic module; for q = t the fields are lifted to F(t) instead. A
    GSetModule is compared against Q.

    Args:
        source: ModuleSpec or GSetModule
        fields: list of ScalarDomain (Q, F_p)
    """
    if isinstance(source, GSetModule):
        generic_module = instantiate(source, ScalarDomain.rationals())
        modules = per_field(lambda field: instantiate(source, field), fields)
    elif _is_generic(source):
        generic_module = instantiate(source, ScalarDomain.function_field())
        modules = per_field(lambda field: instantiate(source, _field_for(source, field)), fields)
    else:
        generic_module = replace(source, q_text='t').instantiate(ScalarDomain.function_field())
        modules = per_field(lambda field: _specialisation(source, generic_module, field), fields)
    generic = _measure(generic_module)
    results = per_field(_measure, modules)
    for result in results:
        result.ann_exceeds_generic = result.ann > generic.ann
        result.end_exceeds_generic = result.end > generic.end
        if result.ann < generic.ann or result.end < generic.end:
            raise InvariantViolation(f"{_describe(source)}: a field dimension fell below the generic one")
    report = BaseChangeReport(module=_describe(source), generic=generic, fields=results)

    if not _is_generic(source):
        rational = next((m for m in modules if m.domain == ScalarDomain.rationals()), None)
        if rational is None:
            rational = (
                generic_module if isinstance(source, GSetModule)
                else _specialisation(source, generic_module, ScalarDomain.rationals())
            )
        if _has_integral_parameter(rational):
            _integral_extras(report, rational, results)
    for result in results:
        if result.ann_exceeds_generic:
            logger.warning(f"Base change fails for {_describe(source)} over {result.domain['label']}")
    return report


def predicted_dimensions(module):
    """
    Closed form dimensions of Ann and DEnd for a Young (or signed) sum whose
    coarsening closure is co-saturated.

    Returns:
        dict with keys closure, ann, dend
    """
    zeta, _ = zeta_and_index(module)
    closure = coarsening_closure(zeta)
    if not is_cosaturated(closure):
        raise HypothesisFails(f"The coarsening closure {closure} of {zeta} is not co-saturated")
    dend = sum(spec_dimension(lam) ** 2 for lam in closure)
    return {'closure': closure, 'ann': factorial(module.n) - dend, 'dend': dend}


def cosaturation_criterion(gset, field=None):
    """
    Compare Ann(F X) with Ann(F C(X)) for a Young Sym(n)-set X.

    Base change on annihilators holds for X over F exactly when they agree.
    The report also lists the minimal members lam of zeta(X) for which
    Sym(n)/Sigma(lam) on its own fails.
    """
    domain = field or gset.domain
    X = gset.with_domain(domain)
    closure_set = cosaturation_gset(X)
    ann = annihilator(X)
    ann_closure = annihilator(closure_set)
    relation = subspace_compare(ann, ann_closure)
    failing = []
    for lam in X.young_zeta().minimal_members():
        single = young_gset([lam], X.m, domain)
        if annihilator(single).dimension != annihilator(cosaturation_gset(single)).dimension:
            failing.append(lam)
    return CosaturationReport(
        module=X.describe(),
        domain=domain.descriptor(),
        closure=closure_set.young_zeta(),
        ann=ann.dimension,
        ann_closure=ann_closure.dimension,
        relation=relation,
        failing_minimal=failing,
    )


def end_dimension_oracle(partitions):
    """Sum over ordered pairs of summands of the double coset counts."""
    return sum(double_coset_count(lam, mu) for lam in partitions for mu in partitions)
