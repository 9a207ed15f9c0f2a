"""
Shared plumbing for the engine's management commands.

Every command reads a module either from --spec (a JSON document checked by
ModuleSpecSerializer) or from --n / --partition / --signed / --q, runs over
the fields given by --field, and writes one JSON document (or an aligned
table with --pretty) to stdout or --out.

Exit status: 0 when every checked statement holds, 1 for input or engine
errors, 2 when a checked statement fails.
"""

import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from exactalgebra.domains import ScalarDomain
from heckecentral.exceptions import HeckeCentralError, InvariantViolation, TriangularityViolation
from partitions.shapes import Partition
from permmodules.serializers import ModuleSpecSerializer

logger = logging.getLogger(__name__)

ASSERTION_FAILED = 2
USAGE_ERROR = 1


def parse_partition(text, degree=None):
    """'3,1' or '(3,1)' -> Partition."""
    return Partition.parse(str(text).strip('()'), degree)


def split_parameter(text):
    """
    Read --q: a rational like 1 or -1, 'p,value' for F_p, or an expression in t.

    Returns:
        (value text, ScalarDomain or None)
    """
    text = (text or '1').strip()
    if ',' in text:
        prime, value = text.split(',', 1)
        try:
            return value.strip(), ScalarDomain.prime_field(int(prime))
        except ValueError:
            raise HeckeCentralError(f"Cannot read the prime in --q {text}")
    return text, None


def lift_generic(domain, value):
    """Q -> Q(t) and F_p -> F_p(t) when q is an expression in t."""
    if 't' in value and not domain.is_generic:
        return ScalarDomain.function_field(domain.p)
    return domain


def _is_record_list(value):
    return isinstance(value, list) and value and all(isinstance(item, dict) for item in value)


def render_table(payload, indent=0):
    """Aligned key/value text for --pretty; nested records are indented."""
    pad = ' ' * indent
    if _is_record_list(payload):
        return '\n'.join(
            f"{pad}[{k}]\n{render_table(item, indent + 2)}" for k, item in enumerate(payload)
        )
    if not isinstance(payload, dict):
        return f"{pad}{json.dumps(payload)}"
    width = max((len(str(key)) for key in payload), default=0)
    lines = []
    for key, value in payload.items():
        if (isinstance(value, dict) and value) or _is_record_list(value):
            lines.append(f"{pad}{key}")
            lines.append(render_table(value, indent + 2))
        else:
            lines.append(f"{pad}{str(key).ljust(width)}  {json.dumps(value)}")
    return '\n'.join(lines)


class EngineCommand(BaseCommand):
    """Base class; subclasses implement run(options) -> (payload, holds)."""

    default_fields = None

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, help='Rank n of Hec(n)')
        parser.add_argument('--q', default='1', help="Parameter: rational, 'p,value' or an expression in t")
        parser.add_argument(
            '--field', action='append', default=None,
            help='Q, Fp:p, Qt or Fpt:p; repeat for several fields',
        )
        parser.add_argument('--spec', help='Module specification JSON file')
        parser.add_argument(
            '--partition', action='append', default=None,
            help='Summand partition such as 3,1; repeat for a direct sum',
        )
        parser.add_argument('--signed', action='store_true', help='Use signed summands')
        parser.add_argument('--pretty', action='store_true', help='Print a table instead of JSON')
        parser.add_argument('--out', help='Write the output to this file')
        self.add_engine_arguments(parser)

    def add_engine_arguments(self, parser):
        pass

    # Input

    def scalar_fields(self, options):
        value, domain = split_parameter(options['q'])
        if options['field']:
            try:
                fields = [ScalarDomain.parse(text) for text in options['field']]
            except (HeckeCentralError, ValueError) as exc:
                raise CommandError(f"Bad --field: {exc}", returncode=USAGE_ERROR)
        elif domain is not None:
            fields = [domain]
        else:
            names = self.default_fields or [settings.HECKE_DEFAULT_FIELD]
            fields = [ScalarDomain.parse(name) for name in names]
        return [lift_generic(f, value) for f in fields]

    def parameter(self, options):
        return split_parameter(options['q'])[0]

    def spec_fields(self, spec, options):
        """--field values (lifted to F(t) for a generic spec), else the spec's own domain."""
        if not options['field']:
            return [spec.domain]
        return [lift_generic(f, spec.q_text) for f in self.scalar_fields(options)]

    def module_spec(self, options):
        """A ModuleSpec from --spec or from the inline flags."""
        if options['spec']:
            try:
                with open(options['spec'], 'rb') as stream:
                    data = JSONParser().parse(stream)
            except OSError as exc:
                raise CommandError(f"Cannot read {options['spec']}: {exc}", returncode=USAGE_ERROR)
            except Exception as exc:
                raise CommandError(f"Invalid JSON in {options['spec']}: {exc}", returncode=USAGE_ERROR)
        else:
            if not options['n'] or not options['partition']:
                raise CommandError('Give --spec or both --n and --partition', returncode=USAGE_ERROR)
            field = self.scalar_fields(options)[0]
            data = {
                'n': options['n'],
                'q': {'domain': field.kind, 'p': field.p, 'value': self.parameter(options)},
                'summands': [
                    {'partition': self._partition_list(text), 'signed': options['signed']}
                    for text in options['partition']
                ],
            }
        serializer = ModuleSpecSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f"Invalid module specification: {serializer.errors}", returncode=USAGE_ERROR)
        return serializer.save()

    def _partition_list(self, text):
        try:
            return parse_partition(text).as_list()
        except (HeckeCentralError, ValueError) as exc:
            raise CommandError(f"Bad --partition {text}: {exc}", returncode=USAGE_ERROR)

    # Output

    def emit(self, payload, options):
        if options['pretty']:
            text = render_table(payload)
        else:
            text = JSONRenderer().render(payload).decode()
        if options['out']:
            with open(options['out'], 'w') as stream:
                stream.write(text + '\n')
            self.stdout.write(self.style.SUCCESS(f"Wrote {options['out']}"))
        else:
            self.stdout.write(text)

    def handle(self, *args, **options):
        try:
            payload, holds = self.run(options)
        except (InvariantViolation, TriangularityViolation) as exc:
            logger.error(f"{self.__module__}: {exc}")
            raise CommandError(str(exc), returncode=ASSERTION_FAILED)
        except HeckeCentralError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        self.emit(payload, options)
        if not holds:
            raise CommandError('A checked statement failed', returncode=ASSERTION_FAILED)

    def run(self, options):
        raise NotImplementedError
