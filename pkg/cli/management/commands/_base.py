"""
Shared plumbing of the report commands.
"""

import logging
import time
from contextlib import contextmanager
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from classes.base import get_pipeline
from cli.reports import build_report, plain, render
from cli.serializers import RunConfigSerializer, VerdictSerializer
from crframes.exceptions import CRFramesError, UsageError
from oracle.phi import load_phi

logger = logging.getLogger(__name__)

COMMON_OPTIONS = ('class_id', 'backend', 'seed', 'points', 'out', 'format')


def format_errors(detail):
    """Flatten DRF error detail into ``field: message`` text."""
    if isinstance(detail, dict):
        return '; '.join(f'{key}: {format_errors(value)}' for key, value in detail.items())
    if isinstance(detail, list):
        return ', '.join(format_errors(value) for value in detail)
    return str(detail)


def verdicts_data(verdicts):
    verdicts = list(verdicts)
    failing = [v.name for v in verdicts if not v.holds]
    return {
        'total': len(verdicts),
        'holding': len(verdicts) - len(failing),
        'failing': failing,
        'verdicts': VerdictSerializer(verdicts, many=True).data,
    }


class ReportCommand(BaseCommand):
    """
    Base class of the report commands.

    Subclasses list their own option names in ``config_options``, add the matching
    flags and implement ``run(config)`` returning the report sections in
    order.  ``fail`` records a nonzero exit status; it is raised once the
    report has been written.
    """

    config_options = ()

    def add_arguments(self, parser):
        parser.add_argument('--class', dest='class_id', help='CR class: I, II, III1, III2, IV1 or IV2')
        parser.add_argument('--backend', default='auto', help='expanded, dag or auto (the class default)')
        parser.add_argument('--seed', help='random seed (default CRFRAMES_SEED)')
        parser.add_argument('--points', help='number of evaluation points')
        parser.add_argument('--out', help='write the report to this file instead of stdout')
        parser.add_argument('--format', default='json', help='json or text')

    @property
    def command_name(self):
        return type(self).__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        self.failure = None
        self.timings = {}
        data = {
            key: options[key]
            for key in COMMON_OPTIONS + tuple(self.config_options)
            if options.get(key) is not None
        }
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'invalid options: {format_errors(serializer.errors)}', returncode=2)
        config = serializer.validated_data
        echo = serializer.data

        try:
            sections = self.run(config)
        except serializers.ValidationError as exc:
            raise CommandError(f'invalid input: {format_errors(exc.detail)}', returncode=2) from exc
        except UsageError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        except CRFramesError as exc:
            logger.error('%s --class %s: %s', self.command_name, config['class_id'], exc)
            self.write_report(config, echo, {'error': self.error_section(exc)})
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

        self.write_report(config, echo, sections)
        if self.failure is not None:
            returncode, message = self.failure
            raise CommandError(message, returncode=returncode)

    def run(self, config):
        raise NotImplementedError

    def fail(self, returncode, message):
        if self.failure is None:
            self.failure = (returncode, message)

    @contextmanager
    def timed(self, name):
        started = time.perf_counter()
        yield
        elapsed = time.perf_counter() - started
        self.timings[name] = elapsed
        logger.info('%s: %s in %.2fs', self.command_name, name, elapsed)

    def pipeline(self, config, backend=None):
        return get_pipeline(
            config['class_id'], backend=backend or config['backend'], rigid=config.get('rigid', False),
        )

    def load_phi(self, config):
        if not config.get('phi'):
            return None
        return load_phi(config['phi'], config['class_id'])

    @staticmethod
    def phi_section(phi):
        return {'name': phi.name, 'functions': phi.texts()}

    @staticmethod
    def error_section(exc):
        section = {'type': type(exc).__name__, 'message': str(exc), 'exit_code': exc.exit_code}
        if getattr(exc, 'witness', None) is not None:
            section['witness'] = exc.witness
        if hasattr(exc, 'partial_terms'):
            section['partial_terms'] = exc.partial_terms
            section['cap'] = exc.cap
        return section

    def write_report(self, config, echo, sections):
        report = build_report(self.command_name, plain(echo), plain(sections), self.timings)
        text = render(report, config['format'])
        if config.get('out'):
            Path(config['out']).write_text(text)
            logger.info('Report written to %s', config['out'])
        else:
            self.stdout.write(text, ending='')
