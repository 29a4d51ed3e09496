from concurrent.futures import ThreadPoolExecutor

from classes.counts import STRESS_ONLY, count, expressions
from cli.serializers import CountSerializer
from crframes.conf import setting
from crframes.exceptions import UsageError

from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Expand named determinant expressions of a class and count their monomials.'
    config_options = ('expr', 'stress', 'mem')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--expr', action='append', help='expression name (repeatable; default all)')
        parser.add_argument('--stress', action='store_true', help='allow the stress-only expressions')
        parser.add_argument('--mem', help='memory budget in bytes for --stress')

    def run(self, config):
        class_id = config['class_id']
        available = expressions(class_id)
        stress_only = STRESS_ONLY.get(class_id, ())
        names = config.get('expr') or [
            name for name in available if config['stress'] or name not in stress_only
        ]
        unknown = [name for name in names if name not in available]
        if unknown:
            raise UsageError(
                f'unknown expressions for class {class_id}: {", ".join(unknown)}; '
                f'expected one of {", ".join(available)}'
            )

        def expand(name):
            return count(class_id, name, stress=config['stress'], mem=config.get('mem'))

        threads = max(1, setting('CRFRAMES_THREADS'))
        with self.timed('counts'):
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(expand, names))

        abandoned = [r.expr for r in results if r.abandoned]
        if abandoned:
            self.fail(3, f'expansion abandoned for {", ".join(abandoned)}')
        return {
            'counts': CountSerializer(results, many=True).data,
            'mismatches': [r.expr for r in results if not r.matches and not r.abandoned],
            'abandoned': abandoned,
        }
