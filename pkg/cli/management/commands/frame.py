from classes.counts import STRESS_ONLY, count, numerator_counts
from cli.serializers import CountSerializer, FrameSerializer, StructureSerializer, value_data
from crframes.exceptions import UsageError

from ._base import ReportCommand


class Command(ReportCommand):
    help = (
        'Build the frame of a class: generators, derived fields, determinant numerators, '
        'fundamental and rpl functions and the Lie-structure table.'
    )
    config_options = ('rigid', 'stress', 'mem')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--rigid', action='store_true', help='u-independent (rigid) package')
        parser.add_argument('--stress', action='store_true', help='also expand the stress-only expressions')
        parser.add_argument('--mem', help='memory budget in bytes for --stress')

    def run(self, config):
        class_id = config['class_id']
        if config['stress'] and class_id not in STRESS_ONLY:
            raise UsageError(f'class {class_id} has no stress-mode expressions')
        pipeline = self.pipeline(config)
        sections = {}

        # Stress expansions run before the frame stages
        if config['stress']:
            results = [
                count(class_id, name, stress=True, mem=config.get('mem'))
                for name in STRESS_ONLY[class_id]
            ]
            sections['stress'] = CountSerializer(results, many=True).data
            abandoned = [r.expr for r in results if r.abandoned]
            if abandoned:
                self.fail(3, f'stress expansion abandoned for {", ".join(abandoned)}')
                return sections

        with self.timed('frame'):
            sections['frame'] = FrameSerializer(pipeline.package).data
        sections['counts'] = CountSerializer(numerator_counts(pipeline.package), many=True).data
        with self.timed('fundamental functions'):
            sections['fundamentals'] = {name: value_data(v) for name, v in pipeline.fundamentals.items()}
        with self.timed('rpl functions'):
            sections['rpl'] = {name: value_data(v) for name, v in pipeline.rpl.items()}
        with self.timed('structure'):
            sections['structure'] = StructureSerializer(pipeline.structure).data
        return sections
