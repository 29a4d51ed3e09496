from classes.base import get_pipeline
from cli.serializers import OriginReportSerializer, RankReportSerializer
from crframes.exceptions import UsageError
from oracle.origin import origin_frame_report
from oracle.rank import rank_report
from oracle.search import search_models
from oracle.suites import commutation_check

from ._base import ReportCommand, verdicts_data


class Command(ReportCommand):
    help = (
        'Check a concrete graphing function against its class: rank chain, frame at the origin, '
        'bracket commutation; or search for models of class III2 or IV2.'
    )
    config_options = ('phi', 'origin', 'search', 'commute', 'limit')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--phi', help='graphing-function file')
        parser.add_argument('--origin', action='store_true', help='evaluate the frame at the origin')
        parser.add_argument('--commute', action='store_true', help='compare symbolic and instantiated brackets')
        parser.add_argument('--search', action='store_true', help='search for models (III2, IV2)')
        parser.add_argument('--limit', help='stop the search after this many accepted models')

    def run(self, config):
        class_id = config['class_id']
        points, seed = config.get('points'), config.get('seed')
        sections = {}

        if config.get('search'):
            with self.timed('model search'):
                result = search_models(class_id, limit=config.get('limit'), n_points=points, seed=seed)
            sections['search'] = {
                'class_id': class_id,
                'tried': result.tried,
                'rejected': result.rejected,
                'accepted': [self.phi_section(phi) for phi in result.accepted],
            }

        phi = self.load_phi(config)
        if phi is None:
            if config.get('search'):
                return sections
            raise UsageError('oracle needs a graphing function (--phi FILE) or --search')
        sections['phi'] = self.phi_section(phi)
        pipeline = get_pipeline(class_id, backend='dag')

        if config.get('origin'):
            with self.timed('origin'):
                sections['origin'] = OriginReportSerializer(origin_frame_report(phi, pipeline)).data
        with self.timed('rank chain'):
            report = rank_report(phi, n_points=points, seed=seed, pipeline=pipeline)
        sections['rank'] = RankReportSerializer(report).data
        if not report.satisfied:
            self.fail(4, f'{phi.name} is not of class {class_id}: rank chain {report.witness["ranks"]}')

        if config.get('commute'):
            with self.timed('commutation'):
                verdicts = commutation_check(phi, n_points=points or 10, seed=seed, pipeline=pipeline)
            sections['commutation'] = verdicts_data(verdicts)
            if sections['commutation']['failing']:
                self.fail(1, f'brackets do not commute with instantiation: {sections["commutation"]["failing"]}')
        return sections
