from cli.serializers import AmbiguityGroupSerializer, CoframeSerializer, VerdictSerializer
from crframes.exceptions import UsageError
from darboux.ambiguity import closure_holds, emit_ambiguity_group_iv2
from darboux.duality import coframe_structure, verify_duality
from oracle.points import BaseSampler
from oracle.suites import check_class_hypothesis

from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Emit the Darboux-Cartan structure equations of a class, and for IV2 its ambiguity group.'
    config_options = ('phi', 'rigid', 'verify')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--rigid', action='store_true', help='u-independent (rigid) package')
        parser.add_argument('--verify', action='store_true', help='check the equations against the frame')
        parser.add_argument('--phi', help='graphing-function file for --verify (required for III2 and IV2)')

    def run(self, config):
        class_id = config['class_id']
        pipeline = self.pipeline(config)
        with self.timed('structure equations'):
            structure = coframe_structure(pipeline)
        sections = {'coframe': CoframeSerializer(structure).data}
        if class_id == 'IV2':
            group = AmbiguityGroupSerializer(emit_ambiguity_group_iv2()).data
            group['closure'] = closure_holds()
            sections['ambiguity_group'] = group

        if config.get('verify'):
            phi = self.load_phi(config)
            if phi is None and pipeline.needs_phi:
                raise UsageError(f'verifying class {class_id} needs a concrete graphing function (--phi FILE)')
            sampler = None
            if phi is not None:
                sections['phi'] = self.phi_section(phi)
                check_class_hypothesis(phi, config.get('seed'), pipeline)
                sampler = BaseSampler(phi)
            with self.timed('duality'):
                verdict = verify_duality(pipeline, config.get('points'), config.get('seed'), sampler)
            sections['duality'] = VerdictSerializer(verdict).data
            if not verdict.holds:
                self.fail(1, f'class {class_id} structure equations fail the duality check')
        return sections
