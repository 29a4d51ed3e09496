from crframes.exceptions import UsageError
from darboux.duality import verify_duality
from exprdag.identity import identity_suite
from oracle.suites import on_manifold_identity_suite

from ._base import ReportCommand, verdicts_data


class Command(ReportCommand):
    help = (
        'Run the identity suite of a class: its registered identities, every Lie-structure bracket '
        'and the coframe duality, on random jet points or, with --phi, on a concrete manifold.'
    )
    config_options = ('phi', 'identity', 'rigid')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--phi', help='graphing-function file; required for classes III2 and IV2')
        parser.add_argument('--identity', action='append', help='run only this identity (repeatable)')
        parser.add_argument('--rigid', action='store_true', help='u-independent (rigid) package')

    def run(self, config):
        class_id = config['class_id']
        pipeline = self.pipeline(config)
        phi = self.load_phi(config)
        select = config.get('identity')
        points, seed = config.get('points'), config.get('seed')
        sections = {}

        if phi is None and pipeline.needs_phi:
            raise UsageError(f'class {class_id} identities hold on class-{class_id} manifolds only; pass --phi FILE')

        if phi is not None:
            sections['phi'] = self.phi_section(phi)
            with self.timed('on-manifold suite'):
                verdicts = on_manifold_identity_suite(phi, points, seed, pipeline, select=select)
        else:
            duality_name = f'{class_id} duality'
            named = pipeline.suite()
            if select is not None:
                unknown = sorted(set(select) - set(named) - {duality_name})
                if unknown:
                    raise UsageError(f'unknown identities for class {class_id}: {", ".join(unknown)}')
                named = {name: node for name, node in named.items() if name in select}
            with self.timed('suite'):
                verdicts = identity_suite(named, points, seed) if named else []
            if select is None or duality_name in select:
                with self.timed('duality'):
                    verdicts.append(verify_duality(pipeline, points, seed))

        if select is not None:
            unknown = sorted(set(select) - {v.name for v in verdicts})
            if unknown:
                raise UsageError(f'unknown identities for class {class_id}: {", ".join(unknown)}')

        sections['identities'] = verdicts_data(verdicts)
        failing = sections['identities']['failing']
        if failing:
            self.fail(1, f'{len(failing)} identities fail: {", ".join(failing)}')
        return sections
