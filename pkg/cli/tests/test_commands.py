import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings, tag

from crframes import REPORT_SCHEMA, __version__
from oracle.phi import MODELS_DIR


def model(name):
    return str(MODELS_DIR / f'{name}.phi')


class CommandTestCase(SimpleTestCase):
    def run_command(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out.getvalue()

    def report(self, *args):
        return json.loads(self.run_command(*args))

    def failing_report(self, returncode, *args):
        """Run a command expected to exit with ``returncode``; return the report it wrote, if any."""
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=out)
        self.assertEqual(ctx.exception.returncode, returncode, str(ctx.exception))
        text = out.getvalue()
        return json.loads(text) if text else None


class ReportEnvelopeTests(CommandTestCase):
    def test_envelope(self):
        report = self.report('count', '--class', 'I', '--expr', 'Delta')
        self.assertEqual(report['tool_version'], __version__)
        self.assertEqual(report['schema'], REPORT_SCHEMA)
        self.assertEqual(report['command'], 'count')
        self.assertEqual(report['config']['class_id'], 'I')
        self.assertNotIn('timing', report)

    @override_settings(CRFRAMES_REPORT_TIMING=True)
    def test_timing_on_request(self):
        report = self.report('count', '--class', 'I', '--expr', 'Delta')
        self.assertIn('counts', report['timing'])

    def test_reports_are_reproducible(self):
        args = ('identities', '--class', 'I', '--seed', '11', '--points', '3')
        self.assertEqual(self.run_command(*args), self.run_command(*args))

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.json'
            printed = self.run_command('count', '--class', 'I', '--expr', 'Delta', '--out', str(path))
            self.assertEqual(printed, '')
            self.assertEqual(json.loads(path.read_text())['sections']['counts'][0]['monomials'], 2)

    def test_text_format(self):
        text = self.run_command('count', '--class', 'I', '--expr', 'Delta', '--format', 'text')
        self.assertTrue(text.startswith(f'crframes {__version__} count'))
        self.assertIn('== counts ==', text)


class UsageTests(CommandTestCase):
    def test_missing_class(self):
        self.failing_report(2, 'count')

    def test_unknown_class(self):
        self.failing_report(2, 'frame', '--class', 'V')

    def test_bad_backend(self):
        self.failing_report(2, 'frame', '--class', 'I', '--backend', 'sparse')

    def test_mem_without_stress(self):
        self.failing_report(2, 'count', '--class', 'III1', '--mem', '10')

    def test_unreadable_phi(self):
        self.failing_report(2, 'oracle', '--class', 'I', '--phi', '/nonexistent/model.phi')

    def test_oracle_without_phi(self):
        self.failing_report(2, 'oracle', '--class', 'I')


class CountCommandTests(CommandTestCase):
    def test_class_i_delta(self):
        [result] = self.report('count', '--class', 'I', '--expr', 'Delta')['sections']['counts']
        self.assertEqual(result['monomials'], 2)
        self.assertTrue(result['matches'])

    def test_class_iii1_ddd_bar(self):
        [result] = self.report('count', '--class', 'III1', '--expr', 'DDDbar')['sections']['counts']
        self.assertEqual(result['monomials'], 526)
        self.assertEqual(result['expected'], 526)

    def test_default_skips_stress_expressions(self):
        names = [r['expr'] for r in self.report('count', '--class', 'I')['sections']['counts']]
        self.assertEqual(names, ['Delta', 'Lambda1', 'DDDbar', 'ell', 'P_numerator', 'P_denominator'])

    def test_unknown_expression(self):
        self.failing_report(2, 'count', '--class', 'II', '--expr', 'Sigma1')

    def test_stress_abandonment(self):
        report = self.failing_report(3, 'count', '--class', 'III1', '--expr', 'Pi1', '--stress', '--mem', '0')
        [result] = report['sections']['counts']
        self.assertTrue(result['abandoned'])
        self.assertEqual(report['sections']['abandoned'], ['Pi1'])


class FrameCommandTests(CommandTestCase):
    def test_class_i(self):
        sections = self.report('frame', '--class', 'I')['sections']
        self.assertIn('P_numerator', sections['frame']['numerators'])
        self.assertIn('P_denominator', sections['frame']['numerators'])
        self.assertEqual(sections['frame']['backend'], 'expanded')
        self.assertEqual(list(sections['fundamentals']), ['P'])
        pairs = [row['pair'] for row in sections['structure']['brackets']]
        self.assertIn(['Lbar', 'L'], pairs)

    def test_class_i_rigid(self):
        sections = self.report('frame', '--class', 'I', '--rigid')['sections']
        self.assertTrue(sections['frame']['rigid'])
        self.assertEqual(list(sections['frame']['numerators']), ['ell'])

    def test_stress_zero_budget(self):
        report = self.failing_report(3, 'frame', '--class', 'III1', '--stress', '--mem', '0')
        self.assertTrue(all(r['abandoned'] for r in report['sections']['stress']))

    def test_stress_needs_a_stress_class(self):
        self.failing_report(2, 'frame', '--class', 'I', '--stress')


@tag('slow')
class FrameCountTests(CommandTestCase):
    def test_class_ii_counts(self):
        counts = self.report('frame', '--class', 'II')['sections']['counts']
        figures = {r['expr']: r['monomials'] for r in counts}
        self.assertEqual(figures['Upsilon1'], 355)
        self.assertEqual(figures['Pi2'], 24437)


class IdentitiesCommandTests(CommandTestCase):
    def test_class_i(self):
        section = self.report('identities', '--class', 'I', '--points', '5')['sections']['identities']
        self.assertEqual(section['failing'], [])
        names = [v['name'] for v in section['verdicts']]
        self.assertIn('P printed', names)
        self.assertIn('I duality', names)

    def test_selected_identity(self):
        section = self.report(
            'identities', '--class', 'I', '--points', '3', '--identity', 'ell real',
        )['sections']['identities']
        self.assertEqual([v['name'] for v in section['verdicts']], ['ell real'])

    def test_unknown_identity(self):
        self.failing_report(2, 'identities', '--class', 'I', '--identity', 'no such identity')

    def test_degenerate_class_needs_phi(self):
        self.failing_report(2, 'identities', '--class', 'III2')

    def test_iv2_on_manifold(self):
        report = self.report('identities', '--class', 'IV2', '--phi', model('class_iv2_trivial'), '--points', '3')
        section = report['sections']['identities']
        self.assertIn('K(kbar)', [v['name'] for v in section['verdicts']])
        self.assertEqual(section['failing'], [])
        self.assertEqual(report['sections']['phi']['functions'], ['z1*zbar1'])

    def test_rejected_iv2_model(self):
        report = self.failing_report(
            4, 'identities', '--class', 'IV2', '--phi', model('class_iv2_rejected'), '--points', '2',
        )
        self.assertEqual(report['sections']['error']['type'], 'ClassHypothesisViolation')
        self.assertEqual(report['sections']['error']['witness']['ranks'][0], 2)


@tag('slow')
class ClassIIIdentitiesTests(CommandTestCase):
    def test_all_hold(self):
        section = self.report('identities', '--class', 'II', '--seed', '7', '--points', '20')['sections']['identities']
        self.assertEqual(section['failing'], [])
        self.assertIn('B Bbar - 1', [v['name'] for v in section['verdicts']])


class DarbouxCommandTests(CommandTestCase):
    def test_class_i_text(self):
        text = self.run_command('darboux', '--class', 'I', '--format', 'text')
        self.assertIn('drho0 = Pbar*rho0^zetabar0 + P*rho0^zeta0 + I*zeta0^zetabar0', text)

    def test_class_iv1_rho_equation(self):
        coframe = self.report('darboux', '--class', 'IV1')['sections']['coframe']
        self.assertEqual(coframe['class_id'], 'IV1')
        self.assertEqual([e['d_omega'] for e in coframe['equations']], coframe['members'])
        rho = next(e for e in coframe['equations'] if e['d_omega'] == 'rho0')
        self.assertEqual(len(rho['terms']), 8)
        self.assertIn({'coeff': 'I*B', 'wedge': ['zeta02', 'zetabar01']}, rho['terms'])

    def test_iv2_ambiguity_group(self):
        group = self.report('darboux', '--class', 'IV2')['sections']['ambiguity_group']
        self.assertEqual(group['dimension'], 5)
        self.assertEqual(group['parameters'], ['a', 'b', 'c', 'd', 'e'])
        self.assertTrue(group['closure'])

    def test_verify(self):
        duality = self.report('darboux', '--class', 'I', '--verify', '--points', '3')['sections']['duality']
        self.assertTrue(duality['holds'])

    def test_verify_degenerate_class_needs_phi(self):
        self.failing_report(2, 'darboux', '--class', 'IV2', '--verify')

    def test_verify_on_model(self):
        duality = self.report(
            'darboux', '--class', 'IV2', '--verify', '--phi', model('class_iv2'), '--points', '3',
        )['sections']['duality']
        self.assertTrue(duality['holds'])


class OracleCommandTests(CommandTestCase):
    def test_class_ii_origin(self):
        sections = self.report('oracle', '--class', 'II', '--phi', model('class_ii'), '--origin')['sections']
        self.assertEqual(sections['origin']['determinant'], '8')
        self.assertEqual(sections['origin']['matrix'], [['2', '0'], ['0', '4']])
        self.assertEqual(sections['origin']['frame_fields']['T']['u1'], '2')
        self.assertNotIn('u2', sections['origin']['frame_fields']['T'])
        self.assertTrue(sections['rank']['satisfied'])

    def test_iv1_levi_at_origin(self):
        sections = self.report('oracle', '--class', 'IV1', '--phi', model('class_iv1'), '--origin')['sections']
        self.assertIsNotNone(sections['origin']['levi'])

    def test_rank_violation(self):
        report = self.failing_report(4, 'oracle', '--class', 'IV2', '--phi', model('class_iv2_rejected'))
        self.assertFalse(report['sections']['rank']['satisfied'])

    def test_commutation(self):
        section = self.report(
            'oracle', '--class', 'I', '--phi', model('class_i'), '--commute', '--points', '3',
        )['sections']['commutation']
        self.assertEqual(section['failing'], [])

    def test_search(self):
        search = self.report('oracle', '--class', 'IV2', '--search', '--limit', '1', '--points', '2')['sections']['search']
        self.assertEqual(search['accepted'][0]['name'], 'z1*zbar1')

    def test_search_for_generic_class(self):
        self.failing_report(2, 'oracle', '--class', 'II', '--search')
