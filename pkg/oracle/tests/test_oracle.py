import sympy
from django.test import SimpleTestCase, tag
from rest_framework import serializers

from classes.base import get_pipeline
from classes.determinants import delta
from crframes.exceptions import ClassHypothesisViolation, UsageError
from jetalg.coefficients import I, gaussian
from oracle.instantiate import evaluate_at_base, instantiate
from oracle.origin import origin_frame_report
from oracle.phi import load_model, phi_from_texts, read_phi_lines
from oracle.points import origin
from oracle.rank import rank_report
from oracle.search import iv2_candidates, search_models
from oracle.suites import commutation_check, on_manifold_identity_suite


def failing(verdicts):
    return [v.name for v in verdicts if not v.holds]


class PhiTests(SimpleTestCase):
    def test_comments_and_labels(self):
        lines = read_phi_lines('# header\nv1 = z*zbar  # Levi form\n\nz^2*zbar + z*zbar^2\n')
        self.assertEqual(lines, ['z*zbar', 'z^2*zbar + z*zbar^2'])

    def test_models_load(self):
        phi = load_model('class_iii1', 'III1')
        z, zbar = sympy.symbols('z zbar')
        self.assertEqual(len(phi.functions), 3)
        self.assertEqual(phi.functions[2], sympy.expand(sympy.I * (z ** 2 * zbar - z * zbar ** 2)))

    def test_rejects_non_real(self):
        with self.assertRaises(serializers.ValidationError):
            phi_from_texts('I', ['I*z*zbar'])

    def test_rejects_constant_term(self):
        with self.assertRaises(serializers.ValidationError):
            phi_from_texts('I', ['1 + z*zbar'])

    def test_rejects_wrong_count(self):
        with self.assertRaises(serializers.ValidationError):
            phi_from_texts('II', ['z*zbar'])

    def test_rejects_non_polynomial(self):
        with self.assertRaises(serializers.ValidationError):
            phi_from_texts('I', ['z*zbar/(1 + u)'])

    def test_rejects_unknown_class(self):
        with self.assertRaises(serializers.ValidationError):
            phi_from_texts('V', ['z*zbar'])


class InstantiateTests(SimpleTestCase):
    def test_levi_jet_is_one(self):
        phi = load_model('class_i', 'I')
        var = phi.arity.jet(z=1, zbar=1)
        self.assertEqual(phi.derivative(var), 1)

    def test_class_ii_delta_at_origin(self):
        phi = load_model('class_ii', 'II')
        [value] = evaluate_at_base([delta(phi.arity)], phi, origin(phi.arity))
        self.assertEqual(value, gaussian(-1))

    def test_class_i_p_vanishes_on_the_sphere(self):
        phi = load_model('class_i', 'I')
        self.assertEqual(instantiate(get_pipeline('I').fundamentals['P'], phi), 0)

    def test_iv2_very_fundamental_function(self):
        phi = load_model('class_iv2', 'IV2')
        z2 = sympy.Symbol('z2')
        k = instantiate(get_pipeline('IV2', backend='dag').lazy_package.determinants['k'], phi)
        self.assertEqual(sympy.simplify(k + 2 * z2), 0)


class OriginTests(SimpleTestCase):
    def test_class_i(self):
        report = origin_frame_report(load_model('class_i', 'I'))
        self.assertEqual(report.matrix, [[gaussian(2)]])
        self.assertEqual(report.fields['T']['u'], gaussian(2))

    def test_class_ii(self):
        report = origin_frame_report(load_model('class_ii', 'II'))
        self.assertEqual(report.matrix, [[gaussian(2), gaussian(0)], [gaussian(0), gaussian(4)]])
        self.assertEqual(report.determinant, gaussian(8))

    def test_class_iii1(self):
        report = origin_frame_report(load_model('class_iii1', 'III1'))
        zero, two, four = gaussian(0), gaussian(2), gaussian(4)
        self.assertEqual(report.matrix, [
            [two, zero, zero],
            [zero, four, 4 * I],
            [zero, four, -4 * I],
        ])

    def test_unnormalized_model(self):
        phi = phi_from_texts('I', ['z^2*zbar + z*zbar^2'])
        with self.assertRaises(ClassHypothesisViolation):
            origin_frame_report(phi)


class RankTests(SimpleTestCase):
    def test_iv2_trivial(self):
        report = rank_report(load_model('class_iv2_trivial', 'IV2'), n_points=3, seed=2)
        self.assertTrue(report.satisfied)
        self.assertEqual(report.points[0]['ranks'], [1, 5])

    def test_iv2_rejected_candidate(self):
        report = rank_report(load_model('class_iv2_rejected', 'IV2'), n_points=3, seed=2)
        self.assertFalse(report.satisfied)
        self.assertEqual(report.witness['ranks'][0], 2)

    def test_iv1_quadric(self):
        self.assertTrue(rank_report(load_model('class_iv1', 'IV1'), n_points=3, seed=2).satisfied)

    def test_class_ii_model(self):
        self.assertTrue(rank_report(load_model('class_ii', 'II'), n_points=3, seed=2).satisfied)

    def test_iii2_candidate(self):
        report = rank_report(load_model('class_iii2', 'III2'), n_points=3, seed=2)
        self.assertTrue(report.satisfied, report.witness)
        self.assertEqual(report.points[0]['ranks'], [3, 4, 4, 5])

    def test_iii1_model_is_not_iii2(self):
        phi = phi_from_texts('III2', ['z*zbar', 'z^2*zbar + z*zbar^2', 'I*(z^2*zbar - z*zbar^2)'])
        self.assertFalse(rank_report(phi, n_points=2, seed=2).satisfied)


class OnManifoldTests(SimpleTestCase):
    def test_iv2_trivial(self):
        verdicts = on_manifold_identity_suite(load_model('class_iv2_trivial', 'IV2'), n_points=3, seed=4)
        self.assertIn('K(kbar)', [v.name for v in verdicts])
        self.assertEqual(failing(verdicts), [])

    def test_iv2_nontrivial(self):
        verdicts = on_manifold_identity_suite(load_model('class_iv2', 'IV2'), n_points=3, seed=4)
        self.assertEqual(failing(verdicts), [])

    def test_rejected_candidate_is_refused(self):
        with self.assertRaises(ClassHypothesisViolation) as ctx:
            on_manifold_identity_suite(load_model('class_iv2_rejected', 'IV2'), n_points=2)
        self.assertIsNotNone(ctx.exception.witness)

    def test_generic_and_on_manifold_agree(self):
        verdicts = on_manifold_identity_suite(
            load_model('class_i', 'I'), n_points=3, seed=4, include_duality=False,
        )
        self.assertEqual(failing(verdicts), [])

    def test_commutation(self):
        for name, class_id in (('class_i', 'I'), ('class_ii', 'II'), ('class_iv2', 'IV2')):
            with self.subTest(class_id=class_id):
                verdicts = commutation_check(load_model(name, class_id), n_points=3, seed=5)
                self.assertEqual(failing(verdicts), [])


@tag('slow')
class ClassIII2ManifoldTests(SimpleTestCase):
    def test_suite(self):
        verdicts = on_manifold_identity_suite(load_model('class_iii2', 'III2'), n_points=3, seed=4)
        self.assertEqual(failing(verdicts), [])

    def test_printed_rpl(self):
        select = {'H_rpl printed', 'J_rpl printed', 'K_rpl printed'}
        verdicts = on_manifold_identity_suite(
            load_model('class_iii2', 'III2'), n_points=3, seed=6, include_duality=False, select=select,
        )
        self.assertEqual(sorted(v.name for v in verdicts), sorted(select))
        self.assertEqual(failing(verdicts), [])


class SearchTests(SimpleTestCase):
    def test_candidate_order_is_fixed(self):
        names = [phi.name for phi in iv2_candidates()]
        self.assertEqual(names[0], 'z1*zbar1')
        self.assertEqual(names, [phi.name for phi in iv2_candidates()])

    def test_iv2_search(self):
        result = search_models('IV2', limit=2, n_points=2, seed=3)
        self.assertEqual(len(result.accepted), 2)
        self.assertEqual(result.accepted[0].name, 'z1*zbar1')

    def test_no_search_for_generic_classes(self):
        with self.assertRaises(UsageError):
            search_models('II')
