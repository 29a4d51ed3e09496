import sympy
from django.test import SimpleTestCase, tag

from classes.base import Coefficient, LieStructure, get_pipeline
from jetalg.coefficients import I
from jetalg.jets import Arity, Coord
from jetalg.rational import RationalFn
from vfield.backends import EXPANDED
from vfield.fields import VectorField
from vfield.forms import OneForm

from darboux.ambiguity import ambiguity_matrix, closure_holds, emit_ambiguity_group_iv2, matches_pattern
from darboux.coframe import dualize, equations_data, render_equation, undualize
from darboux.duality import cartan, coframe_structure, verify_duality


def wedges(structure, omega):
    return [(term.coefficient.label, term.wedge) for term in structure.terms(omega)]


class DualizeTests(SimpleTestCase):
    def test_class_i(self):
        structure = coframe_structure(get_pipeline('I'))
        self.assertEqual(wedges(structure, 'rho0'), [
            ('Pbar', ('rho0', 'zetabar0')),
            ('P', ('rho0', 'zeta0')),
            ('I', ('zeta0', 'zetabar0')),
        ])
        self.assertEqual(structure.terms('zeta0'), [])
        self.assertEqual(structure.terms('zetabar0'), [])
        self.assertEqual(
            render_equation(structure, 'rho0'),
            'drho0 = Pbar*rho0^zetabar0 + P*rho0^zeta0 + I*zeta0^zetabar0',
        )

    def test_class_iv1_rho0_has_eight_terms(self):
        structure = coframe_structure(get_pipeline('IV1'))
        terms = wedges(structure, 'rho0')
        self.assertEqual(len(terms), 8)
        self.assertIn(('I*B', ('zeta02', 'zetabar01')), terms)
        self.assertIn(('Pbar1', ('rho0', 'zetabar01')), terms)

    def test_class_iv2_kappa0(self):
        structure = coframe_structure(get_pipeline('IV2'))
        self.assertEqual(wedges(structure, 'kappa0'), [
            ('-T(k)', ('rho0', 'zeta0')),
            ('-Lbar1(k)', ('kappabar0', 'zeta0')),
            ('-L1(k)', ('kappa0', 'zeta0')),
        ])

    def test_zero_structure(self):
        structure = dualize(LieStructure('I', ('T', 'Lbar', 'L')), ('rho0', 'zetabar0', 'zeta0'))
        self.assertTrue(all(not structure.terms(omega) for omega in structure.members))
        self.assertEqual(render_equation(structure, 'rho0'), 'drho0 = 0')

    def test_undualize_recovers_table(self):
        pipeline = get_pipeline('I')
        recovered = undualize(coframe_structure(pipeline), pipeline.members)
        original = pipeline.structure
        self.assertEqual(set(recovered.entries), set(original.entries))
        for pair in original.entries:
            self.assertEqual(
                [(m, c.label) for m, c in recovered.terms(*pair)],
                [(m, c.label) for m, c in original.terms(*pair)],
            )

    def test_flips_negate(self):
        table = LieStructure('X', ('A', 'B'), {('A', 'B'): [('A', Coefficient('c', 1))]})
        plain = dualize(table, ('alpha', 'beta'))
        flipped = dualize(table, ('alpha', 'beta'), flips=[('alpha', 'beta')])
        self.assertEqual(wedges(plain, 'alpha'), [('-c', ('alpha', 'beta'))])
        self.assertEqual(wedges(flipped, 'alpha'), [('c', ('beta', 'alpha'))])
        self.assertEqual(flipped.coefficient('alpha', 'alpha', 'beta').label, '-c')

    def test_json_shape(self):
        data = equations_data(coframe_structure(get_pipeline('I')))
        self.assertEqual(data[0]['d_omega'], 'rho0')
        self.assertEqual(data[0]['terms'][2], {'coeff': 'I', 'wedge': ['zeta0', 'zetabar0']})


class CartanTests(SimpleTestCase):
    def test_constant_frame(self):
        arity = Arity(1, 1)
        frame = [VectorField(arity, EXPANDED, {coord: 1}) for coord in arity.coords]
        forms = [OneForm(arity, EXPANDED, {coord: 1}) for coord in arity.coords]
        for omega in forms:
            for x in frame:
                for y in frame:
                    self.assertEqual(cartan(omega, x, y), RationalFn.of(0))

    def test_class_i_levi_pair(self):
        pipeline = get_pipeline('I')
        rho0 = pipeline.explicit_coframe()['rho0']
        value = cartan(rho0, pipeline.frame['Lbar'], pipeline.frame['L'])
        self.assertEqual(value, RationalFn.of(-I))


class DualityTests(SimpleTestCase):
    def test_class_i(self):
        verdict = verify_duality(get_pipeline('I'), n_points=4, seed=3)
        self.assertTrue(verdict.holds, verdict.failures)

    def test_class_iv1(self):
        verdict = verify_duality(get_pipeline('IV1'), n_points=3, seed=3)
        self.assertTrue(verdict.holds, verdict.failures)

    def test_class_ii_rigid(self):
        verdict = verify_duality(get_pipeline('II', rigid=True), n_points=3, seed=3)
        self.assertTrue(verdict.holds, verdict.failures)


@tag('slow')
class GenericDualityTests(SimpleTestCase):
    def test_class_ii(self):
        verdict = verify_duality(get_pipeline('II'), n_points=3, seed=3)
        self.assertTrue(verdict.holds, verdict.failures)


class AmbiguityTests(SimpleTestCase):
    def test_pattern(self):
        group = emit_ambiguity_group_iv2()
        self.assertEqual(group.dimension, 5)
        self.assertEqual(group.entries[4][4], 'a*abar')
        self.assertEqual(group.entries[0][1], '0')
        self.assertEqual(group.constraints, ('a != 0', 'c != 0'))

    def test_identity_element(self):
        self.assertEqual(ambiguity_matrix(a=1, b=0, c=1, d=0, e=0), sympy.eye(5))

    def test_numeric_element(self):
        m = ambiguity_matrix(a=1 + sympy.I, b=2, c=3, d=sympy.I, e=0)
        self.assertEqual(m[4, 4], 2)
        self.assertEqual(m[3, 3], 1 - sympy.I)
        self.assertEqual(m[4, 3], -sympy.I)
        self.assertTrue(matches_pattern(m))

    def test_closure(self):
        self.assertTrue(closure_holds())

    def test_rejects_zero_a(self):
        self.assertFalse(matches_pattern(ambiguity_matrix(a=0, b=1, c=1, d=0, e=0)))

    def test_symbolic_conjugates(self):
        a = sympy.Symbol('a')
        self.assertEqual(ambiguity_matrix()[3, 3], sympy.conjugate(a))
