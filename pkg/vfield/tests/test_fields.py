import random

from django.test import SimpleTestCase

from crframes.exceptions import ContractError, DegenerateFrameError
from jetalg.coefficients import I, gaussian
from jetalg.jets import Arity, Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn
from vfield.backends import DAG, EXPANDED
from vfield.fields import VectorField, apply_field, lie_bracket, reality_check
from vfield.forms import OneForm
from vfield.solve import determinant, frame_solve, reassemble

CLASS_I = Arity(1, 1)
Z, ZBAR, U = Coord('z'), Coord('zbar'), Coord('u')


def jet(**orders):
    return Poly.jet(CLASS_I.jet(**orders))


def class_i_generator(backend=EXPANDED):
    delta = FactorHandle('Delta', jet(u=1) + I)
    return VectorField(CLASS_I, backend, {
        Z: 1,
        U: RationalFn.over(-jet(z=1), (delta, 1)),
    })


class FieldTests(SimpleTestCase):
    def test_apply_coordinate_field(self):
        dz = VectorField.coordinate(CLASS_I, EXPANDED, Z)
        self.assertEqual(apply_field(dz, jet(u=1)), RationalFn(jet(z=1, u=1)))
        self.assertTrue(dz.apply(5).is_zero())

    def test_bracket_antisymmetry(self):
        x = class_i_generator()
        self.assertTrue(lie_bracket(x, x).is_zero())
        y = x.conjugate()
        self.assertTrue((lie_bracket(x, y) + lie_bracket(y, x)).is_zero())

    def test_rigid_class_i_transversal(self):
        x = VectorField(CLASS_I, EXPANDED, {Z: 1, U: jet(z=1).scale(I)})
        t = lie_bracket(x, x.conjugate()).scale(I).map(lambda v: RationalFn(v.num.rigidify()))
        self.assertEqual(set(t.components), {U})
        self.assertEqual(t[U], RationalFn(jet(z=1, zbar=1).scale(2)))

    def test_conjugate_of_bracket(self):
        x = class_i_generator()
        y = VectorField(CLASS_I, EXPANDED, {U: jet(z=1, zbar=1)})
        self.assertTrue(
            lie_bracket(x, y).conjugate().equals(lie_bracket(x.conjugate(), y.conjugate()))
        )

    def test_reality(self):
        x = class_i_generator()
        t = lie_bracket(x, x.conjugate()).scale(I)
        self.assertTrue(reality_check(t))
        self.assertFalse(reality_check(x))

    def test_dag_backend_agrees(self):
        x = class_i_generator()
        expanded = lie_bracket(x, x.conjugate())
        lazy = lie_bracket(x.to_dag(), x.to_dag().conjugate())
        self.assertTrue(lazy.equals(expanded.to_dag(), n_points=10, seed=3))

    def test_jacobi_identity(self):
        x = class_i_generator(DAG)
        y = x.conjugate()
        t = lie_bracket(x, y)
        jacobi = lie_bracket(lie_bracket(x, y), t) + lie_bracket(lie_bracket(y, t), x) + lie_bracket(lie_bracket(t, x), y)
        self.assertTrue(jacobi.equals(VectorField(CLASS_I, DAG), n_points=5, seed=1))

    def test_mixed_backends_rejected(self):
        with self.assertRaises(ContractError):
            class_i_generator() + class_i_generator().to_dag()


class FrameSolveTests(SimpleTestCase):
    def setUp(self):
        self.l = class_i_generator()
        self.lbar = self.l.conjugate()
        self.t = lie_bracket(self.l, self.lbar).scale(I)
        self.frame = {'T': self.t, 'Lbar': self.lbar, 'L': self.l}

    def test_du_in_frame(self):
        expansion = frame_solve(VectorField.coordinate(CLASS_I, EXPANDED, U), self.frame)
        self.assertTrue(expansion.residual.is_zero())
        self.assertTrue(expansion['L'].is_zero())
        self.assertEqual(expansion['T'] * self.t[U], RationalFn.of(1))

    def test_round_trip(self):
        rng = random.Random(6)
        for _ in range(3):
            w = VectorField(CLASS_I, EXPANDED, {
                Z: gaussian(rng.randint(-3, 3)),
                ZBAR: jet(u=1).scale(rng.randint(1, 4)),
                U: jet(z=1, zbar=1) + rng.randint(-2, 2),
            })
            expansion = frame_solve(w, self.frame)
            self.assertTrue(expansion.residual.is_zero())
            self.assertTrue(reassemble(expansion, self.frame).equals(w))

    def test_degenerate_frame(self):
        frame = {'Lbar': self.lbar, 'L': self.l, 'V': VectorField(CLASS_I, EXPANDED)}
        with self.assertRaises(DegenerateFrameError):
            frame_solve(VectorField.coordinate(CLASS_I, EXPANDED, U), frame)

    def test_determinant_laplace(self):
        m = [[RationalFn.of(v) for v in row] for row in ([2, 0, 0], [0, 4, 4], [0, 4, -4])]
        self.assertEqual(determinant(m, EXPANDED), RationalFn.of(-64))


class OneFormTests(SimpleTestCase):
    def test_pairing(self):
        l = class_i_generator()
        delta = FactorHandle('Delta', jet(u=1) + I)
        a = RationalFn.over(-jet(z=1), (delta, 1))
        form = OneForm(CLASS_I, EXPANDED, {U: 1, Z: -a, ZBAR: -a.conjugate()})
        self.assertTrue(form.pair(l).is_zero())
        self.assertTrue(form(l.conjugate()).is_zero())
        self.assertEqual(form(VectorField.coordinate(CLASS_I, EXPANDED, U)), RationalFn.of(1))


class RigidClassIISolveTests(SimpleTestCase):
    """d/du1 in the vertical frame {T, S} of a rigid class II submanifold."""

    arity = Arity(1, 2)

    def phi(self, func, z, zbar):
        return Poly.jet(self.arity.jet(func, z=z, zbar=zbar))

    def setUp(self):
        u1, u2 = Coord('u', 0), Coord('u', 1)
        self.frame = {
            'T': VectorField(self.arity, EXPANDED, {u1: self.phi(1, 1, 1).scale(2), u2: self.phi(2, 1, 1).scale(2)}),
            'S': VectorField(self.arity, EXPANDED, {u1: self.phi(1, 2, 1).scale(2), u2: self.phi(2, 2, 1).scale(2)}),
        }
        self.du1 = VectorField.coordinate(self.arity, EXPANDED, u1)

    def test_cramer_pair(self):
        expansion = frame_solve(self.du1, self.frame)
        # 2 (phi_{1,zzbar} phi_{2,zzzbar} - phi_{2,zzbar} phi_{1,zzzbar}) times each coefficient
        half_det = RationalFn(
            (self.phi(1, 1, 1) * self.phi(2, 2, 1) - self.phi(2, 1, 1) * self.phi(1, 2, 1)).scale(2)
        )
        self.assertEqual(expansion['T'] * half_det, RationalFn(self.phi(2, 2, 1)))
        self.assertEqual(expansion['S'] * half_det, RationalFn(-self.phi(2, 1, 1)))
        self.assertTrue(expansion.residual.is_zero())

    def test_reassembly(self):
        expansion = frame_solve(self.du1, self.frame)
        self.assertTrue(reassemble(expansion, self.frame).equals(self.du1))
