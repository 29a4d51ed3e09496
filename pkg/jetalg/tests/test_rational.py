from django.test import SimpleTestCase

from crframes.exceptions import ContractError, SingularPointError
from jetalg.coefficients import I, gaussian
from jetalg.jets import Arity, Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn

CLASS_I = Arity(1, 1)
Z, U = Coord('z'), Coord('u')


def jet(**orders):
    return Poly.jet(CLASS_I.jet(**orders))


class RationalFnTests(SimpleTestCase):
    def setUp(self):
        self.delta = FactorHandle('Delta', jet(u=1) + I)
        self.f = RationalFn.over(-jet(z=1), (self.delta, 1))

    def test_conjugate_swaps_delta_labels(self):
        conj = self.f.conjugate()
        self.assertEqual([h.label for h in conj.den], ['Deltabar'])
        self.assertEqual(conj.conjugate(), self.f)

    def test_quotient_rule_denominator(self):
        derived = self.f.derive(Z)
        self.assertEqual(derived.denominator_pattern(), [('Delta', 2)])
        expected_num = -jet(z=2) * (jet(u=1) + I) + jet(z=1) * jet(z=1, u=1)
        self.assertEqual(derived.num, expected_num)

    def test_add_uses_factorwise_lcm(self):
        deltabar = self.delta.conjugate()
        total = RationalFn.over(Poly.one(), (self.delta, 2)) + RationalFn.over(Poly.one(), (deltabar, 1))
        self.assertEqual(sorted(total.denominator_pattern()), [('Delta', 2), ('Deltabar', 1)])
        self.assertEqual(total.num, deltabar.poly + self.delta.power(2))

    def test_division_cancels_handles(self):
        ratio = self.f / RationalFn.over(jet(u=1), (self.delta, 1))
        self.assertEqual(ratio.denominator_pattern(), [('Custom', 1)])
        self.assertEqual(ratio.num, -jet(z=1))
        self.assertEqual(self.f / self.f, RationalFn.of(1))

    def test_equality_by_cross_multiplication(self):
        lifted = RationalFn.over(-jet(z=1) * self.delta.poly, (self.delta, 2))
        self.assertEqual(lifted, self.f)

    def test_reduce_to_common_denominator(self):
        reduced = self.f.reduce_to_common_denominator({self.delta: 1})
        self.assertEqual(reduced.num, self.f.num)
        with self.assertRaises(ContractError):
            RationalFn.over(Poly.one(), (self.delta, 2)).reduce_to_common_denominator({self.delta: 1})

    def test_evaluate_and_singular_point(self):
        point = {CLASS_I.jet(z=1): gaussian(2), CLASS_I.jet(u=1): gaussian(1)}
        self.assertEqual(self.f.evaluate(point), gaussian(-1, 1))
        handle = FactorHandle('ell', jet(u=1) - 1)
        with self.assertRaises(SingularPointError) as ctx:
            RationalFn.over(Poly.one(), (handle, 1)).evaluate(point)
        self.assertEqual(ctx.exception.factor, 'ell')

    def test_zero_handle_rejected(self):
        with self.assertRaises(ContractError):
            FactorHandle('Custom', Poly())
