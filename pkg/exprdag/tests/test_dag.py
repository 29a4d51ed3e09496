import random

from django.test import SimpleTestCase, override_settings

from crframes.exceptions import DegenerateExpressionError, SingularPointError
from exprdag import nodes
from exprdag.evaluate import evaluate_at, evaluate_naive, expand
from exprdag.identity import JetSampler, identity_suite, identity_test
from jetalg.coefficients import I, ONE, gaussian
from jetalg.jets import Arity, Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn

CLASS_I = Arity(1, 1)
CLASS_II = Arity(1, 2)
Z, ZBAR, U = Coord('z'), Coord('zbar'), Coord('u')


def class_ii_delta():
    a = Poly.jet(CLASS_II.jet(1, u=(1, 0)))
    b = Poly.jet(CLASS_II.jet(1, u=(0, 1)))
    c = Poly.jet(CLASS_II.jet(2, u=(1, 0)))
    d = Poly.jet(CLASS_II.jet(2, u=(0, 1)))
    return (a + I) * (d + I) - b * c


class EveryThirdDrawSampler(JetSampler):
    """Only every third draw is admissible: the others set every jet to 0."""

    def __init__(self):
        super().__init__()
        self.calls = 0

    def draw(self, rng, jets):
        self.calls += 1
        value = gaussian(1 if self.calls % 3 == 0 else 0)
        point = {var: value for var in jets}
        return point, point


class ConstructionTests(SimpleTestCase):
    def test_hash_consing(self):
        a = nodes.leaf(CLASS_I.jet(z=1))
        b = nodes.leaf(CLASS_I.jet(u=1))
        self.assertIs(nodes.mul(a, b), nodes.mul(b, a))
        self.assertIs(a + b, b + a)

    def test_folding(self):
        a = nodes.leaf(CLASS_I.jet(z=1))
        self.assertIs(a * 1, a)
        self.assertTrue((a * 0).is_zero())
        self.assertIs(-(-a), a)
        self.assertTrue((a - a).is_zero())
        self.assertEqual(nodes.const(2) + nodes.const(3), nodes.const(5))

    def test_constant_rational(self):
        self.assertIs(nodes.from_rational(RationalFn.of(1)), nodes.one())

    def test_from_rational_structure(self):
        delta = FactorHandle('Delta', class_ii_delta())
        lam = Poly.jet(CLASS_II.jet(1, z=1))
        node = nodes.from_rational(RationalFn.over(lam, (delta, 1)))
        self.assertEqual(node.kind, nodes.DIV)
        self.assertIs(node.args[0], nodes.poly(lam))
        self.assertEqual(nodes.NODES.label_of(node.args[1]), 'Delta')

    def test_memos_live_in_the_table(self):
        a = nodes.leaf(CLASS_I.jet(z=1)) * nodes.leaf(CLASS_I.jet(u=1))
        derived = a.derive(Z)
        self.assertIs(nodes.NODES.derived[(a.id, Z)], derived)
        conjugated = a.conjugate()
        self.assertIs(nodes.NODES.conjugates[a.id], conjugated)

    def test_clear_empties_the_table(self):
        table = nodes.NodeTable()
        table.intern(nodes.CONST, (), ONE)
        table.derived[(0, Z)] = None
        table.conjugates[0] = None
        table.clear()
        self.assertEqual(len(table), 0)
        self.assertEqual(table.derived, {})
        self.assertEqual(table.conjugates, {})


class DerivativeTests(SimpleTestCase):
    def test_leaf_prolongation(self):
        self.assertIs(nodes.leaf(CLASS_I.jet(u=1)).derive(Z), nodes.leaf(CLASS_I.jet(z=1, u=1)))

    def test_quotient_rule(self):
        a = nodes.leaf(CLASS_I.jet(z=1))
        b = nodes.leaf(CLASS_I.jet(u=1)) + I
        da, db = a.derive(Z), b.derive(Z)
        expected = nodes.div(nodes.sub(nodes.mul(da, b), nodes.mul(a, db)), nodes.mul(b, b))
        self.assertIs(nodes.div(a, b).derive(Z), expected)

    def test_derive_matches_expanded_backend(self):
        delta = FactorHandle('Delta', class_ii_delta())
        f = RationalFn.over(Poly.jet(CLASS_II.jet(1, z=1)) * delta.conjugate().poly, (delta, 2))
        dag = nodes.from_rational(f)
        self.assertEqual(expand(dag.derive(Z)), f.derive(Z))

    def test_derive_commutes_with_conjugation(self):
        a = nodes.leaf(CLASS_I.jet(z=1)) * I
        expr = a / (nodes.leaf(CLASS_I.jet(u=1)) + I)
        self.assertIs(expr.derive(Z).conjugate(), expr.conjugate().derive(ZBAR))

    def test_conjugate_is_involution(self):
        expr = nodes.poly(class_ii_delta()) / nodes.leaf(CLASS_II.jet(2, z=1))
        self.assertIs(expr.conjugate().conjugate(), expr)


class EvaluationTests(SimpleTestCase):
    def test_delta_at_zero_jets(self):
        delta = nodes.poly(class_ii_delta())
        point = {var: gaussian(0) for var in nodes.leaves(delta)}
        self.assertEqual(evaluate_at(delta, point), -ONE)

    def test_singular_point_names_factor(self):
        delta = FactorHandle('Delta', class_ii_delta())
        expr = nodes.from_rational(RationalFn.over(Poly.one(), (delta, 1)))
        point = {var: gaussian(0) for var in nodes.leaves(expr)}
        point[CLASS_II.jet(1, u=(1, 0))] = -I
        with self.assertRaises(SingularPointError) as ctx:
            evaluate_at(expr, point)
        self.assertEqual(ctx.exception.factor, 'Delta')

    def test_memoized_matches_naive(self):
        rng = random.Random(2)
        expr = nodes.poly(class_ii_delta())
        expr = (expr * expr.conjugate() + nodes.leaf(CLASS_II.jet(1, z=1))) / expr
        expr = expr.derive(Z)
        for _ in range(5):
            point, _ = JetSampler().draw(rng, nodes.leaves(expr))
            self.assertEqual(evaluate_at(expr, point), evaluate_naive(expr, point))

    def test_expanded_and_dag_values_agree(self):
        delta = FactorHandle('Delta', class_ii_delta())
        f = RationalFn.over(Poly.jet(CLASS_II.jet(2, zbar=1)), (delta, 1), (delta.conjugate(), 2))
        dag = nodes.from_rational(f)
        rng = random.Random(9)
        for _ in range(20):
            point, _ = JetSampler().draw(rng, nodes.leaves(dag))
            self.assertEqual(evaluate_at(dag, point), f.evaluate(point))


class IdentityTests(SimpleTestCase):
    def test_zero_holds(self):
        verdict = identity_test(nodes.zero(), 20, 1)
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.points_tested, 20)

    def test_delta_times_conjugate_is_real(self):
        delta = nodes.poly(class_ii_delta())
        product = delta * delta.conjugate()
        verdict = identity_test(product - product.conjugate(), 20, 7)
        self.assertTrue(verdict.holds)

    def test_nonzero_fails_everywhere(self):
        verdict = identity_test(nodes.leaf(CLASS_I.jet(z=1)) - nodes.leaf(CLASS_I.jet(zbar=1)), 5, 7)
        self.assertFalse(verdict.holds)
        self.assertLessEqual(len(verdict.failures), 5)
        self.assertGreater(len(verdict.failures), 0)

    def test_reproducible(self):
        expr = nodes.leaf(CLASS_I.jet(z=1)) * nodes.leaf(CLASS_I.jet(u=1)) - 1
        first = identity_test(expr, 6, 42)
        second = identity_test(expr, 6, 42)
        self.assertEqual(first.failures, second.failures)

    @override_settings(CRFRAMES_THREADS=3)
    def test_threaded_suite_matches_sequential(self):
        expr = nodes.leaf(CLASS_I.jet(z=1)) - nodes.leaf(CLASS_I.jet(u=1))
        threaded = identity_suite({'e': expr}, 7, 3)[0]
        with override_settings(CRFRAMES_THREADS=1):
            sequential = identity_suite({'e': expr}, 7, 3)[0]
        self.assertEqual(threaded.failures, sequential.failures)

    @override_settings(CRFRAMES_RETRY_LIMIT=2, CRFRAMES_THREADS=1)
    def test_retry_limit_counts_per_point(self):
        phi_z = CLASS_I.jet(z=1)
        expr = nodes.leaf(phi_z) * nodes.div(nodes.one(), nodes.leaf(phi_z)) - 1
        sampler = EveryThirdDrawSampler()
        verdict = identity_test(expr, 3, 5, sampler=sampler)
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.points_tested, 3)
        self.assertEqual(verdict.retries, 6)

    @override_settings(CRFRAMES_RETRY_LIMIT=5)
    def test_degenerate_expression(self):
        phi_u = CLASS_I.jet(u=1)
        vanishing = nodes.poly(Poly.jet(phi_u, 2)) - nodes.mul(nodes.leaf(phi_u), nodes.leaf(phi_u))
        with self.assertRaises(DegenerateExpressionError):
            identity_test(nodes.div(nodes.one(), vanishing), 3, 1)
