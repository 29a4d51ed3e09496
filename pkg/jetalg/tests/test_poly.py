import random

from django.test import SimpleTestCase, override_settings

from crframes.exceptions import ArityError, ExpansionAbandoned
from jetalg.coefficients import I, ONE, gaussian
from jetalg.jets import Arity, Coord
from jetalg.poly import ExpansionBudget, Poly

CLASS_I = Arity(1, 1)
CLASS_II = Arity(1, 2)
Z, ZBAR, U = Coord('z'), Coord('zbar'), Coord('u')


def jet(arity=CLASS_I, **orders):
    return Poly.jet(arity.jet(**orders))


def random_poly(rng, arity=CLASS_I, terms=6):
    pool = [arity.jet(z=1), arity.jet(zbar=1), arity.jet(u=1), arity.jet(z=1, zbar=1), arity.jet(z=1, u=1)]
    out = Poly()
    for _ in range(rng.randint(1, terms)):
        term = Poly.const(gaussian((rng.randint(-5, 5), rng.randint(1, 4)), rng.randint(-3, 3)))
        for _ in range(rng.randint(0, 3)):
            term = term * Poly.jet(rng.choice(pool))
        out = out + term
    return out


class PolyArithmeticTests(SimpleTestCase):
    def test_single_term_product(self):
        product = jet(z=1) * jet(zbar=1)
        self.assertEqual(product.monomial_count(), 1)
        self.assertEqual(list(product.terms.values()), [ONE])

    def test_delta_times_conjugate(self):
        phi_u = jet(u=1)
        product = (phi_u + I) * (phi_u - I)
        self.assertEqual(product, Poly.one() + phi_u * phi_u)

    def test_additive_inverse_and_merge(self):
        p = jet(z=1) * jet(u=1) + I
        self.assertTrue((p + (-p)).is_zero())
        self.assertEqual(jet(z=1) + jet(z=1), jet(z=1).scale(2))

    def test_class_ii_delta_plus_conjugate(self):
        a = Poly.jet(CLASS_II.jet(1, u=(1, 0)))
        b = Poly.jet(CLASS_II.jet(1, u=(0, 1)))
        c = Poly.jet(CLASS_II.jet(2, u=(1, 0)))
        d = Poly.jet(CLASS_II.jet(2, u=(0, 1)))
        delta = (a + I) * (d + I) - b * c
        self.assertEqual(delta + delta.conjugate(), (a * d - b * c).scale(2) - 2)

    def test_ring_axioms(self):
        rng = random.Random(11)
        for _ in range(10):
            a, b, c = (random_poly(rng) for _ in range(3))
            self.assertEqual(a * b, b * a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertLessEqual((a * b).monomial_count(), a.monomial_count() * b.monomial_count())

    def test_power(self):
        p = jet(u=1) + I
        self.assertEqual(p ** 3, p * p * p)
        self.assertEqual(p ** 0, Poly.one())

    @override_settings(CRFRAMES_THREADS=4, CRFRAMES_PARALLEL_THRESHOLD=1)
    def test_parallel_product_matches_sequential(self):
        rng = random.Random(5)
        a, b = random_poly(rng, terms=12), random_poly(rng, terms=12)
        parallel = a * b
        with override_settings(CRFRAMES_THREADS=1):
            sequential = a * b
        self.assertEqual(parallel, sequential)


class PolyCalculusTests(SimpleTestCase):
    def test_prolongation(self):
        self.assertEqual(jet(u=1).derive(Z), jet(z=1, u=1))

    def test_leibniz(self):
        p = jet(z=1) * jet(u=1)
        expected = jet(z=1, zbar=1) * jet(u=1) + jet(z=1) * jet(zbar=1, u=1)
        self.assertEqual(p.derive(ZBAR), expected)

    def test_derivation_properties(self):
        rng = random.Random(3)
        for _ in range(8):
            a, b = random_poly(rng), random_poly(rng)
            self.assertEqual((a * b).derive(Z), a.derive(Z) * b + a * b.derive(Z))
            self.assertEqual(a.derive(Z).derive(ZBAR), a.derive(ZBAR).derive(Z))
            self.assertEqual(a.derive(Z).conjugate(), a.conjugate().derive(ZBAR))

    def test_derive_outside_arity(self):
        with self.assertRaises(ArityError):
            jet(u=1).derive(Coord('u', 1))

    def test_conjugate(self):
        self.assertEqual((jet(z=1).scale(I)).conjugate(), jet(zbar=1).scale(-I))
        rng = random.Random(8)
        for _ in range(8):
            a, b = random_poly(rng), random_poly(rng)
            self.assertEqual((a * b).conjugate(), a.conjugate() * b.conjugate())
            self.assertEqual(a.conjugate().conjugate(), a)

    def test_rigidify(self):
        p = jet(z=1, zbar=1) * jet(u=1) + jet(z=1, zbar=1) + jet(z=1, u=1)
        self.assertEqual(p.rigidify(), jet(z=1, zbar=1))

    def test_counts(self):
        self.assertEqual(Poly().monomial_count(), 0)
        p = jet(z=1).scale(gaussian(1, 2)) + jet(u=1).scale(I) + 3
        self.assertEqual(p.monomial_count(), 3)
        self.assertEqual(p.monomial_count_split(), 4)

    def test_evaluate(self):
        p = (jet(u=1) + I) * jet(z=1)
        point = {CLASS_I.jet(u=1): gaussian(2), CLASS_I.jet(z=1): gaussian(3)}
        self.assertEqual(p.evaluate(point), gaussian(6, 3))


class ExpansionBudgetTests(SimpleTestCase):
    def test_zero_budget_abandons_immediately(self):
        with self.assertRaises(ExpansionAbandoned) as ctx:
            with ExpansionBudget(0):
                jet(z=1) * jet(u=1)
        self.assertEqual(ctx.exception.cap, 0)
        self.assertEqual(ctx.exception.exit_code, 3)

    def test_budget_is_scoped(self):
        with ExpansionBudget(100):
            jet(z=1) * jet(u=1)
        big = random_poly(random.Random(1), terms=6) * random_poly(random.Random(2), terms=6)
        self.assertGreaterEqual(big.monomial_count(), 0)

    @override_settings(CRFRAMES_BYTES_PER_TERM=400)
    def test_from_bytes(self):
        self.assertEqual(ExpansionBudget.from_bytes(4000).cap, 10)
