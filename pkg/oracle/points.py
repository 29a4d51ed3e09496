"""
Random base points on a concrete manifold.

A point has Gaussian-rational z coordinates, zbar their conjugates and real
rational u coordinates; the jet values seen by the evaluator are the
derivatives of phi there.
"""

from crframes.conf import setting
from exprdag.evaluate import GaussianArithmetic
from jetalg.coefficients import ZERO, conj, random_gaussian, random_real
from jetalg.jets import U, Z

from .instantiate import jet_values


def origin(arity):
    return {coord: ZERO for coord in arity.coords}


def random_base_point(rng, arity, height):
    point = {}
    for coord in arity.holomorphic:
        point[coord] = random_gaussian(rng, height)
        point[coord.conjugate()] = conj(point[coord])
    for coord in arity.real:
        point[coord] = random_real(rng, height)
    return point


class BaseSampler:
    """Identity-suite sampler drawing base points of a ConcretePhi."""

    def __init__(self, phi, height=None):
        self.phi = phi
        self.height = height or setting('CRFRAMES_BASE_HEIGHT')

    def draw(self, rng, jets):
        point = random_base_point(rng, self.phi.arity, self.height)
        return point, jet_values(self.phi, jets, point)

    def arithmetic(self, context):
        return GaussianArithmetic(context)

    def describe(self, point):
        arity = self.phi.arity
        return {
            arity.name(coord): value
            for coord, value in sorted(point.items())
            if coord.kind in (Z, U)
        }
