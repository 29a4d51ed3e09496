"""
Determinant building blocks of the intrinsic generators.

For a class of codimension q the generator is

    L = d/dz + sum_k (Lambda_k / Delta) d/du_k

where Delta = det(I*Id + [phi_{j,u_k}]) and Lambda_k is Delta with its k-th
column replaced by (-phi_{j,z})_j.  For the classes with two complex
coordinates and one real one, L_j = d/dz_j + A_j d/du with
A_j = -phi_{z_j} / (I + phi_u).
"""

from jetalg.coefficients import I
from jetalg.jets import Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn
from vfield.fields import VectorField
from vfield.solve import determinant


class PolyRing:
    """The zero/one/is_zero protocol of vfield.solve, for plain polynomials."""

    def zero(self):
        return Poly()

    def one(self):
        return Poly.one()

    def is_zero(self, value):
        return value.is_zero()


POLY_RING = PolyRing()


def phi(arity, func=1, **orders):
    return Poly.jet(arity.jet(func, **orders))


def _unit(length, index):
    return tuple(1 if i == index else 0 for i in range(length))


def u_jet(arity, func, k):
    return phi(arity, func, u=_unit(arity.q, k))


def z_jet(arity, func):
    return phi(arity, func, z=_unit(arity.p, 0))


def delta_matrix(arity):
    """Rows are graphing functions, columns are u coordinates."""
    return [
        [u_jet(arity, j + 1, k) + (I if j == k else 0) for k in range(arity.q)]
        for j in range(arity.q)
    ]


def delta(arity):
    return determinant(delta_matrix(arity), POLY_RING)


def lambdas(arity):
    """Lambda_1 .. Lambda_q by Cramer's rule on the Delta matrix."""
    matrix = delta_matrix(arity)
    rhs = [-z_jet(arity, j + 1) for j in range(arity.q)]
    out = []
    for k in range(arity.q):
        replaced = [row[:k] + [rhs[j]] + row[k + 1:] for j, row in enumerate(matrix)]
        out.append(determinant(replaced, POLY_RING))
    return out


def levi_rigid_matrix(arity):
    """Rigid Levi form of one graphing function: entry (j, k) is 2 phi_{z_k zbar_j}."""
    return [
        [phi(arity, 1, z=_unit(arity.p, k), zbar=_unit(arity.p, j)).scale(2) for k in range(arity.p)]
        for j in range(arity.p)
    ]


def determinant_generator(arity, backend):
    """The generator L of a single-z class with its Delta and Lambda_k determinants."""
    d = delta(arity)
    lams = lambdas(arity)
    handle = FactorHandle('Delta', d)
    components = {Coord('z'): 1}
    for k, lam in enumerate(lams):
        components[Coord('u', k)] = RationalFn.over(lam, (handle, 1))
    determinants = {'Delta': d}
    for k, lam in enumerate(lams):
        determinants[f'Lambda{k + 1}'] = lam
    return VectorField(arity, backend, components), determinants


def levi_generators(arity, backend):
    """L_j = d/dz_j + A_j d/du with A_j = -phi_{z_j} / (I + phi_u), for the two-z classes."""
    handle = FactorHandle('Delta', phi(arity, u=1) + I)
    generators = {}
    for j in range(arity.p):
        a_j = RationalFn.over(-phi(arity, z=_unit(arity.p, j)), (handle, 1))
        generators[f'L{j + 1}'] = VectorField(arity, backend, {Coord('z', j): 1, Coord('u'): a_j})
    return generators, {'Delta': handle.poly}


def levi_entries(generators, backend):
    """ell_jk = I (L_k(Abar_j) - Lbar_j(A_k)), so that I [L_k, Lbar_j] = ell_jk d/du."""
    u = Coord('u')
    names = sorted(generators)
    out = {}
    for j, name_j in enumerate(names):
        lbar_j = generators[name_j].conjugate()
        abar_j = lbar_j[u]
        for k, name_k in enumerate(names):
            l_k = generators[name_k]
            out[(j + 1, k + 1)] = (l_k.apply(abar_j) - lbar_j.apply(l_k[u])) * backend.lift(I)
    return out
