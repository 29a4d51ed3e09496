"""
Substitution of a concrete graphing function for the jet variables.

A jet variable becomes the corresponding partial derivative of phi, either
as a sympy polynomial in the base coordinates or as its exact value at a
base point.
"""

from functools import lru_cache

import sympy
from sympy.polys.domains import QQ_I

from crframes.exceptions import SingularPointError
from exprdag.evaluate import GaussianArithmetic, evaluate, evaluate_many
from exprdag.nodes import leaves
from jetalg.coefficients import ZERO
from jetalg.jets import JETS
from vfield.backends import DAG
from vfield.fields import VectorField


@lru_cache(maxsize=None)
def _gaussian_terms(expr, symbols):
    """(exponents, QQ_I coefficient) pairs of a polynomial."""
    if expr == 0:
        return ()
    poly = sympy.Poly(expr, *symbols)
    return tuple((monom, QQ_I.from_sympy(coeff)) for monom, coeff in poly.terms())


def jet_value(phi, var, point):
    """Exact value of a jet variable at a base point (Coord -> QQ_I)."""
    symbols = tuple(phi.symbols.values())
    values = [point[coord] for coord in phi.symbols]
    total = ZERO
    for monom, coeff in _gaussian_terms(phi.derivative(var), symbols):
        term = coeff
        for value, exp in zip(values, monom):
            if exp:
                term = term * value ** exp
        total += term
    return total


def jet_values(phi, jets, point):
    return {var: jet_value(phi, var, point) for var in jets}


class SympyArithmetic:
    """Folds a DAG into a sympy expression in the base coordinates."""

    def __init__(self, phi):
        self.phi = phi

    def const(self, value):
        return QQ_I.to_sympy(value)

    def leaf(self, var_id):
        return self.phi.derivative(JETS.var(var_id))

    def poly(self, p):
        total = sympy.Integer(0)
        for mono, coeff in p.terms.items():
            factors = [self.phi.derivative(JETS.var(v)) ** e for v, e in mono]
            total += QQ_I.to_sympy(coeff) * sympy.Mul(*factors)
        return sympy.expand(total)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, label):
        if b == 0:
            raise SingularPointError(label)
        return a / b


def instantiate(value, phi):
    """
    Args:
        value: a DAG node, RationalFn, coefficient or VectorField
        phi: the ConcretePhi substituted for the jets

    Returns:
        A sympy expression in the base coordinates, or for a VectorField a
        mapping of coordinate name to expression.
    """
    if isinstance(value, VectorField):
        return {
            value.arity.name(coord): instantiate(component, phi)
            for coord, component in sorted(value.to_dag().components.items())
        }
    return sympy.cancel(evaluate(DAG.lift(value), SympyArithmetic(phi)))


def evaluate_at_base(values, phi, point):
    """Exact QQ_I values of DAG nodes at a base point."""
    nodes = [DAG.lift(v) for v in values]
    context = jet_values(phi, leaves(*nodes), point)
    return evaluate_many(nodes, GaussianArithmetic(context))
