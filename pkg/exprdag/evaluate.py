"""
Evaluation of DAGs as a fold over a pluggable arithmetic.

Nodes are visited in id order, which is a topological order, so the fold
needs no recursion.  The memo table lives for one call only.
"""

from crframes.exceptions import SingularPointError
from jetalg.jets import JETS
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn

from .nodes import ADD, CONST, DIV, LEAF, MUL, NEG, NODES, POLY, reachable


class GaussianArithmetic:
    """Exact values at a point mapping JetVar to a Gaussian rational."""

    def __init__(self, point):
        self.point = point

    def const(self, value):
        return value

    def leaf(self, var_id):
        return self.point[JETS.var(var_id)]

    def poly(self, p):
        return p.evaluate(self.point)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, label):
        if not b:
            raise SingularPointError(label)
        return a / b


class RationalArithmetic:
    """Re-expands a DAG into a RationalFn; labelled polynomial divisors become factor handles."""

    def const(self, value):
        return RationalFn.of(value)

    def leaf(self, var_id):
        return RationalFn(Poly.jet(JETS.var(var_id)))

    def poly(self, p):
        return RationalFn(p)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b, label):
        if label is not None and b.is_polynomial() and not b.num.is_constant():
            return a * RationalFn.over(Poly.one(), (FactorHandle(label, b.num), 1))
        return a / b


def _fold(order, arithmetic):
    values = {}
    for node in order:
        kind = node.kind
        if kind == CONST:
            value = arithmetic.const(node.payload)
        elif kind == LEAF:
            value = arithmetic.leaf(node.payload)
        elif kind == POLY:
            value = arithmetic.poly(node.payload)
        elif kind == ADD:
            value = arithmetic.add(values[node.args[0].id], values[node.args[1].id])
        elif kind == NEG:
            value = arithmetic.neg(values[node.args[0].id])
        elif kind == MUL:
            value = arithmetic.mul(values[node.args[0].id], values[node.args[1].id])
        elif kind == DIV:
            denominator = node.args[1]
            label = NODES.label_of(denominator) or f'node {denominator.id}'
            value = arithmetic.div(values[node.args[0].id], values[denominator.id], label)
        else:
            raise ValueError(f'unknown node kind {kind!r}')
        values[node.id] = value
    return values


def evaluate(root, arithmetic):
    return _fold(reachable(root), arithmetic)[root.id]


def evaluate_many(roots, arithmetic):
    """Evaluate several roots sharing one memo table."""
    values = _fold(reachable(*roots), arithmetic)
    return [values[root.id] for root in roots]


def evaluate_at(root, point):
    return evaluate(root, GaussianArithmetic(point))


def evaluate_naive(root, point):
    """Plain recursive evaluation without sharing, for cross-checking the fold."""
    arithmetic = GaussianArithmetic(point)

    def walk(node):
        if node.kind == CONST:
            return node.payload
        if node.kind == LEAF:
            return arithmetic.leaf(node.payload)
        if node.kind == POLY:
            return arithmetic.poly(node.payload)
        if node.kind == NEG:
            return -walk(node.args[0])
        a, b = (walk(child) for child in node.args)
        if node.kind == ADD:
            return a + b
        if node.kind == MUL:
            return a * b
        return arithmetic.div(a, b, NODES.label_of(node.args[1]) or f'node {node.args[1].id}')

    return walk(root)


def expand(root):
    return evaluate(root, RationalArithmetic())
