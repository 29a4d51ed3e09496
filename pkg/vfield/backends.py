"""
Field-element backends.

Vector-field code is written once against this small protocol; the element
type is RationalFn for the expanded backend and a DAG node for the lazy one.
Both element types support ``+ - * /``, negation, ``derive(coord)`` and
``conjugate()``.
"""

from crframes.exceptions import ContractError
from exprdag import nodes
from exprdag.identity import identity_test
from jetalg.poly import Poly
from jetalg.rational import RationalFn


class ExpandedBackend:
    name = 'expanded'

    def lift(self, value):
        if isinstance(value, nodes.Node):
            raise ContractError('cannot lift a DAG node into the expanded backend')
        return RationalFn.of(value)

    def zero(self):
        return RationalFn(Poly())

    def one(self):
        return RationalFn.of(1)

    def is_zero(self, value):
        return value.is_zero()

    def equal(self, a, b, n_points=None, seed=None):
        return a == b

    def to_dag(self, value):
        return nodes.from_rational(value)


class DagBackend:
    name = 'dag'

    def lift(self, value):
        if isinstance(value, nodes.Node):
            return value
        if isinstance(value, RationalFn):
            return nodes.from_rational(value)
        return nodes.lift(value)

    def zero(self):
        return nodes.zero()

    def one(self):
        return nodes.one()

    def is_zero(self, value):
        """Structural test only; use ``equal`` for a semantic one."""
        return value.is_zero()

    def equal(self, a, b, n_points=None, seed=None):
        return identity_test(a - b, n_points, seed).holds

    def to_dag(self, value):
        return value


EXPANDED = ExpandedBackend()
DAG = DagBackend()

BACKENDS = {backend.name: backend for backend in (EXPANDED, DAG)}


def get_backend(name):
    try:
        return BACKENDS[name]
    except KeyError:
        raise ContractError(f'unknown backend {name!r}') from None
