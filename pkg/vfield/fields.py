"""
Vector fields on the intrinsic coordinates (z, zbar, u) of a class.
"""

from crframes.exceptions import ArityError, ContractError

from .backends import DAG


class VectorField:
    """Components keyed by Coord; a missing component is zero."""

    __slots__ = ('arity', 'backend', 'components')

    def __init__(self, arity, backend, components=None):
        self.arity = arity
        self.backend = backend
        self.components = {}
        for coord, value in (components or {}).items():
            arity.check(coord)
            value = backend.lift(value)
            if not backend.is_zero(value):
                self.components[coord] = value

    @classmethod
    def coordinate(cls, arity, backend, coord):
        return cls(arity, backend, {coord: backend.one()})

    def __getitem__(self, coord):
        return self.components.get(coord, self.backend.zero())

    def _check(self, other):
        if not isinstance(other, VectorField):
            raise ContractError(f'expected a VectorField, got {type(other).__name__}')
        if other.arity != self.arity:
            raise ArityError('vector fields of different arities')
        if other.backend is not self.backend:
            raise ContractError('vector fields on different backends')

    def __add__(self, other):
        self._check(other)
        out = dict(self.components)
        for coord, value in other.components.items():
            out[coord] = out[coord] + value if coord in out else value
        return VectorField(self.arity, self.backend, out)

    def __neg__(self):
        return VectorField(self.arity, self.backend, {c: -v for c, v in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        """Multiply every component by a function."""
        value = self.backend.lift(value)
        if self.backend.is_zero(value):
            return VectorField(self.arity, self.backend)
        return VectorField(self.arity, self.backend, {c: value * v for c, v in self.components.items()})

    def apply(self, f):
        """X(f) = sum over coordinates of X^c * D_c(f)."""
        f = self.backend.lift(f)
        out = self.backend.zero()
        for coord, value in self.components.items():
            derived = f.derive(coord)
            if not self.backend.is_zero(derived):
                out = out + value * derived
        return out

    __call__ = apply

    def bracket(self, other):
        """[X, Y]^c = X(Y^c) - Y(X^c)."""
        self._check(other)
        out = {}
        for coord in self.arity.coords:
            value = self.apply(other[coord]) - other.apply(self[coord])
            if not self.backend.is_zero(value):
                out[coord] = value
        return VectorField(self.arity, self.backend, out)

    def conjugate(self):
        return VectorField(self.arity, self.backend, {
            coord.conjugate(): value.conjugate() for coord, value in self.components.items()
        })

    def is_zero(self):
        return not self.components

    def is_horizontal(self):
        return any(coord.kind != 'u' for coord in self.components)

    def map(self, fn):
        return VectorField(self.arity, self.backend, {c: fn(v) for c, v in self.components.items()})

    def to_dag(self):
        return VectorField(self.arity, DAG, {c: self.backend.to_dag(v) for c, v in self.components.items()})

    def equals(self, other, n_points=None, seed=None):
        """Component-wise equality: exact when expanded, by identity test on the DAG backend."""
        self._check(other)
        return all(
            self.backend.equal(self[c], other[c], n_points, seed)
            for c in self.arity.coords
        )

    def __repr__(self):
        parts = ', '.join(f'{self.arity.name(c)}: {v!r}' for c, v in sorted(self.components.items()))
        return f'VectorField({parts})'


def lie_bracket(x, y):
    return x.bracket(y)


def apply_field(x, f):
    return x.apply(f)


def reality_check(x, n_points=None, seed=None):
    """True iff the field equals its own conjugate."""
    return x.conjugate().equals(x, n_points, seed)
