"""
Explicit 1-forms in the coordinate differentials dz, dzbar, du.
"""

from crframes.exceptions import ArityError

from .backends import DAG


class OneForm:
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

    def __getitem__(self, coord):
        return self.components.get(coord, self.backend.zero())

    def __add__(self, other):
        if other.arity != self.arity:
            raise ArityError('1-forms of different arities')
        out = dict(self.components)
        for coord, value in other.components.items():
            out[coord] = out[coord] + value if coord in out else value
        return OneForm(self.arity, self.backend, out)

    def __neg__(self):
        return OneForm(self.arity, self.backend, {c: -v for c, v in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        value = self.backend.lift(value)
        return OneForm(self.arity, self.backend, {c: value * v for c, v in self.components.items()})

    def pair(self, field):
        """omega(X) = sum over coordinates of omega_c * X^c."""
        out = self.backend.zero()
        for coord, value in self.components.items():
            component = field[coord]
            if not self.backend.is_zero(component):
                out = out + value * component
        return out

    __call__ = pair

    def conjugate(self):
        return OneForm(self.arity, self.backend, {
            coord.conjugate(): value.conjugate() for coord, value in self.components.items()
        })

    def to_dag(self):
        return OneForm(self.arity, DAG, {c: self.backend.to_dag(v) for c, v in self.components.items()})
