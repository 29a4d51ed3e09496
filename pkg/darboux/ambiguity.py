"""
Initial ambiguity matrix group of class IV2.

The group acts on the coframe (rho0, kappa0, zeta0, conjugates) and is
parametrized by complex a, b, c, d, e with a and c nonzero.
"""

from dataclasses import dataclass

import sympy

PARAMETERS = ('a', 'b', 'c', 'd', 'e')

PATTERN = (
    ('c', '0', '0', '0', '0'),
    ('b', 'a', '0', '0', '0'),
    ('0', '0', 'cbar', '0', '0'),
    ('0', '0', 'bbar', 'abar', '0'),
    ('e', 'd', 'ebar', 'dbar', 'a*abar'),
)


@dataclass
class AmbiguityGroup:
    class_id: str
    dimension: int
    parameters: tuple
    constraints: tuple
    entries: tuple

    def matrix(self, **values):
        """The group element at the given parameter values (symbolic ones where omitted)."""
        return ambiguity_matrix(**values)


def symbols():
    return sympy.symbols(' '.join(PARAMETERS))


def ambiguity_matrix(a=None, b=None, c=None, d=None, e=None):
    """5x5 sympy Matrix of the pattern; parameters default to free symbols."""
    defaults = dict(zip(PARAMETERS, symbols()))
    values = {
        name: defaults[name] if value is None else sympy.sympify(value)
        for name, value in zip(PARAMETERS, (a, b, c, d, e))
    }
    env = dict(values)
    env.update({f'{name}bar': sympy.conjugate(value) for name, value in values.items()})
    return sympy.Matrix([
        [sympy.expand(sympy.sympify(entry, locals=env)) for entry in row]
        for row in PATTERN
    ])


def emit_ambiguity_group_iv2():
    return AmbiguityGroup('IV2', 5, PARAMETERS, ('a != 0', 'c != 0'), PATTERN)


def parameters_of(matrix):
    """Read a, b, c, d, e off a matrix in the pattern positions."""
    return {
        'a': matrix[1, 1], 'b': matrix[1, 0], 'c': matrix[0, 0], 'd': matrix[4, 1], 'e': matrix[4, 0],
    }


def matches_pattern(matrix):
    """True when ``matrix`` is the pattern matrix at its own read-off parameters, with a, c nonzero."""
    if matrix.shape != (5, 5):
        return False
    params = parameters_of(matrix)
    if params['a'] == 0 or params['c'] == 0:
        return False
    difference = (matrix - ambiguity_matrix(**params)).applyfunc(sympy.expand)
    return difference.is_zero_matrix is True


def closure_holds():
    """The product of two generic group elements lies in the group."""
    first = sympy.symbols('a1 b1 c1 d1 e1')
    second = sympy.symbols('a2 b2 c2 d2 e2')
    product = ambiguity_matrix(*first) * ambiguity_matrix(*second)
    return matches_pattern(product)
