"""
Independent check of the coframe structure equations.

For a coframe member omega and frame members X, Y the Cartan formula gives
d omega(X, Y) = X(omega(Y)) - Y(omega(X)) - omega([X, Y]).  Classes with an
explicit coframe evaluate it on explicit 1-forms.  The others only know
omega through the dual pairing, where omega(X_c) is a Kronecker delta and
omega([X, Y]) is the coefficient of the dual member in the expansion of
the bracket in the frame.
"""

import logging

from exprdag.identity import IdentityVerdict, identity_suite
from vfield.fields import lie_bracket

from .coframe import dualize

logger = logging.getLogger(__name__)


def cartan(omega, x, y, bracket=None):
    """X(omega(Y)) - Y(omega(X)) - omega([X, Y]) for an explicit 1-form."""
    bracket = lie_bracket(x, y) if bracket is None else bracket
    return x.apply(omega.pair(y)) - y.apply(omega.pair(x)) - omega.pair(bracket)


def coframe_structure(pipeline):
    return dualize(pipeline.structure, pipeline.coframe, pipeline.display_flips)


def _expected(structure, backend, omega, first, second):
    found = structure.coefficient(omega, first, second)
    return backend.zero() if found is None else backend.lift(found.value)


def duality_suite(pipeline):
    """Named residuals d omega(X, Y) minus the dualized coefficient, as DAG nodes."""
    structure = coframe_structure(pipeline)
    backend = pipeline.solve_backend
    frame = pipeline.frame
    dual = dict(zip(pipeline.members, pipeline.coframe))
    explicit = pipeline.explicit_coframe()
    named = {}
    for a, b in pipeline.structure.pairs():
        direct = pipeline.direct_bracket(a, b)
        expansion = None if explicit is not None else pipeline.solve(direct)
        for member, omega in dual.items():
            if explicit is not None:
                value = cartan(explicit[omega], frame[a], frame[b], direct)
            else:
                value = -expansion[member]
            residual = value - _expected(structure, backend, omega, dual[a], dual[b])
            named[f'd{omega}({a},{b})'] = backend.to_dag(residual)
    return named


def verify_duality(pipeline, n_points=None, seed=None, sampler=None, threads=None):
    """
    Test every coframe structure equation against the Cartan formula.

    Returns:
        One IdentityVerdict for the whole class; ``failures`` holds the
        failing ``(equation, failures)`` pairs.
    """
    named = duality_suite(pipeline)
    pending = {name: node for name, node in named.items() if not node.is_zero()}
    if not pending:
        logger.info('Class %s duality: every residual vanishes symbolically', pipeline.class_id)
        return IdentityVerdict(f'{pipeline.class_id} duality', True, 0)
    verdicts = identity_suite(pending, n_points, seed, sampler, threads)
    failing = [(v.name, v.failures) for v in verdicts if not v.holds]
    points = min(v.points_tested for v in verdicts)
    retries = max(v.retries for v in verdicts)
    return IdentityVerdict(f'{pipeline.class_id} duality', not failing, points, failing, retries)
