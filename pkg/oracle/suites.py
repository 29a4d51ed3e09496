"""
Identity suites evaluated on a concrete manifold.
"""

import logging
import random
from itertools import combinations

import sympy
from sympy.polys.domains import QQ_I

from classes.base import get_pipeline
from crframes.conf import setting
from crframes.exceptions import ClassHypothesisViolation, DegenerateExpressionError, SingularPointError
from darboux.duality import duality_suite
from exprdag.identity import IdentityVerdict, identity_suite
from vfield.fields import lie_bracket

from .instantiate import evaluate_at_base, instantiate
from .points import BaseSampler
from .rank import CHAINS, LEVI, member_field, rank_report

logger = logging.getLogger(__name__)


def check_class_hypothesis(phi, seed=None, pipeline=None):
    """
    The rank chain of ``phi``.

    Raises:
        ClassHypothesisViolation: when ``phi`` fails the rank chain of its class
    """
    report = rank_report(phi, seed=seed, pipeline=pipeline)
    if not report.satisfied:
        raise ClassHypothesisViolation(
            f'{phi.name or "phi"} is not of class {phi.class_id}: rank chain {report.witness["ranks"]}, '
            f'expected {[r for _, r in report.expected]}',
            witness=report.witness,
        )
    return report


def on_manifold_identity_suite(phi, n_points=None, seed=None, pipeline=None, include_duality=True, threads=None,
                               select=None):
    """
    The class suite (identities, table brackets and optionally the coframe
    duality) at random base points of ``phi``, restricted to the names in
    ``select`` when given.

    Raises:
        ClassHypothesisViolation: when ``phi`` fails the rank chain of its class
    """
    pipeline = pipeline or get_pipeline(phi.class_id)
    check_class_hypothesis(phi, seed, pipeline)
    named = pipeline.suite()
    if include_duality:
        named.update(duality_suite(pipeline))
    if select is not None:
        named = {name: node for name, node in named.items() if name in select}
    return identity_suite(named, n_points, seed, BaseSampler(phi), threads)


def default_pairs(class_id):
    """Pairs of the horizontal fields and T."""
    collection = next(c for c, _ in CHAINS[class_id] if c != LEVI)
    return list(combinations(collection, 2))


def sympy_bracket(x, y, symbols):
    """[X, Y] of two fields given as coordinate name -> sympy component."""
    names = list(symbols)
    out = {}
    for c in names:
        value = sympy.Integer(0)
        for d in names:
            if x.get(d, 0) != 0:
                value += x[d] * sympy.diff(y.get(c, 0), symbols[d])
            if y.get(d, 0) != 0:
                value -= y[d] * sympy.diff(x.get(c, 0), symbols[d])
        out[c] = value
    return out


def commutation_check(phi, pairs=None, n_points=10, seed=None, pipeline=None):
    """
    Compare the bracket computed on jets and then instantiated with the
    bracket of the instantiated fields, computed in the base coordinates.
    """
    seed = setting('CRFRAMES_SEED') if seed is None else seed
    pipeline = pipeline or get_pipeline(phi.class_id, backend='dag')
    arity = phi.arity
    symbols = {arity.name(coord): symbol for coord, symbol in phi.symbols.items()}
    sampler = BaseSampler(phi)
    verdicts = []
    for a, b in pairs or default_pairs(phi.class_id):
        x, y = member_field(pipeline, a), member_field(pipeline, b)
        direct = lie_bracket(x, y)
        base = sympy_bracket(instantiate(x, phi), instantiate(y, phi), symbols)
        components = [direct[coord] for coord in arity.coords]
        rng = random.Random(seed)
        failures, accepted, retries = [], 0, 0
        while accepted < n_points:
            point = sampler.draw(rng, ())[0]
            try:
                values = evaluate_at_base(components, phi, point)
            except SingularPointError:
                retries += 1
                if retries > setting('CRFRAMES_RETRY_LIMIT'):
                    raise DegenerateExpressionError(f'no admissible base point for [{a},{b}]')
                continue
            accepted += 1
            subs = {phi.symbols[coord]: QQ_I.to_sympy(value) for coord, value in point.items()}
            for coord, value in zip(arity.coords, values):
                expected = base[arity.name(coord)].xreplace(subs)
                if sympy.simplify(QQ_I.to_sympy(value) - expected) != 0:
                    failures.append((sampler.describe(point), arity.name(coord)))
        verdict = IdentityVerdict(f'[{a},{b}]', not failures, accepted, failures, retries)
        logger.info('Commutation %s on %s: %s', verdict.name, phi.name or 'phi', 'holds' if verdict.holds else 'FAILS')
        verdicts.append(verdict)
    return verdicts
