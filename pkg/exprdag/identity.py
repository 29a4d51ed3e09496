"""
Randomized identity testing of DAG expressions.

An expression is declared identically zero when it evaluates to exactly 0
at ``n`` admissible points drawn from a seeded generator.  Points at which a
denominator vanishes are skipped and redrawn, up to a fixed retry limit.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from crframes.conf import setting
from crframes.exceptions import DegenerateExpressionError, SingularPointError
from jetalg.coefficients import random_real

from .evaluate import GaussianArithmetic, evaluate_many
from .nodes import leaves

logger = logging.getLogger(__name__)


@dataclass
class IdentityVerdict:
    name: str
    holds: bool
    points_tested: int
    failures: list = field(default_factory=list)
    retries: int = 0


class JetSampler:
    """Independent real rational values for every jet variable."""

    def __init__(self, height=None):
        self.height = height or setting('CRFRAMES_JET_HEIGHT')

    def draw(self, rng, jets):
        point = {var: random_real(rng, self.height) for var in jets}
        return point, point

    def arithmetic(self, point):
        return GaussianArithmetic(point)

    def describe(self, point):
        return {var.text(): value for var, value in point.items()}


def _candidate_values(exprs, sampler, candidate):
    point, context = candidate
    try:
        values = evaluate_many(exprs, sampler.arithmetic(context))
    except SingularPointError as exc:
        logger.debug('Singular point (%s vanishes), redrawing', exc.factor)
        return None
    return point, values


def identity_suite(named, n_points=None, seed=None, sampler=None, threads=None):
    """
    Test many named expressions on one shared sequence of points.

    Args:
        named: ordered mapping of name to DAG node
        n_points: number of admissible points (default CRFRAMES_POINTS)
        seed: generator seed (default CRFRAMES_SEED)
        sampler: point source, a JetSampler unless the caller instantiates on a concrete manifold

    Returns:
        A list of IdentityVerdict in the order of ``named``.
    """
    n_points = n_points or setting('CRFRAMES_POINTS')
    seed = setting('CRFRAMES_SEED') if seed is None else seed
    sampler = sampler or JetSampler()
    threads = threads or setting('CRFRAMES_THREADS')
    retry_limit = setting('CRFRAMES_RETRY_LIMIT')
    if n_points < 1:
        raise ValueError('n_points must be at least 1')

    names = list(named)
    exprs = [named[name] for name in names]
    jets = leaves(*exprs)
    rng = random.Random(seed)
    failures = {name: [] for name in names}
    accepted = 0
    retries = 0
    # consecutive singular draws since the last admissible point
    streak = 0

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while accepted < n_points:
            batch = [sampler.draw(rng, jets) for _ in range(max(1, threads))]
            if pool is not None:
                results = list(pool.map(lambda cand: _candidate_values(exprs, sampler, cand), batch))
            else:
                results = [_candidate_values(exprs, sampler, cand) for cand in batch]
            for result in results:
                if accepted == n_points:
                    break
                if result is None:
                    retries += 1
                    streak += 1
                    if streak > retry_limit:
                        raise DegenerateExpressionError(
                            f'no admissible point after {retry_limit} retries for {", ".join(names)}'
                        )
                    continue
                point, values = result
                accepted += 1
                streak = 0
                for name, value in zip(names, values):
                    if value:
                        failures[name].append((sampler.describe(point), value))
    finally:
        if pool is not None:
            pool.shutdown()

    verdicts = [
        IdentityVerdict(name, not failures[name], accepted, failures[name], retries)
        for name in names
    ]
    for verdict in verdicts:
        logger.info('Identity %s: %s at %d points', verdict.name,
                    'holds' if verdict.holds else 'FAILS', verdict.points_tested)
    return verdicts


def identity_test(expr, n_points=None, seed=None, sampler=None, name='expr'):
    return identity_suite({name: expr}, n_points, seed, sampler)[0]
