"""
Class-membership rank checks on a concrete graphing function.

Ranks are exact ranks over QQ_I of the instantiated field collections at
random base points.  A class hypothesis is taken to hold generically when
the whole rank chain comes out as expected at every test point.
"""

import logging
import random
from dataclasses import dataclass, field

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from classes.base import get_pipeline
from crframes.conf import setting
from crframes.exceptions import DegenerateExpressionError, SingularPointError
from exprdag.evaluate import GaussianArithmetic, evaluate_many
from exprdag.nodes import leaves

from .instantiate import jet_values
from .points import BaseSampler

logger = logging.getLogger(__name__)

LEVI = 'Levi matrix'

CHAINS = {
    'I': ((('L', 'Lbar', 'T'), 3),),
    'II': ((('L', 'Lbar', 'T'), 3), (('L', 'Lbar', 'T', 'S'), 4)),
    'III1': (
        (('L', 'Lbar', 'T'), 3), (('L', 'Lbar', 'T', 'S'), 4), (('L', 'Lbar', 'T', 'S', 'Sbar'), 5),
    ),
    'III2': (
        (('L', 'Lbar', 'T'), 3), (('L', 'Lbar', 'T', 'S'), 4),
        (('L', 'Lbar', 'T', 'S', 'Sbar'), 4), (('L', 'Lbar', 'T', 'S', 'Sbar', 'R'), 5),
    ),
    'IV1': ((LEVI, 2), (('L1', 'L2', 'Lbar1', 'Lbar2', 'T'), 5)),
    'IV2': ((LEVI, 1), (('L1', 'L2', 'Lbar1', 'Lbar2', 'T'), 5)),
}


@dataclass
class RankReport:
    class_id: str
    expected: list
    points: list = field(default_factory=list)
    satisfied: bool = True
    witness: dict = None


def describe(collection):
    return collection if isinstance(collection, str) else ', '.join(collection)


def member_field(pipeline, name):
    """A frame or generator field on the DAG backend; barred names are conjugates."""
    package = pipeline.lazy_package
    found = package.field(name)
    if found is None and 'bar' in name:
        base = package.field(name.replace('bar', '', 1))
        if base is not None:
            found = base.conjugate()
    if found is None:
        found = pipeline.frame[name]
    return found.to_dag()


def _collection_entries(pipeline, collection):
    """Row-major DAG entries of one collection (fields as rows, coordinates as columns)."""
    if collection == LEVI:
        dets = pipeline.lazy_package.determinants
        p = pipeline.arity.p
        return [[dets[f'ell{j}{k}'] for k in range(1, p + 1)] for j in range(1, p + 1)]
    coords = pipeline.arity.coords
    return [[member_field(pipeline, name)[c] for c in coords] for name in collection]


def exact_rank(rows):
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ_I).rank()


class RankChecker:
    """The rank chain of a class as DAG matrices, evaluated on any concrete phi of the class."""

    def __init__(self, class_id, pipeline=None):
        self.class_id = class_id
        self.pipeline = pipeline or get_pipeline(class_id, backend='dag')
        self.chain = CHAINS[class_id]
        self.matrices = [_collection_entries(self.pipeline, c) for c, _ in self.chain]
        self.nodes = [entry for rows in self.matrices for row in rows for entry in row]
        self.jets = leaves(*self.nodes)

    def ranks_at(self, phi, point):
        """Ranks at a base point; raises SingularPointError when a frame denominator vanishes."""
        values = iter(evaluate_many(self.nodes, GaussianArithmetic(jet_values(phi, self.jets, point))))
        ranks = []
        for rows in self.matrices:
            numeric = [[next(values) for _ in row] for row in rows]
            ranks.append(exact_rank(numeric))
        return ranks


def rank_report(phi, n_points=None, seed=None, pipeline=None, checker=None):
    """
    Rank chain of ``phi`` at ``n_points`` admissible random base points.

    Violations are reported, not raised: the first failing point becomes
    the witness.
    """
    n_points = n_points or setting('CRFRAMES_RANK_POINTS')
    seed = setting('CRFRAMES_SEED') if seed is None else seed
    checker = checker or RankChecker(phi.class_id, pipeline)
    sampler = BaseSampler(phi)
    expected = [(describe(c), r) for c, r in checker.chain]
    report = RankReport(phi.class_id, expected)
    rng = random.Random(seed)
    retries = 0
    while len(report.points) < n_points:
        point = sampler.draw(rng, ())[0]
        try:
            ranks = checker.ranks_at(phi, point)
        except SingularPointError as exc:
            retries += 1
            logger.debug('Rank check: %s vanishes at a base point, redrawing', exc.factor)
            if retries > setting('CRFRAMES_RETRY_LIMIT'):
                raise DegenerateExpressionError(f'no admissible base point for {phi.name or phi.class_id}')
            continue
        entry = {'point': sampler.describe(point), 'ranks': ranks}
        report.points.append(entry)
        if report.satisfied and ranks != [r for _, r in checker.chain]:
            report.satisfied = False
            report.witness = entry
    logger.info('Rank chain of %s (class %s): %s', phi.name or 'phi', phi.class_id,
                'satisfied' if report.satisfied else f'violated, ranks {report.witness["ranks"]}')
    return report
