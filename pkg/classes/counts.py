"""
Monomial counts of the expanded determinant expressions.

The expressions are built from the printed closed forms, which the frame
pipelines check against the bracket-derived numerators.  Counts that differ
from the published figures are logged as warnings and still reported.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from crframes.conf import setting
from crframes.exceptions import ExpansionAbandoned, UsageError
from jetalg.jets import Coord
from jetalg.poly import ExpansionBudget

from . import printed
from .base import CLASS_ARITY, CLASS_IDS, get_pipeline
from .determinants import delta, lambdas

logger = logging.getLogger(__name__)

EXPECTED = {
    'I': {'P_numerator': 52},
    'II': {'Upsilon1': 355, 'Upsilon2': 355, 'Pi1': 24437, 'Pi2': 24437},
    'III1': {'DDDbar': 526, 'DzUpsilon1': 236068},
}

STRESS_ONLY = {'III1': ('Pi1', 'Pi2', 'Pi3')}


@dataclass
class CountResult:
    class_id: str
    expr: str
    monomials: int
    split: int = None
    expected: int = None
    abandoned: bool = False
    cap: int = None

    @property
    def matches(self):
        return self.expected is None or (not self.abandoned and self.monomials == self.expected)


def expressions(class_id):
    """Names accepted by ``count`` for a class, in report order."""
    q = CLASS_ARITY[class_id].q
    if class_id in ('IV1', 'IV2'):
        return ('Delta', 'ell11')
    names = ['Delta'] + [f'Lambda{k + 1}' for k in range(q)] + ['DDDbar']
    if class_id == 'I':
        names += ['ell', 'P_numerator', 'P_denominator']
    elif class_id == 'II':
        names += [f'Upsilon{k + 1}' for k in range(q)] + [f'Pi{k + 1}' for k in range(q)]
    elif class_id == 'III1':
        names += [f'Upsilon{k + 1}' for k in range(q)] + ['DzUpsilon1'] + list(STRESS_ONLY['III1'])
    return tuple(names)


@lru_cache(maxsize=None)
def _determinants(class_id):
    arity = CLASS_ARITY[class_id]
    return delta(arity), tuple(lambdas(arity))


@lru_cache(maxsize=None)
def _upsilon(class_id, k):
    d, lams = _determinants(class_id)
    return printed.upsilon(d, list(lams), k)


def build_expression(class_id, name):
    arity = CLASS_ARITY[class_id]
    if class_id in ('IV1', 'IV2'):
        pipeline = get_pipeline(class_id, backend='expanded')
        if name == 'Delta':
            return pipeline.package.determinants['Delta']
        return pipeline.levi(1, 1).num
    d, lams = _determinants(class_id)
    if name == 'Delta':
        return d
    if name.startswith('Lambda'):
        return lams[int(name[len('Lambda'):]) - 1]
    if name == 'DDDbar':
        return printed.delta_delta_deltabar(d)
    if name == 'ell':
        return printed.class_i_ell_numerator(arity)
    if name in ('P_numerator', 'P_denominator'):
        numerator, denominator = printed.class_i_p(arity)
        return numerator if name == 'P_numerator' else denominator
    if name.startswith('Upsilon'):
        return _upsilon(class_id, int(name[len('Upsilon'):]) - 1)
    if name == 'DzUpsilon1':
        return _upsilon(class_id, 0).derive(Coord('z'))
    if name.startswith('Pi'):
        upsilons = [_upsilon(class_id, k) for k in range(arity.q)]
        return printed.pi(d, list(lams), upsilons, int(name[len('Pi'):]) - 1)
    raise UsageError(f'unknown expression {name!r} for class {class_id}')


def count(class_id, name, stress=False, mem=None):
    """
    Expand one named expression and count its monomials.

    Stress-only expressions need ``stress``; they are expanded under a term
    cap derived from ``mem`` bytes and come back marked abandoned when the
    cap is hit.
    """
    if class_id not in CLASS_IDS:
        raise UsageError(f'unknown class {class_id!r}')
    if name not in expressions(class_id):
        raise UsageError(
            f'unknown expression {name!r} for class {class_id}; expected one of {", ".join(expressions(class_id))}'
        )
    expected = EXPECTED.get(class_id, {}).get(name)
    if name in STRESS_ONLY.get(class_id, ()):
        if not stress:
            raise UsageError(f'{name} of class {class_id} is only expanded in stress mode (--stress)')
        budget = ExpansionBudget.from_bytes(setting('CRFRAMES_STRESS_MEM') if mem is None else mem)
        try:
            with budget:
                poly = build_expression(class_id, name)
        except ExpansionAbandoned as exc:
            return CountResult(class_id, name, exc.partial_terms, expected=expected, abandoned=True, cap=exc.cap)
    else:
        poly = build_expression(class_id, name)

    return _logged(CountResult(class_id, name, poly.monomial_count(), poly.monomial_count_split(), expected))


def _logged(result):
    if result.matches:
        logger.info('Class %s %s: %d monomials', result.class_id, result.expr, result.monomials)
    else:
        logger.warning('Class %s %s: %d monomials, the published figure is %d (split count %d)',
                       result.class_id, result.expr, result.monomials, result.expected, result.split)
    return result


def numerator_counts(package):
    """Counts of the bracket-derived numerators of a frame package, against the published figures."""
    expected = {} if package.rigid else EXPECTED.get(package.class_id, {})
    return [
        _logged(CountResult(
            package.class_id, name, poly.monomial_count(), poly.monomial_count_split(), expected.get(name),
        ))
        for name, poly in package.numerators.items()
    ]
