"""
Search for low-degree polynomial models of the degenerate classes.

Candidates are enumerated in a fixed order and filtered by the rank chain
of the class; evaluation may run on several threads but results are
assembled in candidate order.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

import sympy

from classes.base import CLASS_ARITY
from crframes.conf import setting
from crframes.exceptions import DegenerateExpressionError, UsageError

from .phi import ConcretePhi, base_symbols, conjugate_polynomial
from .rank import RankChecker, rank_report

logger = logging.getLogger(__name__)

COEFFICIENTS = (sympy.Integer(1), sympy.Integer(-1), sympy.Rational(1, 2), sympy.Rational(3, 2), sympy.Integer(2))


@dataclass
class SearchResult:
    class_id: str
    tried: int = 0
    accepted: list = field(default_factory=list)
    rejected: int = 0


def _real_part(expr, arity):
    """expr + conj(expr), the real combination built on one monomial."""
    return sympy.expand(expr + conjugate_polynomial(expr, arity))


def iii2_candidates(max_terms=2, coefficients=COEFFICIENTS):
    """v1 = z zbar, v2 = z^2 zbar + z zbar^2 and v3 a real combination of degree 3 and 4 monomials."""
    arity = CLASS_ARITY['III2']
    symbols = list(base_symbols(arity).values())
    z, zbar = symbols[0], symbols[1]
    basis = []
    for a, b in ((2, 1), (3, 1), (2, 2)):
        monomial = z ** a * zbar ** b
        if a == b:
            basis.append(monomial)
        else:
            basis.append(_real_part(monomial, arity))
            basis.append(_real_part(sympy.I * monomial, arity))
    v1 = z * zbar
    v2 = z ** 2 * zbar + z * zbar ** 2
    for size in range(1, max_terms + 1):
        for chosen in combinations(basis, size):
            for coeffs in product(coefficients, repeat=size):
                v3 = sympy.expand(sum(c * e for c, e in zip(coeffs, chosen)))
                yield ConcretePhi('III2', (v1, v2, v3), name=f'v3 = {sympy.sstr(v3, order="lex")}')


def iv2_candidates(coefficients=COEFFICIENTS):
    """The trivial z1 zbar1, squared moduli |z1 + c m|^2 and z1 zbar1 plus one real cubic."""
    arity = CLASS_ARITY['IV2']
    symbols = base_symbols(arity)
    z1, z2, zbar1, zbar2 = (symbols[c] for c in arity.holomorphic + arity.antiholomorphic)
    yield ConcretePhi('IV2', (z1 * zbar1,), name='z1*zbar1')
    for monomial in (z2 ** 2, z1 * z2, z2 ** 3):
        for c in coefficients:
            f = z1 + c * monomial
            phi = sympy.expand(f * conjugate_polynomial(f, arity))
            yield ConcretePhi('IV2', (phi,), name=f'|{sympy.sstr(f, order="lex")}|^2')
    for monomial in (z1 ** 2 * zbar2, z2 ** 2 * zbar1, z1 * z2 * zbar1):
        for c in coefficients:
            phi = sympy.expand(z1 * zbar1 + c * _real_part(monomial, arity))
            yield ConcretePhi('IV2', (phi,), name=sympy.sstr(phi, order='lex'))


CANDIDATES = {'III2': iii2_candidates, 'IV2': iv2_candidates}


def search_models(class_id, limit=None, n_points=None, seed=None, threads=None, **options):
    """
    Args:
        class_id: III2 or IV2
        limit: stop after this many accepted models
        options: passed to the candidate generator (``max_terms``, ``coefficients``)

    Returns:
        SearchResult with the accepted ConcretePhi in candidate order.
    """
    if class_id not in CANDIDATES:
        raise UsageError(f'no model search for class {class_id}; available for {", ".join(CANDIDATES)}')
    threads = threads or setting('CRFRAMES_THREADS')
    checker = RankChecker(class_id)
    result = SearchResult(class_id)

    def check(phi):
        try:
            return rank_report(phi, n_points, seed, checker=checker).satisfied
        except DegenerateExpressionError:
            return False

    candidates = list(CANDIDATES[class_id](**options))
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for start in range(0, len(candidates), max(1, threads)):
            batch = candidates[start:start + max(1, threads)]
            for phi, accepted in zip(batch, pool.map(check, batch)):
                result.tried += 1
                if accepted:
                    result.accepted.append(phi)
                    logger.info('Model search %s: accepted %s', class_id, phi.name)
                else:
                    result.rejected += 1
                    logger.warning('Model search %s: rejected %s', class_id, phi.name)
            if limit is not None and len(result.accepted) >= limit:
                result.accepted = result.accepted[:limit]
                break
    return result
