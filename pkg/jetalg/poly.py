"""
Sparse polynomials over the Gaussian rationals in jet variables.

A monomial is a tuple of ``(jet_id, exponent)`` pairs sorted by jet id, and
a polynomial is a dict from monomial to a nonzero ``QQ_I`` coefficient.
Polynomials are treated as immutable once built.
"""

import contextvars
import logging
from concurrent.futures import ThreadPoolExecutor

from crframes.conf import setting
from crframes.exceptions import ContractError, ExpansionAbandoned

from .coefficients import ONE, ZERO, coerce, conj
from .jets import JETS, JetVar

logger = logging.getLogger(__name__)

UNIT = ()

_budget = contextvars.ContextVar('expansion_budget', default=None)


class ExpansionBudget:
    """
    Context manager capping the number of terms any product or sum may hold.

    Used by stress mode: the memory budget in bytes is turned into a term
    cap through the configured bytes-per-term estimate.
    """

    def __init__(self, cap):
        self.cap = cap
        self._token = None

    @classmethod
    def from_bytes(cls, mem_bytes):
        return cls(mem_bytes // max(1, setting('CRFRAMES_BYTES_PER_TERM')))

    def __enter__(self):
        self._token = _budget.set(self)
        return self

    def __exit__(self, *exc):
        _budget.reset(self._token)
        return False

    def check(self, size):
        if size > self.cap:
            logger.warning('Expansion abandoned at %d terms (cap %d)', size, self.cap)
            raise ExpansionAbandoned(size, self.cap)


def _check_budget(size):
    budget = _budget.get()
    if budget is not None:
        budget.check(size)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(mono):
    return sum(e for _, e in mono)


def mono_key(mono):
    """Graded-lexicographic key over the jet-variable total order."""
    factors = sorted((JETS.key(v), e) for v, e in mono)
    return (mono_degree(mono), tuple(factors))


def _accumulate(out, mono, coeff):
    prev = out.get(mono)
    if prev is None:
        out[mono] = coeff
        return
    total = prev + coeff
    if total:
        out[mono] = total
    else:
        del out[mono]


def _mul_chunk(items, other):
    out = {}
    for m1, c1 in items:
        for m2, c2 in other:
            _accumulate(out, mono_mul(m1, m2), c1 * c2)
    return out


class Poly:
    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, value):
        value = coerce(value)
        return cls({UNIT: value} if value else {})

    @classmethod
    def one(cls):
        return cls({UNIT: ONE})

    @classmethod
    def jet(cls, var, exp=1, coeff=ONE):
        if not isinstance(var, JetVar):
            raise ContractError(f'expected a JetVar, got {var!r}')
        coeff = coerce(coeff)
        if not coeff:
            return cls()
        return cls({((JETS.id_of(var), exp),): coeff})

    @classmethod
    def from_terms(cls, pairs):
        """Build from ``(monomial, coefficient)`` pairs, merging duplicates."""
        out = {}
        for mono, coeff in pairs:
            coeff = coerce(coeff)
            if coeff:
                _accumulate(out, mono, coeff)
        return cls(out)

    # Queries

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and UNIT in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ContractError('polynomial is not constant')
        return self.terms.get(UNIT, ZERO)

    def monomial_count(self):
        return len(self.terms)

    def monomial_count_split(self):
        """Count with real and imaginary coefficient parts as separate monomials."""
        return sum((1 if c.x else 0) + (1 if c.y else 0) for c in self.terms.values())

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def jet_ids(self):
        return {v for mono in self.terms for v, _ in mono}

    def jets(self):
        return sorted((JETS.var(v) for v in self.jet_ids()), key=lambda var: var.sort_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: mono_key(item[0]))

    # Arithmetic

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if len(self.terms) < len(other.terms):
            big, small = other, self
        else:
            big, small = self, other
        out = dict(big.terms)
        for m, c in small.terms.items():
            _accumulate(out, m, c)
        _check_budget(len(out))
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def scale(self, value):
        value = coerce(value)
        if not value:
            return Poly()
        if value == ONE:
            return self
        return Poly({m: c * value for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1 and UNIT in b:
            return self.scale(b[UNIT]) if b is other.terms else other.scale(b[UNIT])
        other_items = list(b.items())
        threads = setting('CRFRAMES_THREADS')
        if threads > 1 and len(a) * len(b) >= setting('CRFRAMES_PARALLEL_THRESHOLD'):
            out = self._parallel_mul(list(a.items()), other_items, threads)
        else:
            out = {}
            budget = _budget.get()
            for m1, c1 in a.items():
                for m2, c2 in other_items:
                    _accumulate(out, mono_mul(m1, m2), c1 * c2)
                if budget is not None:
                    budget.check(len(out))
        _check_budget(len(out))
        return Poly(out)

    __rmul__ = __mul__

    @staticmethod
    def _parallel_mul(items, other_items, threads):
        size = -(-len(items) // threads)
        chunks = [items[i:i + size] for i in range(0, len(items), size)]
        logger.debug('Partitioned product of %d x %d terms into %d chunks',
                     len(items), len(other_items), len(chunks))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(lambda chunk: _mul_chunk(chunk, other_items), chunks))
        out = partials[0]
        for partial in partials[1:]:
            for m, c in partial.items():
                _accumulate(out, m, c)
            _check_budget(len(out))
        return out

    def __pow__(self, exp):
        if not isinstance(exp, int) or exp < 0:
            raise ContractError('polynomial powers must be non-negative integers')
        result = Poly.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    # Calculus

    def derive(self, coord):
        """Total derivative along a base coordinate: each jet is prolonged by one index."""
        out = {}
        for mono, coeff in self.terms.items():
            for pos, (v, e) in enumerate(mono):
                w = JETS.prolong(v, coord)
                rest = mono[:pos] + mono[pos + 1:] if e == 1 else mono[:pos] + ((v, e - 1),) + mono[pos + 1:]
                _accumulate(out, mono_mul(rest, ((w, 1),)), coeff * coerce(e) if e != 1 else coeff)
        _check_budget(len(out))
        return Poly(out)

    def conjugate(self):
        out = {}
        for mono, coeff in self.terms.items():
            swapped = tuple(sorted((JETS.conj(v), e) for v, e in mono))
            out[swapped] = conj(coeff)
        return Poly(out)

    def rigidify(self):
        """Drop every monomial containing a jet with a u-derivative."""
        return Poly({
            m: c for m, c in self.terms.items()
            if all(JETS.var(v).is_rigid for v, _ in m)
        })

    def evaluate(self, point):
        """Exact value at a point mapping JetVar to QQ_I (missing jets are an error)."""
        values = {}
        total = ZERO
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in mono:
                value = values.get(v)
                if value is None:
                    var = JETS.var(v)
                    try:
                        value = point[var]
                    except KeyError:
                        raise ContractError(f'point does not cover {var.text()}') from None
                    values[v] = value
                term = term * value ** e
            total += term
        return total

    # Comparison

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .textio import canonical_text
        text = canonical_text(self)
        if len(text) > 120:
            text = text[:117] + '...'
        return f'Poly({text})'
