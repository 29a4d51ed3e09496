"""
Canonical text form of polynomials.

Grammar::

    poly  := term ((' + ' | ' - ') term)*
    term  := coeff ('*' var '^' exp)*  |  var '^' exp ('*' var '^' exp)*
    var   := 'phi[' k ';' name '^' order (' ' name '^' order)* ']'
    coeff := a | a/b | a+b*I | a-b*I | b*I

Terms are sorted by ascending graded-lexicographic monomial order, so the
constant term comes first.  A coefficient of 1 is omitted in front of a
non-unit monomial.  The same grammar, with plain coordinate names as
variables, is used for concrete graphing-function files.
"""

import re

from crframes.exceptions import ContractError

from .coefficients import ONE, format_coefficient, leads_negative, parse_coefficient
from .jets import JETS, JetVar
from .poly import Poly, mono_mul

_SEPARATOR = re.compile(r'\s+([+-])\s+')
_JET = re.compile(r'^phi\[(\d+);([^\]]*)\]$')
_FACTOR = re.compile(r'^(?P<name>phi\[[^\]]*\]|[A-Za-z_][A-Za-z_0-9]*)(?:\^(?P<exp>\d+))?$')


def render_terms(items, render_factor):
    """Render ``(factors, coefficient)`` pairs already in display order."""
    if not items:
        return '0'
    out = []
    for index, (factors, coeff) in enumerate(items):
        negative = leads_negative(coeff)
        shown = -coeff if negative else coeff
        parts = [render_factor(name, exp) for name, exp in factors]
        if not parts or shown != ONE:
            parts.insert(0, format_coefficient(shown))
        body = '*'.join(parts)
        if index == 0:
            out.append(f'-{body}' if negative else body)
        else:
            out.append(f' - {body}' if negative else f' + {body}')
    return ''.join(out)


def canonical_text(poly):
    items = [
        ([(JETS.var(v).text(), e) for v, e in sorted(mono, key=lambda f: JETS.key(f[0]))], coeff)
        for mono, coeff in poly.sorted_terms()
    ]
    return render_terms(items, lambda name, exp: f'{name}^{exp}')


def split_terms(text):
    """Yield ``(sign, factor_tokens, coefficient)`` for each term of ``text``."""
    text = text.strip()
    if not text:
        raise ContractError('empty polynomial text')
    pieces = _SEPARATOR.split(text)
    signs = ['+'] + pieces[1::2]
    for sign, body in zip(signs, pieces[0::2]):
        body = body.strip()
        if body.startswith('-'):
            sign = '-' if sign == '+' else '+'
            body = body[1:]
        tokens = body.split('*')
        first_factor = next(
            (i for i, token in enumerate(tokens) if _FACTOR.match(token) and token != 'I'),
            len(tokens),
        )
        coeff_text = '*'.join(tokens[:first_factor])
        coeff = parse_coefficient(coeff_text) if coeff_text else ONE
        if sign == '-':
            coeff = -coeff
        factors = []
        for token in tokens[first_factor:]:
            match = _FACTOR.match(token)
            if not match:
                raise ContractError(f'malformed factor {token!r}')
            factors.append((match['name'], int(match['exp'] or 1)))
        yield factors, coeff


def parse_jet(name, arity):
    match = _JET.match(name)
    if not match:
        raise ContractError(f'malformed jet variable {name!r}')
    orders = {c: 0 for c in arity.coords}
    for part in match[2].split():
        coord_name, _, order = part.partition('^')
        orders[arity.coord(coord_name)] = int(order or 1)
    return JetVar(
        int(match[1]),
        tuple(orders[c] for c in arity.holomorphic),
        tuple(orders[c] for c in arity.antiholomorphic),
        tuple(orders[c] for c in arity.real),
    )


def parse_poly(text, arity):
    """Inverse of :func:`canonical_text`; the arity fixes the jet index lengths."""
    if text.strip() == '0':
        return Poly()
    pairs = []
    for factors, coeff in split_terms(text):
        mono = ()
        for name, exp in factors:
            var_id = JETS.id_of(parse_jet(name, arity))
            mono = mono_mul(mono, ((var_id, exp),))
        pairs.append((mono, coeff))
    return Poly.from_terms(pairs)
