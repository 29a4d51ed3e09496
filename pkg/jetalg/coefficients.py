"""
Exact Gaussian-rational coefficients.

Every coefficient in the engine is an element of sympy's ``QQ_I`` domain.
This module holds the small helpers the rest of the code needs around it:
construction, conjugation, the canonical text form and random draws.
"""

import re

from sympy.polys.domains import QQ, QQ_I

from crframes.exceptions import ContractError

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)

_RATIONAL = r'\d+(?:/\d+)?'
_COMPLEX = re.compile(
    rf'^(?P<re>-?{_RATIONAL})(?:(?P<op>[+-])(?P<im>{_RATIONAL})\*I)?$'
)
_IMAGINARY = re.compile(rf'^(?P<sign>-?)(?P<im>{_RATIONAL})?\*?I$')


def gaussian(re_part=0, im_part=0):
    """Build ``re_part + im_part*i`` from ints, QQ elements or (num, den) pairs."""
    return QQ_I(_rational(re_part), _rational(im_part))


def _rational(value):
    if isinstance(value, tuple):
        return QQ(*value)
    return QQ.convert(value)


def coerce(value):
    """Accept an int, a QQ element or a QQ_I element."""
    if isinstance(value, type(ONE)):
        return value
    return QQ_I(_rational(value), 0)


def conj(c):
    return QQ_I(c.x, -c.y)


def leads_negative(c):
    """Sign shown in front of a term: the real part, or the imaginary part if the real one is zero."""
    if c.x:
        return c.x < 0
    return c.y < 0


def format_rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f'{q.numerator}/{q.denominator}'


def format_coefficient(c):
    """Canonical text: ``a``, ``a/b``, ``a+b*I``, ``a-b*I`` or ``b*I``."""
    if not c.y:
        return format_rational(c.x)
    if not c.x:
        return f'{format_rational(c.y)}*I'
    op = '+' if c.y > 0 else '-'
    return f'{format_rational(c.x)}{op}{format_rational(abs(c.y))}*I'


def _parse_rational(text):
    num, _, den = text.partition('/')
    if den and int(den) == 0:
        raise ContractError(f'zero denominator in coefficient {text!r}')
    return QQ(int(num), int(den or 1))


def parse_coefficient(text):
    text = text.strip()
    match = _COMPLEX.match(text)
    if match:
        re_part = _parse_rational(match['re'])
        im_part = QQ(0)
        if match['im']:
            im_part = _parse_rational(match['im'])
            if match['op'] == '-':
                im_part = -im_part
        return QQ_I(re_part, im_part)
    match = _IMAGINARY.match(text)
    if match:
        im_part = _parse_rational(match['im']) if match['im'] else QQ(1)
        if match['sign']:
            im_part = -im_part
        return QQ_I(0, im_part)
    raise ContractError(f'malformed coefficient {text!r}')


def random_rational(rng, height):
    """A rational p/q with |p| <= height and 1 <= q <= height."""
    return QQ(rng.randint(-height, height), rng.randint(1, height))


def random_real(rng, height):
    return QQ_I(random_rational(rng, height), 0)


def random_gaussian(rng, height):
    return QQ_I(random_rational(rng, height), random_rational(rng, height))
