"""
Rational functions with factored denominators.

The denominator is a multiset of named factor handles (Delta, Deltabar,
ell, ...).  No polynomial gcd is ever taken: common denominators are the
factor-wise maximum, and cancellation only happens between equal handles.
"""

from crframes.exceptions import ContractError, SingularPointError

from .coefficients import ONE, coerce
from .poly import Poly

_CONJUGATE_LABELS = {'Delta': 'Deltabar', 'Deltabar': 'Delta'}


class FactorHandle:
    """A named denominator factor.  Equality and hashing follow the polynomial only."""

    __slots__ = ('label', 'poly', '_conj', '_powers')

    def __init__(self, label, poly):
        if poly.is_zero():
            raise ContractError(f'denominator factor {label} is the zero polynomial')
        self.label = label
        self.poly = poly
        self._conj = None
        self._powers = {0: Poly.one(), 1: poly}

    def conjugate(self):
        if self._conj is None:
            conj_poly = self.poly.conjugate()
            if conj_poly == self.poly:
                self._conj = self
            else:
                label = _CONJUGATE_LABELS.get(self.label)
                if label is None:
                    label = self.label[:-3] if self.label.endswith('bar') else f'{self.label}bar'
                self._conj = FactorHandle(label, conj_poly)
                self._conj._conj = self
        return self._conj

    def power(self, exp):
        cached = self._powers.get(exp)
        if cached is None:
            cached = self.power(exp - 1) * self.poly
            self._powers[exp] = cached
        return cached

    def __eq__(self, other):
        return isinstance(other, FactorHandle) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f'FactorHandle({self.label})'


def custom(poly):
    return FactorHandle('Custom', poly)


def _den_product(den):
    out = Poly.one()
    for handle, exp in den.items():
        out = out * handle.power(exp)
    return out


def _lift(num, den, target):
    """Multiply ``num`` by the quotient ``target / den`` of factor multisets."""
    for handle, exp in target.items():
        extra = exp - den.get(handle, 0)
        if extra > 0:
            num = num * handle.power(extra)
    return num


def _lcm(a, b):
    out = dict(a)
    for handle, exp in b.items():
        if exp > out.get(handle, 0):
            out[handle] = exp
    return out


class RationalFn:
    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        self.num = num
        self.den = {h: e for h, e in (den or {}).items() if e} if not num.is_zero() else {}

    @classmethod
    def of(cls, value):
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, Poly):
            return cls(value)
        return cls(Poly.const(value))

    @classmethod
    def over(cls, num, *factors):
        """``num`` over the product of ``(handle, exp)`` pairs."""
        den = {}
        for handle, exp in factors:
            den[handle] = den.get(handle, 0) + exp
        return cls(num, den)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return not self.den

    def denominator(self):
        return _den_product(self.den)

    def denominator_pattern(self):
        return sorted(((h.label, e) for h, e in self.den.items()))

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __add__(self, other):
        other = RationalFn.of(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        target = _lcm(self.den, other.den)
        return RationalFn(_lift(self.num, self.den, target) + _lift(other.num, other.den, target), target)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalFn.of(other))

    def __rsub__(self, other):
        return RationalFn.of(other) - self

    def __mul__(self, other):
        other = RationalFn.of(other)
        if self.is_zero() or other.is_zero():
            return RationalFn(Poly())
        den = dict(self.den)
        for handle, exp in other.den.items():
            den[handle] = den.get(handle, 0) + exp
        return RationalFn(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFn.of(other)
        if other.is_zero():
            raise ContractError('division by the zero rational function')
        if self.is_zero():
            return self
        num = self.num
        den = dict(self.den)
        for handle, exp in other.den.items():
            net = den.get(handle, 0) - exp
            if net >= 0:
                den[handle] = net
            else:
                den[handle] = 0
                num = num * handle.power(-net)
        if other.num.is_constant():
            num = num.scale(ONE / other.num.constant_value())
        elif num == other.num:
            num = Poly.one()
        else:
            divisor = custom(other.num)
            den[divisor] = den.get(divisor, 0) + 1
        return RationalFn(num, den)

    def __rtruediv__(self, other):
        return RationalFn.of(other) / self

    def scale(self, value):
        return RationalFn(self.num.scale(coerce(value)), self.den)

    def derive(self, coord):
        """Quotient rule with the minimal factored denominator den * prod(F)."""
        if not self.den:
            return RationalFn(self.num.derive(coord))
        handles = list(self.den)
        result = self.num.derive(coord)
        for handle in handles:
            result = result * handle.poly
        for i, handle in enumerate(handles):
            term = self.num * handle.poly.derive(coord)
            for j, other in enumerate(handles):
                if j != i:
                    term = term * other.poly
            result = result - term.scale(self.den[handle])
        den = {h: e + 1 for h, e in self.den.items()}
        return RationalFn(result, den)

    def conjugate(self):
        return RationalFn(self.num.conjugate(), {h.conjugate(): e for h, e in self.den.items()})

    def rigidify(self):
        """Drop every u-dependent jet; factors that become constant fold into the numerator."""
        num = self.num.rigidify()
        den = {}
        for handle, exp in self.den.items():
            poly = handle.poly.rigidify()
            if poly.is_constant():
                num = num.scale(ONE / poly.constant_value() ** exp)
            else:
                handle = FactorHandle(handle.label, poly)
                den[handle] = den.get(handle, 0) + exp
        return RationalFn(num, den)

    def reduce_to_common_denominator(self, target):
        """Rewrite over ``target`` (a handle -> exponent map) which must be divisible by our denominator."""
        for handle, exp in self.den.items():
            if target.get(handle, 0) < exp:
                raise ContractError(
                    f'target denominator is not divisible by {handle.label}^{exp}'
                )
        return RationalFn(_lift(self.num, self.den, target), dict(target))

    def evaluate(self, point):
        value = self.num.evaluate(point)
        for handle, exp in self.den.items():
            factor = handle.poly.evaluate(point)
            if not factor:
                raise SingularPointError(handle.label)
            value = value / factor ** exp
        return value

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, Poly):
                other = RationalFn(other)
            else:
                return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        target = _lcm(self.den, other.den)
        return _lift(self.num, self.den, target) == _lift(other.num, other.den, target)

    __hash__ = None

    def __repr__(self):
        pattern = ' '.join(f'{label}^{e}' for label, e in self.denominator_pattern())
        return f'RationalFn({self.num!r} / [{pattern}])'
