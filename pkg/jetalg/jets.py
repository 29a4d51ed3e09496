"""
Coordinates, jet variables and the process-wide jet table.

A jet variable ``phi[k;z^a zbar^b u^l]`` stands for the mixed partial
derivative of the k-th graphing function.  Jet variables are interned to
small integers so polynomials can key their monomials on ints.
"""

import threading
from dataclasses import dataclass
from functools import cached_property

from crframes.exceptions import ArityError, ContractError

Z, ZBAR, U = 'z', 'zbar', 'u'


@dataclass(frozen=True, order=True)
class Coord:
    kind: str
    index: int = 0

    def conjugate(self):
        if self.kind == Z:
            return Coord(ZBAR, self.index)
        if self.kind == ZBAR:
            return Coord(Z, self.index)
        return self


@dataclass(frozen=True)
class Arity:
    """Numbers of complex coordinates (p) and real coordinates / graphing functions (q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ArityError(f'arity must be positive, got ({self.p}, {self.q})')

    @cached_property
    def coords(self):
        return (
            tuple(Coord(Z, i) for i in range(self.p))
            + tuple(Coord(ZBAR, i) for i in range(self.p))
            + tuple(Coord(U, k) for k in range(self.q))
        )

    @cached_property
    def holomorphic(self):
        return tuple(Coord(Z, i) for i in range(self.p))

    @cached_property
    def antiholomorphic(self):
        return tuple(Coord(ZBAR, i) for i in range(self.p))

    @cached_property
    def real(self):
        return tuple(Coord(U, k) for k in range(self.q))

    def check(self, coord):
        bound = self.q if coord.kind == U else self.p
        if coord.kind not in (Z, ZBAR, U) or not 0 <= coord.index < bound:
            raise ArityError(f'{coord} is outside arity ({self.p}, {self.q})')
        return coord

    def name(self, coord):
        count = self.q if coord.kind == U else self.p
        return coord.kind if count == 1 else f'{coord.kind}{coord.index + 1}'

    def coord(self, name):
        for c in self.coords:
            if self.name(c) == name:
                return c
        raise ArityError(f'unknown coordinate {name!r} for arity ({self.p}, {self.q})')

    def jet(self, func=1, z=0, zbar=0, u=0):
        """Shorthand for a jet variable; scalar orders are allowed when the count is one."""
        return JetVar(func, self._orders(z, self.p), self._orders(zbar, self.p), self._orders(u, self.q))

    @staticmethod
    def _orders(value, length):
        if isinstance(value, int):
            if length != 1 and value:
                raise ArityError('scalar order given for a multi-index')
            return (value,) * length if length == 1 else (0,) * length
        value = tuple(value)
        if len(value) != length:
            raise ArityError(f'expected {length} orders, got {len(value)}')
        return value


@dataclass(frozen=True)
class JetVar:
    func: int
    dz: tuple
    dzbar: tuple
    du: tuple

    def __post_init__(self):
        if self.func < 1 or min(self.dz + self.dzbar + self.du, default=0) < 0:
            raise ContractError(f'invalid jet variable {self!r}')

    @property
    def arity(self):
        return Arity(len(self.dz), len(self.du))

    @property
    def order(self):
        return sum(self.dz) + sum(self.dzbar) + sum(self.du)

    @property
    def sort_key(self):
        return (self.func, self.order, self.dz, self.dzbar, self.du)

    def prolong(self, coord):
        counts = {Z: self.dz, ZBAR: self.dzbar, U: self.du}
        orders = counts[coord.kind]
        if coord.index >= len(orders):
            raise ArityError(f'{coord} is outside the arity of {self.text()}')
        bumped = orders[:coord.index] + (orders[coord.index] + 1,) + orders[coord.index + 1:]
        if coord.kind == Z:
            return JetVar(self.func, bumped, self.dzbar, self.du)
        if coord.kind == ZBAR:
            return JetVar(self.func, self.dz, bumped, self.du)
        return JetVar(self.func, self.dz, self.dzbar, bumped)

    def conjugate(self):
        return JetVar(self.func, self.dzbar, self.dz, self.du)

    @property
    def is_rigid(self):
        return not any(self.du)

    def text(self):
        arity = self.arity
        parts = []
        for kind, orders in ((Z, self.dz), (ZBAR, self.dzbar), (U, self.du)):
            for index, order in enumerate(orders):
                if order:
                    parts.append(f'{arity.name(Coord(kind, index))}^{order}')
        return f'phi[{self.func};{" ".join(parts)}]'


class JetTable:
    """Interns jet variables and caches their prolongations and conjugates."""

    def __init__(self):
        self._vars = []
        self._ids = {}
        self._prolong = {}
        self._conj = {}
        self._lock = threading.Lock()

    def id_of(self, var):
        found = self._ids.get(var)
        if found is not None:
            return found
        with self._lock:
            found = self._ids.get(var)
            if found is None:
                found = len(self._vars)
                self._vars.append(var)
                self._ids[var] = found
            return found

    def var(self, ident):
        return self._vars[ident]

    def key(self, ident):
        return self._vars[ident].sort_key

    def prolong(self, ident, coord):
        cached = self._prolong.get((ident, coord))
        if cached is None:
            cached = self.id_of(self._vars[ident].prolong(coord))
            self._prolong[(ident, coord)] = cached
        return cached

    def conj(self, ident):
        cached = self._conj.get(ident)
        if cached is None:
            cached = self.id_of(self._vars[ident].conjugate())
            self._conj[ident] = cached
        return cached

    def __len__(self):
        return len(self._vars)


JETS = JetTable()
