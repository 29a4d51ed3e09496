"""
Structure calculus on a frame.

A combination is a mapping from member name to a function.  Brackets of
combinations follow from the Leibniz rule

    [c X, d Y] = c X(d) Y - d Y(c) X + c d [X, Y]

using only the part of the bracket table already known, and conjugation
uses each member's conjugate expansion.  This is how the rpl functions
that are only reachable through Jacobi identities are produced.
"""

import logging

from crframes.exceptions import ContractError

logger = logging.getLogger(__name__)


def _accumulate(out, name, value, backend):
    if backend.is_zero(value):
        return
    out[name] = out[name] + value if name in out else value


def combine(backend, *scaled):
    """Sum of ``(factor, combination)`` pairs."""
    out = {}
    for factor, combo in scaled:
        factor = backend.lift(factor)
        for name, value in combo.items():
            _accumulate(out, name, factor * value, backend)
    return {name: value for name, value in out.items() if not backend.is_zero(value)}


class FrameAlgebra:
    """
    Args:
        frame: ordered mapping of member name to VectorField (for member actions on functions)
        backend: the field backend of the coefficients
        conjugates: member name -> the conjugate member name, or a combination giving the conjugate
        act: ``act(name, f)`` applying a member to a function (defaults to the frame field)
    """

    def __init__(self, frame, backend, conjugates, act=None):
        self.frame = frame
        self._act = act
        self.backend = backend
        self.conjugates = conjugates
        self.known = {}

    def member(self, name):
        return {name: self.backend.one()}

    def set_bracket(self, a, b, combo):
        self.known[(a, b)] = combo

    def member_bracket(self, a, b):
        if a == b:
            return {}
        if (a, b) in self.known:
            return self.known[(a, b)]
        if (b, a) in self.known:
            return combine(self.backend, (-1, self.known[(b, a)]))
        ca, cb = self._single_conjugate(a), self._single_conjugate(b)
        if ca is not None and cb is not None:
            if (ca, cb) in self.known:
                return self.conjugate(self.known[(ca, cb)])
            if (cb, ca) in self.known:
                return combine(self.backend, (-1, self.conjugate(self.known[(cb, ca)])))
        raise ContractError(f'bracket [{a}, {b}] is not known to the frame algebra')

    def _single_conjugate(self, name):
        conj = self.conjugates.get(name)
        return conj if isinstance(conj, str) else None

    def conjugate_member(self, name):
        conj = self.conjugates[name]
        return self.member(conj) if isinstance(conj, str) else conj

    def act(self, name, f):
        if self._act is not None:
            return self._act(name, f)
        return self.frame[name].apply(f)

    def bracket(self, x, y):
        out = {}
        backend = self.backend
        for i, c in x.items():
            for j, d in y.items():
                _accumulate(out, j, c * self.act(i, d), backend)
                _accumulate(out, i, -(d * self.act(j, c)), backend)
                if i != j:
                    for k, e in self.member_bracket(i, j).items():
                        _accumulate(out, k, c * d * e, backend)
        return {name: value for name, value in out.items() if not backend.is_zero(value)}

    def conjugate(self, combo):
        out = {}
        for name, value in combo.items():
            for other, coeff in self.conjugate_member(name).items():
                _accumulate(out, other, value.conjugate() * coeff, self.backend)
        return out

    def coefficient(self, combo, name):
        return combo.get(name, self.backend.zero())
