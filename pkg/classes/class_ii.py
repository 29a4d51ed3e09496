"""
Class II: codimension-two submanifolds of C^3 with a rank-four bracket span.

Frame {S, T, Lbar, L} with T = I [L, Lbar] and S = [L, T].  The four
fundamental functions come from

    [Lbar, T] = A T + B S        [L, S] = P T + Q S

and the four rpl functions are explicit expressions in A, B, P, Q and their
L and Lbar derivatives.
"""

import logging
from functools import partial

from jetalg.coefficients import I
from jetalg.jets import Coord
from jetalg.rational import FactorHandle
from vfield.backends import EXPANDED

from . import printed
from .base import ClassPipeline, register, term
from .determinants import determinant_generator

logger = logging.getLogger(__name__)


def u(k):
    return Coord('u', k)


@register
class ClassII(ClassPipeline):
    class_id = 'II'
    members = ('S', 'T', 'Lbar', 'L')
    coframe = ('sigma0', 'rho0', 'zetabar0', 'zeta0')
    conjugate_members = {'Lbar': 'L'}
    fundamental_names = ('A', 'B', 'P', 'Q')
    rpl_names = ('E_rpl', 'F_rpl', 'G_rpl', 'H_rpl')
    display_flips = (('zetabar0', 'zeta0'),)
    supports_rigid = True
    lazy_fundamentals = True

    def build_generators(self, backend):
        generator, determinants = determinant_generator(self.arity, backend)
        return {'L': generator}, determinants

    def derive_fields(self, generators):
        l = generators['L']
        t = self.bracket(l, l.conjugate()).scale(I)
        return {'T': t, 'S': self.bracket(l, t)}

    def numerators(self, package):
        t, s = package.derived['T'], package.derived['S']
        out = {}
        if self.rigid:
            for k in range(self.arity.q):
                out[f'Upsilon{k + 1}'] = t[u(k)].num
                out[f'Pi{k + 1}'] = s[u(k)].num
            return out
        delta = FactorHandle('Delta', package.determinants['Delta'])
        deltabar = delta.conjugate()
        for k in range(self.arity.q):
            out[f'Upsilon{k + 1}'] = t[u(k)].reduce_to_common_denominator({delta: 2, deltabar: 2}).num
        for k in range(self.arity.q):
            out[f'Pi{k + 1}'] = s[u(k)].reduce_to_common_denominator({delta: 4, deltabar: 3}).num
        return out

    def compute_fundamentals(self):
        f = self.frame
        ab = self.solve(self.bracket(f['Lbar'], f['T']))
        pq = self.solve(self.bracket(f['L'], f['S']))
        return {'A': ab['T'], 'B': ab['S'], 'P': pq['T'], 'Q': pq['S']}

    def compute_rpl(self):
        a, b, p, q = (self.fundamentals[n] for n in ('A', 'B', 'P', 'Q'))
        l = partial(self.apply, 'L')
        lbar = partial(self.apply, 'Lbar')
        la, lb = l(a), l(b)
        return {
            'E_rpl': la + b * p,
            'F_rpl': lb + b * q + a,
            'G_rpl': (l(la) + 2 * p * lb - lbar(p) - q * la + b * l(p)) * I,
            'H_rpl': (l(lb) + q * lb + b * l(q) + 2 * la - lbar(q)) * I,
        }

    def table(self):
        a, b, p, q = (self.fundamentals[n] for n in ('A', 'B', 'P', 'Q'))
        e, f, g, h = (self.rpl[n] for n in self.rpl_names)
        return {
            ('S', 'T'): [term('T', '-G_rpl', -g), term('S', '-H_rpl', -h)],
            ('S', 'Lbar'): [term('T', '-E_rpl', -e), term('S', '-F_rpl', -f)],
            ('S', 'L'): [term('T', '-P', -p), term('S', '-Q', -q)],
            ('T', 'Lbar'): [term('T', '-A', -a), term('S', '-B', -b)],
            ('T', 'L'): [term('S', '-1', -1)],
            ('Lbar', 'L'): [term('T', 'I', I)],
        }

    def compute_normalizer(self):
        """
        ell = -1/B, for which N = L + ell Lbar satisfies [N, T] = 0 mod (Lbar, L, T).

        Returns the pair (ell, expansion of [N, T] in the frame).
        """
        f = self.frame
        ell = -1 / self.fundamentals['B']
        normalizer = f['L'] + f['Lbar'].scale(ell)
        return ell, self.solve(self.bracket(normalizer, f['T']))

    def identities(self):
        a, b, p, q = (self.fundamentals[n] for n in ('A', 'B', 'P', 'Q'))
        abar, bbar, pbar, qbar = (x.conjugate() for x in (a, b, p, q))
        l = partial(self.apply, 'L')
        lbar = partial(self.apply, 'Lbar')
        ell, normalized = self.compute_normalizer()
        out = {
            'B Bbar - 1': b * bbar - 1,
            'Abar + Bbar A': abar + bbar * a,
            'reality of L(A) + B P': (l(a) + b * p) - (
                lbar(abar) + a * lbar(bbar) + bbar * pbar + a * bbar * qbar + a * abar
            ),
            'reality of L(B) + B Q + A': (l(b) + b * q + a) - (b * lbar(bbar) + b * bbar * qbar + abar * b),
            'normalizer ell B + 1': ell * b + 1,
            'normalizer [N,T] on S': normalized['S'],
        }
        f = self.frame
        difference = self.bracket(f['Lbar'], f['S']) - self.bracket(f['L'], f['S'].conjugate())
        for coord in self.arity.coords:
            out[f'[Lbar,S] - [L,Sbar] {self.arity.name(coord)}'] = difference[coord]
        return {name: self.to_dag(value) for name, value in out.items()}

    def printed_checks(self):
        if self.backend is not EXPANDED:
            return {}
        package = self.package
        arity = self.arity
        checks = {}
        if self.rigid:
            t, s = package.derived['T'], package.derived['S']
            for k in range(arity.q):
                checks[f'T rigid {k + 1}'] = t[u(k)] == printed.rigid_t(arity, k)
                checks[f'S rigid {k + 1}'] = s[u(k)] == printed.rigid_s(arity, k)
                checks[f'Sbar rigid {k + 1}'] = s.conjugate()[u(k)] == printed.rigid_sbar(arity, k)
            determinant = t[u(0)] * s[u(1)] - t[u(1)] * s[u(0)]
            checks['T S determinant rigid'] = determinant == printed.rigid_ts_determinant(arity)
            checks['[S,T] rigid'] = self.bracket(s, t).is_zero()
            return checks
        delta = package.determinants['Delta']
        lambdas = [package.determinants[f'Lambda{k + 1}'] for k in range(arity.q)]
        upsilons = [printed.upsilon(delta, lambdas, k) for k in range(arity.q)]
        for k in range(arity.q):
            checks[f'Upsilon{k + 1}'] = package.numerators[f'Upsilon{k + 1}'] == upsilons[k]
        for k in range(arity.q):
            checks[f'Pi{k + 1}'] = package.numerators[f'Pi{k + 1}'] == printed.pi(delta, lambdas, upsilons, k)
        for name, holds in checks.items():
            if not holds:
                logger.warning('Class II %s differs from its printed form', name)
        return checks
