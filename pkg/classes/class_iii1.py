"""
Class III1: codimension-three submanifolds of C^4 whose frame is
{Sbar, S, T, Lbar, L} with S = [L, T] and Sbar its conjugate.

The five fundamental functions come from

    [Lbar, S] = A T + B S + Bbar Sbar        [L, S] = P T + Q S + R Sbar

E/F/G_rpl are the displayed expressions for [T, S], and J/K_rpl are obtained
from [S, Sbar] = [T, [Lbar, S]] - [Lbar, [T, S]] in the frame algebra.
"""

from functools import cached_property, partial

from jetalg.coefficients import I
from jetalg.jets import Coord
from jetalg.rational import FactorHandle, RationalFn
from vfield.backends import DAG, EXPANDED

from . import printed
from .algebra import FrameAlgebra, combine
from .base import ClassPipeline, register, term
from .determinants import determinant_generator


def u(k):
    return Coord('u', k)


@register
class ClassIII1(ClassPipeline):
    class_id = 'III1'
    members = ('Sbar', 'S', 'T', 'Lbar', 'L')
    coframe = ('sigmabar0', 'sigma0', 'rho0', 'zetabar0', 'zeta0')
    conjugate_members = {'Lbar': 'L', 'Sbar': 'S'}
    fundamental_names = ('A', 'B', 'P', 'Q', 'R')
    rpl_names = ('E_rpl', 'F_rpl', 'G_rpl', 'J_rpl', 'K_rpl')
    default_backend = 'dag'
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
        t = package.derived['T']
        if self.rigid:
            return {f'Upsilon{k + 1}': t[u(k)].num for k in range(self.arity.q)}
        delta = FactorHandle('Delta', package.determinants['Delta'])
        target = {delta: 2, delta.conjugate(): 2}
        return {
            f'Upsilon{k + 1}': t[u(k)].reduce_to_common_denominator(target).num
            for k in range(self.arity.q)
        }

    @cached_property
    def printed_upsilons(self):
        determinants = self.package.determinants
        lambdas = [determinants[f'Lambda{k + 1}'] for k in range(self.arity.q)]
        return [printed.upsilon(determinants['Delta'], lambdas, k) for k in range(self.arity.q)]

    def compute_fundamentals(self):
        f = self.frame
        lbar_s = self.solve(self.bracket(f['Lbar'], f['S']))
        l_s = self.solve(self.bracket(f['L'], f['S']))
        self.lbar_s_on_sbar = lbar_s['Sbar']
        return {
            'A': lbar_s['T'], 'B': lbar_s['S'],
            'P': l_s['T'], 'Q': l_s['S'], 'R': l_s['Sbar'],
        }

    @cached_property
    def algebra(self):
        a, b, p, q, r = (self.fundamentals[n] for n in self.fundamental_names)
        backend = self.solve_backend
        algebra = FrameAlgebra(self.frame, backend, {
            'L': 'Lbar', 'Lbar': 'L', 'T': 'T', 'S': 'Sbar', 'Sbar': 'S',
        }, act=self.apply)
        one = backend.one()
        algebra.set_bracket('Lbar', 'L', {'T': backend.lift(I)})
        algebra.set_bracket('L', 'T', {'S': one})
        algebra.set_bracket('Lbar', 'T', {'Sbar': one})
        algebra.set_bracket('Lbar', 'S', {'T': a, 'S': b, 'Sbar': b.conjugate()})
        algebra.set_bracket('L', 'S', {'T': p, 'S': q, 'Sbar': r})
        return algebra

    def compute_rpl(self):
        a, b, p, q, r = (self.fundamentals[n] for n in self.fundamental_names)
        abar, bbar, pbar, qbar, rbar = (x.conjugate() for x in (a, b, p, q, r))
        l = partial(self.apply, 'L')
        lbar = partial(self.apply, 'Lbar')
        e = (l(a) - lbar(p) + a * bbar + b * p - a * q - pbar * r) * I
        f = (l(b) - lbar(q) + a + b * bbar - r * rbar) * I
        g = (l(bbar) - lbar(r) + bbar * bbar + b * r - p - bbar * q - r * qbar) * I

        algebra = self.algebra
        algebra.set_bracket('T', 'S', {'T': e, 'S': f, 'Sbar': g})
        s_sbar = combine(
            self.solve_backend,
            (1, algebra.bracket(algebra.member('T'), algebra.known[('Lbar', 'S')])),
            (-1, algebra.bracket(algebra.member('Lbar'), algebra.known[('T', 'S')])),
        )
        self.s_sbar = s_sbar
        return {
            'E_rpl': e, 'F_rpl': f, 'G_rpl': g,
            'J_rpl': algebra.coefficient(s_sbar, 'T') * (-I),
            'K_rpl': algebra.coefficient(s_sbar, 'S'),
        }

    def table(self):
        a, b, p, q, r = (self.fundamentals[n] for n in self.fundamental_names)
        e, f, g, j, k = (self.rpl[n] for n in self.rpl_names)
        return {
            ('Sbar', 'S'): [
                term('T', '-I*J_rpl', j * (-I)), term('S', '-K_rpl', -k), term('Sbar', 'Kbar_rpl', k.conjugate()),
            ],
            ('Sbar', 'T'): [
                term('T', '-Ebar_rpl', -e.conjugate()), term('S', '-Gbar_rpl', -g.conjugate()),
                term('Sbar', '-Fbar_rpl', -f.conjugate()),
            ],
            ('Sbar', 'Lbar'): [
                term('T', '-Pbar', -p.conjugate()), term('S', '-Rbar', -r.conjugate()),
                term('Sbar', '-Qbar', -q.conjugate()),
            ],
            ('Sbar', 'L'): [term('T', '-A', -a), term('S', '-B', -b), term('Sbar', '-Bbar', -b.conjugate())],
            ('S', 'T'): [term('T', '-E_rpl', -e), term('S', '-F_rpl', -f), term('Sbar', '-G_rpl', -g)],
            ('S', 'Lbar'): [term('T', '-A', -a), term('S', '-B', -b), term('Sbar', '-Bbar', -b.conjugate())],
            ('S', 'L'): [term('T', '-P', -p), term('S', '-Q', -q), term('Sbar', '-R', -r)],
            ('T', 'Lbar'): [term('Sbar', '-1', -1)],
            ('T', 'L'): [term('S', '-1', -1)],
            ('Lbar', 'L'): [term('T', 'I', I)],
        }

    def identities(self, with_printed=True):
        a, b = self.fundamentals['A'], self.fundamentals['B']
        j, k = self.rpl['J_rpl'], self.rpl['K_rpl']
        out = {
            '[Lbar,S] on Sbar - Bbar': self.lbar_s_on_sbar - b.conjugate(),
            'A real': a - a.conjugate(),
            'J_rpl real': j - j.conjugate(),
            '[S,Sbar] on Sbar + Kbar_rpl': self.algebra.coefficient(self.s_sbar, 'Sbar') + k.conjugate(),
        }
        f = self.frame
        difference = self.bracket(f['Lbar'], f['S']) - self.bracket(f['L'], f['Sbar'])
        for coord in self.arity.coords:
            out[f'[Lbar,S] - [L,Sbar] {self.arity.name(coord)}'] = difference[coord]
        if with_printed and not self.rigid:
            delta = FactorHandle('Delta', self.package.determinants['Delta'])
            for index, upsilon in enumerate(self.printed_upsilons):
                expected = RationalFn.over(upsilon, (delta, 2), (delta.conjugate(), 2))
                out[f'Upsilon{index + 1} printed'] = self.to_dag(f['T'][u(index)]) - DAG.lift(expected)
            out.update(self.printed_rpl_residuals())
        return {name: self.to_dag(value) for name, value in out.items()}

    def printed_rpl_residuals(self):
        """Computed J/K_rpl minus their displayed expressions in A, B, P, Q, R."""
        l = partial(self.apply, 'L')
        lbar = partial(self.apply, 'Lbar')
        return {
            'J_rpl printed': self.rpl['J_rpl'] - printed.class_iii1_j_rpl(self.fundamentals, l, lbar),
            'K_rpl printed': self.rpl['K_rpl'] - printed.class_iii1_k_rpl(self.fundamentals, l, lbar),
        }

    def printed_checks(self):
        if not self.rigid or self.backend is not EXPANDED:
            return {}
        t, s = self.package.derived['T'], self.package.derived['S']
        sbar = s.conjugate()
        checks = {}
        for k in range(self.arity.q):
            checks[f'T rigid {k + 1}'] = t[u(k)] == printed.rigid_t(self.arity, k)
            checks[f'S rigid {k + 1}'] = s[u(k)] == printed.rigid_s(self.arity, k)
            checks[f'Sbar rigid {k + 1}'] = sbar[u(k)] == printed.rigid_sbar(self.arity, k)
        return checks
