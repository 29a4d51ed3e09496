"""
Class III2: codimension-three submanifolds of C^4 whose bracket ranks are
3, 4, 4, 5, so that Sbar already lies in the span of T and S:

    Sbar = A T + B S        [L, R] = E T + F S + G R        with R = [L, S].

The twelve rpl functions are produced by the frame algebra from the Jacobi
chain [Lbar, S], Rbar, [Lbar, R], [S, T], [R, T], [R, S].  Every identity of
this class only holds on manifolds that satisfy the rank conditions, so its
suite is evaluated on a concrete graphing function.
"""

from functools import cached_property, partial

from jetalg.coefficients import I
from jetalg.jets import Coord

from . import printed
from .algebra import FrameAlgebra, combine
from .base import ClassPipeline, register, term
from .determinants import determinant_generator

HJK = ('H_rpl', 'J_rpl', 'K_rpl')
LMN = ('L_rpl', 'M_rpl', 'N_rpl')
OPQ = ('O_rpl', 'P_rpl', 'Q_rpl')
RST = ('R_rpl', 'S_rpl', 'T_rpl')


def u(k):
    return Coord('u', k)


def _coefficients(algebra, combo, names, sign=1):
    return {
        name: algebra.coefficient(combo, member) * sign
        for name, member in zip(names, ('T', 'S', 'R'))
    }


@register
class ClassIII2(ClassPipeline):
    class_id = 'III2'
    members = ('R', 'S', 'T', 'Lbar', 'L')
    coframe = ('tau0', 'sigma0', 'rho0', 'zetabar0', 'zeta0')
    conjugate_members = {'Lbar': 'L'}
    fundamental_names = ('A', 'B', 'E', 'F', 'G')
    rpl_names = HJK + LMN + OPQ + RST
    display_flips = (('zetabar0', 'zeta0'),)
    needs_phi = True
    default_backend = 'dag'
    lazy_fundamentals = True

    def build_generators(self, backend):
        generator, determinants = determinant_generator(self.arity, backend)
        return {'L': generator}, determinants

    def derive_fields(self, generators):
        l = generators['L']
        t = self.bracket(l, l.conjugate()).scale(I)
        s = self.bracket(l, t)
        return {'T': t, 'S': s, 'R': self.bracket(l, s)}

    def compute_fundamentals(self):
        f = self.frame
        # Sbar = A T + B S is solved on the (u1, u2) rows; the u3 row is left as a residual
        sbar = self.solve(f['S'].conjugate(), members=('S', 'T'), vertical_rows=(u(0), u(1)))
        self.sbar_residual = sbar.residual
        efg = self.solve(self.bracket(f['L'], f['R']))
        return {'A': sbar['T'], 'B': sbar['S'], 'E': efg['T'], 'F': efg['S'], 'G': efg['R']}

    @cached_property
    def algebra(self):
        a, b, e, f, g = (self.fundamentals[n] for n in self.fundamental_names)
        backend = self.solve_backend
        one = backend.one()
        sbar = {'T': a, 'S': b}
        algebra = FrameAlgebra(self.frame, backend, {'L': 'Lbar', 'Lbar': 'L', 'T': 'T', 'S': sbar})
        algebra.set_bracket('Lbar', 'L', {'T': backend.lift(I)})
        algebra.set_bracket('L', 'T', {'S': one})
        algebra.set_bracket('L', 'S', {'R': one})
        algebra.set_bracket('Lbar', 'T', sbar)
        algebra.set_bracket('L', 'R', {'T': e, 'S': f, 'R': g})
        # [Lbar, S] = [L, [Lbar, T]] since [Lbar, L] is a multiple of T
        algebra.set_bracket('Lbar', 'S', algebra.bracket(algebra.member('L'), sbar))
        # Rbar = [Lbar, Sbar]
        algebra.conjugates['R'] = algebra.bracket(algebra.member('Lbar'), sbar)
        return algebra

    def compute_rpl(self):
        algebra = self.algebra
        backend = self.solve_backend
        l, lbar, t = algebra.member('L'), algebra.member('Lbar'), algebra.member('T')

        lbar_r = algebra.conjugate(algebra.bracket(l, algebra.conjugate_member('R')))
        algebra.set_bracket('Lbar', 'R', lbar_r)

        s_t = combine(
            backend,
            (I, lbar_r),
            (-I, algebra.bracket(l, algebra.known[('Lbar', 'S')])),
        )
        algebra.set_bracket('S', 'T', s_t)

        r_t = combine(
            backend,
            (I, algebra.bracket(lbar, algebra.known[('L', 'R')])),
            (-I, algebra.bracket(l, lbar_r)),
        )
        algebra.set_bracket('R', 'T', r_t)

        r_s = combine(
            backend,
            (1, algebra.bracket(t, algebra.known[('L', 'R')])),
            (1, algebra.bracket(l, r_t)),
        )
        algebra.set_bracket('R', 'S', r_s)

        out = {}
        out.update(_coefficients(algebra, lbar_r, HJK))
        out.update(_coefficients(algebra, s_t, LMN, -1))
        out.update(_coefficients(algebra, r_t, OPQ, -1))
        out.update(_coefficients(algebra, r_s, RST, -1))
        return out

    def table(self):
        a, b, e, f, g = (self.fundamentals[n] for n in self.fundamental_names)
        rpl = self.rpl
        lbar_s = self.algebra.known[('Lbar', 'S')]

        def row(names):
            return [term(m, f'-{n}', -rpl[n]) for n, m in zip(names, ('T', 'S', 'R'))]

        return {
            ('R', 'S'): row(RST),
            ('R', 'T'): row(OPQ),
            ('R', 'Lbar'): row(HJK),
            ('R', 'L'): [term('T', '-E', -e), term('S', '-F', -f), term('R', '-G', -g)],
            ('S', 'T'): row(LMN),
            ('S', 'Lbar'): [
                term('T', '-L(A)', -self.algebra.coefficient(lbar_s, 'T')),
                term('S', '-(L(B)+A)', -self.algebra.coefficient(lbar_s, 'S')),
                term('R', '-B', -b),
            ],
            ('S', 'L'): [term('R', '-1', -1)],
            ('T', 'Lbar'): [term('T', '-A', -a), term('S', '-B', -b)],
            ('T', 'L'): [term('S', '-1', -1)],
            ('Lbar', 'L'): [term('T', 'I', I)],
        }

    def printed_rpl_residuals(self):
        """Computed H/J/K_rpl minus their displayed expressions in A, B, E, F, G."""
        l = partial(self.apply, 'L')
        lbar = partial(self.apply, 'Lbar')
        k = printed.class_iii2_k_rpl(self.fundamentals, l, lbar)
        j = printed.class_iii2_j_rpl(self.fundamentals, l, lbar)
        h = printed.class_iii2_h_rpl(self.fundamentals, l, lbar, j, k)
        return {
            'H_rpl printed': self.rpl['H_rpl'] - h,
            'J_rpl printed': self.rpl['J_rpl'] - j,
            'K_rpl printed': self.rpl['K_rpl'] - k,
        }

    def identities(self):
        a, b = self.fundamentals['A'], self.fundamentals['B']
        out = {
            'B Bbar - 1': b * b.conjugate() - 1,
            'Abar + Bbar A': a.conjugate() + b.conjugate() * a,
        }
        for coord, value in sorted(self.sbar_residual.components.items()):
            out[f'Sbar - (A T + B S) {self.arity.name(coord)}'] = value
        rbar = self.frame['R'].conjugate()
        for member, coeff in self.algebra.conjugate_member('R').items():
            rbar = rbar - self.frame[member].scale(coeff)
        for coord in self.arity.coords:
            out[f'Rbar expansion {self.arity.name(coord)}'] = rbar[coord]
        out.update(self.printed_rpl_residuals())
        return {name: self.to_dag(value) for name, value in out.items()}
