"""
Class IV2: hypersurfaces of C^3 whose Levi form has rank one everywhere.

The Levi kernel is spanned by K = k L1 + L2 with the very fundamental
function k = -ell_12 / ell_11.  The frame is {T, Lbar1, Kbar, L1, K}; the
table entries hold on manifolds of this class, which is why the suite is
evaluated on a concrete graphing function.
"""

from jetalg.coefficients import I
from vfield.forms import OneForm

from .base import register, term
from .class_iv1 import LeviPipeline, z, zbar


@register
class ClassIV2(LeviPipeline):
    class_id = 'IV2'
    members = ('T', 'Lbar1', 'Kbar', 'L1', 'K')
    coframe = ('rho0', 'kappabar0', 'zetabar0', 'kappa0', 'zeta0')
    conjugate_members = {'Lbar1': 'L1', 'Kbar': 'K'}
    fundamental_names = ('k', 'P')
    display_flips = (('kappabar0', 'kappa0'),)
    needs_phi = True

    def build_generators(self, backend):
        generators, determinants = super().build_generators(backend)
        k = -determinants['ell12'] / determinants['ell11']
        determinants['k'] = k
        generators['K'] = generators['L1'].scale(k) + generators['L2']
        return generators, determinants

    def compute_fundamentals(self):
        f = self.frame
        return {
            'k': self.package.determinants['k'],
            'P': self.solve(self.bracket(f['L1'], f['T']))['T'],
        }

    def derivatives_of_k(self):
        k = self.fundamentals['k']
        kbar = k.conjugate()
        return {
            'L1(k)': self.apply('L1', k),
            'Lbar1(k)': self.apply('Lbar1', k),
            'T(k)': self.apply('T', k),
            'L1(kbar)': self.apply('L1', kbar),
            'Lbar1(kbar)': self.apply('Lbar1', kbar),
            'T(kbar)': self.apply('T', kbar),
        }

    def table(self):
        p = self.fundamentals['P']
        d = self.derivatives_of_k()
        return {
            ('T', 'Lbar1'): [term('T', '-Pbar', -p.conjugate())],
            ('T', 'Kbar'): [
                term('T', 'Lbar1(kbar)', d['Lbar1(kbar)']), term('Lbar1', 'T(kbar)', d['T(kbar)']),
            ],
            ('T', 'L1'): [term('T', '-P', -p)],
            ('T', 'K'): [term('T', 'L1(k)', d['L1(k)']), term('L1', 'T(k)', d['T(k)'])],
            ('Lbar1', 'Kbar'): [term('Lbar1', 'Lbar1(kbar)', d['Lbar1(kbar)'])],
            ('Lbar1', 'L1'): [term('T', 'I', I)],
            ('Lbar1', 'K'): [term('L1', 'Lbar1(k)', d['Lbar1(k)'])],
            ('Kbar', 'L1'): [term('Lbar1', '-L1(kbar)', -d['L1(kbar)'])],
            ('L1', 'K'): [term('L1', 'L1(k)', d['L1(k)'])],
        }

    def identities(self):
        k = self.fundamentals['k']
        out = {
            'K(kbar)': self.apply('K', k.conjugate()),
            'Kbar(k)': self.apply('Kbar', k),
            'Levi determinant': self.levi(1, 1) * self.levi(2, 2) - self.levi(1, 2) * self.levi(2, 1),
            'P printed': self.fundamentals['P'] - self.printed_p(1),
        }
        return {name: self.to_dag(value) for name, value in out.items()}

    def explicit_coframe(self):
        """rho0 as for class IV1, kappa0 = dz1 - k dz2, zeta0 = dz2."""
        backend = self.solve_backend
        k = self.fundamentals['k']
        kappa0 = OneForm(self.arity, backend, {z(0): 1, z(1): -k})
        zeta0 = OneForm(self.arity, backend, {z(1): 1})
        return {
            'rho0': self.rho0(),
            'kappabar0': kappa0.conjugate(),
            'zetabar0': zeta0.conjugate(),
            'kappa0': kappa0,
            'zeta0': zeta0,
        }
