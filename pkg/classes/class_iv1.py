"""
Class IV1: Levi-nondegenerate hypersurfaces of C^3.

Two generators L1, L2 with A_j = -phi_{z_j} / (I + phi_u), the Levi entries
ell_jk = I (L_k(Abar_j) - Lbar_j(A_k)) and T = ell_11 d/du.  The fundamental
functions are A = ell_22/ell_11, B = ell_12/ell_11 and P_j with
[L_j, T] = P_j T.
"""

from jetalg.coefficients import I
from jetalg.jets import Coord
from vfield.forms import OneForm

from .base import ClassPipeline, register, term
from .determinants import levi_entries, levi_generators

U = Coord('u')


def z(j):
    return Coord('z', j)


def zbar(j):
    return Coord('zbar', j)


class LeviPipeline(ClassPipeline):
    """Shared construction of the two-generator classes."""

    def build_generators(self, backend):
        generators, determinants = levi_generators(self.arity, backend)
        for (j, k), value in levi_entries(generators, backend).items():
            determinants[f'ell{j}{k}'] = value
        return generators, determinants

    def derive_fields(self, generators):
        l1 = generators['L1']
        return {'T': self.bracket(l1, l1.conjugate()).scale(I)}

    def levi(self, j, k):
        return self.package.determinants[f'ell{j}{k}']

    def rho0(self):
        """(du - sum_j A_j dz_j - sum_j Abar_j dzbar_j) / ell_11."""
        package = self.package
        components = {U: 1}
        for j in range(self.arity.p):
            a_j = package.generators[f'L{j + 1}'][U]
            components[z(j)] = -a_j
            components[zbar(j)] = -a_j.conjugate()
        return OneForm(self.arity, self.solve_backend, components).scale(1 / self.levi(1, 1))

    def printed_p(self, j):
        """(L_j(ell_11) - ell_11 d/du(A_j)) / ell_11."""
        l_j = self.package.generators[f'L{j}']
        ell = self.levi(1, 1)
        return (l_j.apply(ell) - ell * l_j[U].derive(U)) / ell


@register
class ClassIV1(LeviPipeline):
    class_id = 'IV1'
    members = ('T', 'Lbar1', 'Lbar2', 'L1', 'L2')
    coframe = ('rho0', 'zetabar01', 'zetabar02', 'zeta01', 'zeta02')
    conjugate_members = {'Lbar1': 'L1', 'Lbar2': 'L2'}
    fundamental_names = ('A', 'B', 'P1', 'P2')
    display_flips = tuple(
        (f'zetabar0{j}', f'zeta0{k}') for j in (1, 2) for k in (1, 2)
    )

    def compute_fundamentals(self):
        f = self.frame
        ell11 = self.levi(1, 1)
        return {
            'A': self.levi(2, 2) / ell11,
            'B': self.levi(1, 2) / ell11,
            'P1': self.solve(self.bracket(f['L1'], f['T']))['T'],
            'P2': self.solve(self.bracket(f['L2'], f['T']))['T'],
        }

    def table(self):
        a, b, p1, p2 = (self.fundamentals[n] for n in self.fundamental_names)
        return {
            ('T', 'Lbar1'): [term('T', '-Pbar1', -p1.conjugate())],
            ('T', 'Lbar2'): [term('T', '-Pbar2', -p2.conjugate())],
            ('T', 'L1'): [term('T', '-P1', -p1)],
            ('T', 'L2'): [term('T', '-P2', -p2)],
            ('Lbar1', 'L1'): [term('T', 'I', I)],
            ('Lbar1', 'L2'): [term('T', 'I*B', b * I)],
            ('Lbar2', 'L1'): [term('T', 'I*Bbar', b.conjugate() * I)],
            ('Lbar2', 'L2'): [term('T', 'I*A', a * I)],
        }

    def identities(self):
        out = {
            'ell21 - conj(ell12)': self.levi(2, 1) - self.levi(1, 2).conjugate(),
            'ell11 real': self.levi(1, 1) - self.levi(1, 1).conjugate(),
            'A real': self.fundamentals['A'] - self.fundamentals['A'].conjugate(),
            'P1 printed': self.fundamentals['P1'] - self.printed_p(1),
            'P2 printed': self.fundamentals['P2'] - self.printed_p(2),
        }
        return {name: self.to_dag(value) for name, value in out.items()}

    def explicit_coframe(self):
        backend = self.solve_backend
        out = {'rho0': self.rho0()}
        for j in (1, 2):
            out[f'zetabar0{j}'] = OneForm(self.arity, backend, {zbar(j - 1): 1})
        for j in (1, 2):
            out[f'zeta0{j}'] = OneForm(self.arity, backend, {z(j - 1): 1})
        return out
