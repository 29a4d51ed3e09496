"""
Class I: hypersurfaces u = phi(z, zbar, u) in C^2.

The frame is {T, Lbar, L} with T = I [L, Lbar] = ell d/du, and the one
fundamental function P is read off [L, T] = P T.
"""

import logging

from jetalg.coefficients import I
from jetalg.jets import Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn
from vfield.backends import DAG, EXPANDED
from vfield.forms import OneForm

from . import printed
from .base import ClassPipeline, register, term
from .determinants import determinant_generator

logger = logging.getLogger(__name__)

Z, ZBAR, U = Coord('z'), Coord('zbar'), Coord('u')


@register
class ClassI(ClassPipeline):
    class_id = 'I'
    members = ('T', 'Lbar', 'L')
    coframe = ('rho0', 'zetabar0', 'zeta0')
    conjugate_members = {'Lbar': 'L'}
    fundamental_names = ('P',)
    display_flips = (('zetabar0', 'zeta0'),)
    supports_rigid = True

    def build_generators(self, backend):
        generator, determinants = determinant_generator(self.arity, backend)
        return {'L': generator}, determinants

    def derive_fields(self, generators):
        l = generators['L']
        return {'T': self.bracket(l, l.conjugate()).scale(I)}

    def numerators(self, package):
        ell = package.derived['T'][U]
        if self.rigid:
            return {'ell': ell.num}
        delta = FactorHandle('Delta', package.determinants['Delta'])
        numerator, denominator = printed.class_i_p(self.arity)
        return {
            'ell': ell.reduce_to_common_denominator({delta: 2, delta.conjugate(): 2}).num,
            'P_numerator': numerator,
            'P_denominator': denominator,
        }

    def compute_fundamentals(self):
        expansion = self.solve(self.bracket(self.frame['L'], self.frame['T']))
        return {'P': expansion['T']}

    def table(self):
        p = self.fundamentals['P']
        pbar = p.conjugate()
        return {
            ('T', 'Lbar'): [term('T', '-Pbar', -pbar)],
            ('T', 'L'): [term('T', '-P', -p)],
            ('Lbar', 'L'): [term('T', 'I', I)],
        }

    def printed_p(self):
        if self.rigid:
            return printed.rigid_p(self.arity)
        return printed.class_i_p_rational(self.arity)

    def printed_ell(self):
        if self.rigid:
            return RationalFn(printed.rigid_ell(self.arity))
        delta = FactorHandle('Delta', self.package.determinants['Delta'])
        return RationalFn.over(printed.class_i_ell_numerator(self.arity), (delta, 2), (delta.conjugate(), 2))

    def identities(self):
        ell = self.frame['T'][U]
        return {
            'ell printed': self.to_dag(ell) - DAG.lift(self.printed_ell()),
            'ell real': self.to_dag(ell - ell.conjugate()),
            'P printed': self.to_dag(self.fundamentals['P']) - DAG.lift(self.printed_p()),
        }

    def printed_checks(self):
        if self.backend is not EXPANDED:
            return {}
        checks = {
            'ell': self.frame['T'][U] == self.printed_ell(),
            'P': self.fundamentals['P'] == self.printed_p(),
        }
        if self.rigid:
            return checks
        checks.update(self.displayed_p_checks())
        return checks

    def displayed_p_checks(self):
        """Computed P numerator and denominator against the displayed ones, phi_u stratum by stratum."""
        arity = self.arity
        strata, denominator = printed.class_i_p_displayed(arity)
        numerator = self.package.numerators['P_numerator']
        unprinted = printed.class_i_p_unprinted(arity)
        fu = Poly.jet(arity.jet(u=1))
        checks = {}
        for power in range(len(strata)):
            expected = strata[power] * fu ** power + printed.phi_u_stratum(unprinted, arity, power)
            checks[f'P numerator phi_u^{power}'] = printed.phi_u_stratum(numerator, arity, power) == expected
        checks['P denominator'] = self.package.numerators['P_denominator'] == denominator
        for name, holds in checks.items():
            if not holds:
                logger.warning('Class I %s differs from its displayed form', name)
        return checks

    def explicit_coframe(self):
        """rho0 = (du - A dz - Abar dzbar) / ell, zeta0 = dz."""
        backend = self.solve_backend
        a = self.frame['L'][U]
        ell = self.frame['T'][U]
        rho0 = OneForm(self.arity, backend, {U: 1, Z: -a, ZBAR: -a.conjugate()}).scale(1 / ell)
        return {
            'rho0': rho0,
            'zetabar0': OneForm(self.arity, backend, {ZBAR: 1}),
            'zeta0': OneForm(self.arity, backend, {Z: 1}),
        }
