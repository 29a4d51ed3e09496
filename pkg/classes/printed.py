"""
Closed forms as they are displayed for each class.

These are transcriptions, built by polynomial arithmetic from the
determinants, and are compared against the bracket-derived objects rather
than used to produce them.
"""

from jetalg.coefficients import I, gaussian
from jetalg.jets import JETS, Coord
from jetalg.poly import Poly
from jetalg.rational import FactorHandle, RationalFn

from .determinants import phi

Z, ZBAR = Coord('z'), Coord('zbar')


def _u(k):
    return Coord('u', k)


# Class I

def class_i_ell_numerator(arity):
    """N with ell = N / (Delta^2 Deltabar^2)."""
    fzzb = phi(arity, z=1, zbar=1)
    fu = phi(arity, u=1)
    fz, fzb = phi(arity, z=1), phi(arity, zbar=1)
    fzu, fzbu = phi(arity, z=1, u=1), phi(arity, zbar=1, u=1)
    fuu = phi(arity, u=2)
    return (
        fzzb.scale(2)
        + (fzzb * fu * fu).scale(2)
        - (fzb * fzu).scale(2 * I)
        - (fu * fzb * fzu).scale(2)
        + (fz * fzbu).scale(2 * I)
        - (fu * fz * fzbu).scale(2)
        + (fz * fzb * fuu).scale(2)
    )


def class_i_p(arity):
    """
    The P numerator and denominator of the class I Lie structure.

    With Ntilde = N/2, D = 1 + phi_u^2 and w = I + phi_u:

        P = [D (w Ntilde_z - phi_z Ntilde_u) - Ntilde (w phi_zu - phi_z phi_uu)(I + 3 phi_u)]
            / [D w Ntilde]
    """
    ntilde = class_i_ell_numerator(arity).scale(gaussian((1, 2)))
    fu, fz = phi(arity, u=1), phi(arity, z=1)
    d = fu * fu + 1
    w = fu + I
    k = w * phi(arity, z=1, u=1) - fz * phi(arity, u=2)
    numerator = d * (w * ntilde.derive(Z) - fz * ntilde.derive(_u(0))) - ntilde * k * (fu.scale(3) + I)
    denominator = d * w * ntilde
    return numerator, denominator


def class_i_p_rational(arity):
    numerator, denominator = class_i_p(arity)
    return RationalFn(numerator) / RationalFn(denominator)


# Displayed class I P, transcribed as printed.  Factors are jet names: a run
# of z, zb and u derivative letters, so 'zzbu' is phi_{z zbar u} and 'u' is phi_u.
# The numerator is displayed stratum by stratum in powers of phi_u.

P_NUMERATOR_DISPLAYED = {
    0: (
        (I, 'zzzb'), (-1, 'zz zbu'), (1, 'zzb zu'), (I, 'z zzb uu'), (2 * I, 'z zb zuu'),
        (1, 'zzb zzu'), (I, 'zz zb uu'), (-1, 'z z zb uu'), (-2, 'z zzbu'),
        (-I, 'zzb zu zu'), (-I, 'z z zbuu'), (-I, 'z zbu zu'),
    ),
    1: (
        (-2 * I, 'zzb zzu'), (-4 * I, 'zzb zu'), (4, 'uu uu z z zb'), (3, 'z zzb uu'), (2, 'z zb zuu'),
        (-8 * I, 'zu z zb uu'), (4 * I, 'uu z z zbu'), (1, 'zzb'), (1, 'z z zbuu'), (-5, 'zzb zu zu'),
        (5, 'z zbu zu'), (1, 'zz zb uu'),
    ),
    2: (
        (-I, 'z zbu zu'), (-I, 'z z zbuu'), (-8, 'zu z zb uu'), (-4, 'z zzbu'), (-1, 'z z zb uu'),
        (-4, 'uu z z zbu'), (-2, 'zz zbu'), (I, 'zz zb uu'), (7 * I, 'zzb zu zu'),
        (I, 'z zzb uu'), (2 * I, 'zzzb'), (-2, 'zzb zu'), (2 * I, 'z zb zuu'),
    ),
    3: (
        (-4 * I, 'zzb zu'), (1, 'z z zbuu'), (-2 * I, 'zzb zzu'), (3, 'zzb zu zu'), (2, 'zzzb'),
        (5, 'z zbu zu'), (1, 'zz zb uu'), (2, 'z zb zuu'), (3, 'z zzb uu'),
    ),
    4: ((-2, 'z zzbu'), (-3, 'zzb zu'), (-1, 'zz zbu'), (-1, 'zzb zzu'), (I, 'zzzb')),
    5: ((1, 'zzzb'),),
}

# Third factor of the displayed denominator (1 + phi_u^2)(I + phi_u)(...)
P_DENOMINATOR_FACTOR_DISPLAYED = (
    (1, 'zzb'), (1, 'zzb u u'), (-I, 'zzb zu'), (-1, 'zzb zu u'), (I, 'z zbu'), (-1, 'z zbu u'), (1, 'z zb uu'),
)

# (printed monomial, meant monomial): phi_zzbar misprinted for phi_zbar and,
# once, for phi_zzzbar; phi_uu misprinted for phi_uuu
P_NUMERATOR_SLIPS = (
    ('zzb zzu', 'zb zzu'),
    ('zzb zu zu', 'zb zu zu'),
    ('zzb', 'zzzb'),
    ('z z zb uu', 'z z zb uuu'),
)

P_DENOMINATOR_SLIPS = (
    ('zzb zu', 'zb zu'),
    ('zzb zu u', 'zb zu u'),
)


def jet_product(arity, names):
    """Product of the jets named in ``names`` (space separated)."""
    out = Poly.one()
    for name in names.split():
        orders = {'z': 0, 'zbar': 0, 'u': 0}
        rest = name
        while rest:
            if rest.startswith('zb'):
                orders['zbar'] += 1
                rest = rest[2:]
            else:
                orders['z' if rest[0] == 'z' else 'u'] += 1
                rest = rest[1:]
        out = out * phi(arity, **orders)
    return out


def displayed(arity, terms):
    out = Poly()
    for coeff, names in terms:
        out = out + jet_product(arity, names).scale(coeff)
    return out


def correct_slips(poly, arity, slips):
    """Move the coefficient of each printed monomial onto the monomial that was meant."""
    for printed_names, meant_names in slips:
        printed_mono = jet_product(arity, printed_names)
        (mono, _), = printed_mono.terms.items()
        coeff = poly.terms.get(mono)
        if coeff:
            poly = poly - printed_mono.scale(coeff) + jet_product(arity, meant_names).scale(coeff)
    return poly


def class_i_p_displayed(arity, corrected=True):
    """
    The displayed P as ``(strata, denominator)``.

    ``strata[k]`` is the coefficient of phi_u^k in the numerator.  With
    ``corrected`` the slip tables are applied.
    """
    strata = {k: displayed(arity, terms) for k, terms in P_NUMERATOR_DISPLAYED.items()}
    factor = displayed(arity, P_DENOMINATOR_FACTOR_DISPLAYED)
    if corrected:
        strata = {k: correct_slips(poly, arity, P_NUMERATOR_SLIPS) for k, poly in strata.items()}
        factor = correct_slips(factor, arity, P_DENOMINATOR_SLIPS)
    fu = phi(arity, u=1)
    return strata, (fu * fu + 1) * (fu + I) * factor


def class_i_p_unprinted(arity):
    """
    (phi_u - I) Ntilde (w phi_zu - phi_z phi_uu).

    The displayed numerator is that of L(ell)/ell alone; this is the share of
    T(phi_z / (I + phi_u)) / ell over the same denominator.
    """
    ntilde = class_i_ell_numerator(arity).scale(gaussian((1, 2)))
    fu, fz = phi(arity, u=1), phi(arity, z=1)
    k = (fu + I) * phi(arity, z=1, u=1) - fz * phi(arity, u=2)
    return (fu - I) * ntilde * k


# Classes II and III1

def _conj_all(polys):
    return [p.conjugate() for p in polys]


def upsilon(delta, lambdas, k):
    """Numerator of the k-th u-component of T = I[L, Lbar] over Delta^2 Deltabar^2."""
    deltabar = delta.conjugate()
    lambdabars = _conj_all(lambdas)
    lam, lambar = lambdas[k], lambdabars[k]
    q = len(lambdas)
    dd = delta * deltabar
    out = (
        delta * dd * lambar.derive(Z)
        - delta * delta * deltabar.derive(Z) * lambar
        - deltabar * dd * lam.derive(ZBAR)
        + deltabar * deltabar * delta.derive(ZBAR) * lam
    )
    for j in range(q):
        uj = _u(j)
        out = (
            out
            + dd * lambdas[j] * lambar.derive(uj)
            - delta * lambdas[j] * deltabar.derive(uj) * lambar
            - dd * lambdabars[j] * lam.derive(uj)
            + deltabar * lambdabars[j] * delta.derive(uj) * lam
        )
    return out.scale(I)


def pi(delta, lambdas, upsilons, k):
    """Numerator of the k-th u-component of S = [L, T] over Delta^4 Deltabar^3."""
    deltabar = delta.conjugate()
    ups = upsilons[k]
    dd = delta * deltabar
    out = (
        delta * dd * ups.derive(Z)
        - (dd * delta.derive(Z) * ups).scale(2)
        - (delta * delta * deltabar.derive(Z) * ups).scale(2)
    )
    for j in range(len(lambdas)):
        uj = _u(j)
        lam_j = lambdas[j]
        out = (
            out
            + dd * lam_j * ups.derive(uj)
            - (deltabar * lam_j * delta.derive(uj) * ups).scale(2)
            - (delta * lam_j * deltabar.derive(uj) * ups).scale(2)
            - dd * upsilons[j] * lambdas[k].derive(uj)
            + deltabar * upsilons[j] * delta.derive(uj) * lambdas[k]
        )
    return out


def delta_delta_deltabar(delta):
    return delta * delta * delta.conjugate()


# rpl functions as displayed in terms of the fundamental functions.  ``l`` and
# ``lbar`` apply L and Lbar to a function; the arithmetic is that of the
# values passed in, so both the expanded and the DAG backends work.

def class_iii1_j_rpl(fundamentals, l, lbar):
    """J_rpl of [S, Sbar] = I J_rpl T + K_rpl S - Kbar_rpl Sbar (A is real)."""
    a, b, p, q, r = (fundamentals[n] for n in ('A', 'B', 'P', 'Q', 'R'))
    bbar, pbar, qbar, rbar = (x.conjugate() for x in (b, p, q, r))
    total = (
        lbar(lbar(p)) + l(l(pbar)) - lbar(l(a)) - l(lbar(a))
        + q * lbar(a) + qbar * l(a) + 2 * a * lbar(q) + 2 * a * l(qbar) + r * lbar(pbar) + rbar * l(p)
        + 2 * pbar * lbar(r) + 2 * p * l(rbar) - 2 * p * lbar(b) - 2 * pbar * l(bbar) - b * lbar(p) - bbar * l(pbar)
        - bbar * lbar(a) - b * l(a) - 2 * a * lbar(bbar) - 2 * a * l(b)
        - 2 * a * a - 2 * a * b * bbar - b * b * p - bbar * bbar * pbar - b * pbar * r - bbar * p * rbar
        + p * q * rbar + pbar * qbar * r
        + 2 * a * r * rbar + 2 * p * pbar + bbar * pbar * q + b * p * qbar
    )
    return total * gaussian((1, 2))


def class_iii1_k_rpl(fundamentals, l, lbar):
    """
    K_rpl of [S, Sbar].

    The displayed expression is the mean of the two Jacobi routes
    [T, [Lbar, S]] - [Lbar, [T, S]] and [L, [T, Sbar]] - [T, [L, Sbar]]
    divided by I; the factor I is restored here.
    """
    a, b, p, q, r = (fundamentals[n] for n in ('A', 'B', 'P', 'Q', 'R'))
    bbar, pbar, qbar, rbar = (x.conjugate() for x in (b, p, q, r))
    total = (
        lbar(lbar(q)) - lbar(l(b)) - l(lbar(b)) + l(l(rbar))
        + 2 * rbar * lbar(r) + r * lbar(rbar) + b * lbar(q) + 2 * l(pbar) + rbar * l(q) + 2 * q * l(rbar)
        + qbar * l(b) - q * lbar(b)
        + 2 * b * l(qbar) - 2 * lbar(a) - bbar * lbar(b) - 2 * b * lbar(bbar) - 3 * b * l(b)
        - 2 * rbar * l(bbar) - bbar * l(rbar)
        - 3 * a * b - b * b * q - bbar * bbar * rbar - 2 * b * b * bbar - bbar * pbar + a * qbar + pbar * q
        + q * q * rbar + b * q * qbar + b * r * rbar + 2 * p * rbar + qbar * r * rbar
    )
    return total * gaussian((1, 2)) * I


# Class III2 writes [Lbar, R] = H_rpl T + J_rpl S + K_rpl R.  The displayed
# forms hold on manifolds of the class, where B Bbar = 1 and Abar = -Bbar A;
# every A they show is read as Abar.

def class_iii2_k_rpl(fundamentals, l, lbar):
    a, b, g = (fundamentals[n] for n in ('A', 'B', 'G'))
    abar, bbar, gbar = a.conjugate(), b.conjugate(), g.conjugate()
    return 2 * b * lbar(bbar) + b * b * l(bbar) + b * lbar(bbar) + 2 * abar * b + gbar


def class_iii2_j_rpl(fundamentals, l, lbar):
    a, b, f, g = (fundamentals[n] for n in ('A', 'B', 'F', 'G'))
    abar, bbar, fbar, gbar = (x.conjugate() for x in (a, b, f, g))
    return (
        b * lbar(l(bbar)) + lbar(lbar(bbar))
        - 2 * b * b * l(bbar) * lbar(bbar) - b * b * b * l(bbar) * l(bbar) - 2 * b * b * l(bbar) * lbar(bbar)
        - 2 * abar * b * b * l(bbar) - b * l(bbar) * gbar - 2 * b * lbar(bbar) * lbar(bbar) - gbar * lbar(bbar)
        - 4 * abar * b * lbar(bbar) - 2 * abar * b * b * l(bbar) - 2 * abar * b * lbar(bbar)
        + 3 * lbar(abar) + b * l(abar)
        + bbar * fbar - 3 * abar * abar * b - 2 * abar * gbar
    )


def class_iii2_h_rpl(fundamentals, l, lbar, j_rpl, k_rpl):
    """
    H_rpl from the T coefficients of [L, Rbar] and of the conjugate of [Lbar, R].

    The displayed form carries the T coefficient of [L, Rbar] unconjugated
    and +K_rpl A A; here they are Xbar and -K_rpl Abar Abar.
    """
    a, b, e = (fundamentals[n] for n in ('A', 'B', 'E'))
    abar, bbar, ebar = a.conjugate(), b.conjugate(), e.conjugate()
    return (
        -abar * j_rpl - k_rpl * l(abar) - k_rpl * bbar * lbar(abar) - k_rpl * abar * abar
        + lbar(l(abar)) + bbar * lbar(lbar(abar))
        + lbar(bbar) * lbar(abar) + 2 * abar * lbar(abar) + bbar * bbar * ebar
    )


# Rigid collapses

def rigid_ell(arity):
    return phi(arity, z=1, zbar=1).scale(2)


def rigid_p(arity):
    return RationalFn.over(phi(arity, z=2, zbar=1), (FactorHandle('phi_zzbar', phi(arity, z=1, zbar=1)), 1))


def rigid_t(arity, k):
    return phi(arity, k + 1, z=1, zbar=1).scale(2)


def rigid_s(arity, k):
    return phi(arity, k + 1, z=2, zbar=1).scale(2)


def rigid_sbar(arity, k):
    return phi(arity, k + 1, z=1, zbar=2).scale(2)


def rigid_ts_determinant(arity):
    """4 (phi_{1,zzbar} phi_{2,zzzbar} - phi_{2,zzbar} phi_{1,zzzbar})."""
    return (
        phi(arity, 1, z=1, zbar=1) * phi(arity, 2, z=2, zbar=1)
        - phi(arity, 2, z=1, zbar=1) * phi(arity, 1, z=2, zbar=1)
    ).scale(4)


def phi_u_stratum(poly, arity, power):
    """Terms of ``poly`` in which phi_u appears to exactly ``power``."""
    target = JETS.id_of(arity.jet(u=1))
    return Poly({
        mono: coeff for mono, coeff in poly.terms.items()
        if dict(mono).get(target, 0) == power
    })
