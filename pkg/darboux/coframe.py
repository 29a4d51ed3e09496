"""
Coframe structure equations dual to a Lie-structure table.

If [X_b, X_c] = sum_a A^a_bc X_a then the dual coframe satisfies
d omega^a = - sum_{b<c} A^a_bc omega^b ^ omega^c.  Terms are kept in the
row order of the table; a class may display some wedges the other way
round, in which case the term is swapped and its sign flipped.
"""

from dataclasses import dataclass, field

from classes.base import Coefficient, LieStructure


@dataclass
class WedgeTerm:
    coefficient: Coefficient
    wedge: tuple

    def oriented(self, first, second):
        """Coefficient of first ^ second carried by this term."""
        if self.wedge == (first, second):
            return self.coefficient
        if self.wedge == (second, first):
            return -self.coefficient
        return None


@dataclass
class CoframeStructure:
    class_id: str
    members: tuple
    equations: dict = field(default_factory=dict)

    def terms(self, omega):
        return self.equations.get(omega, [])

    def coefficient(self, omega, first, second):
        for term in self.terms(omega):
            found = term.oriented(first, second)
            if found is not None:
                return found
        return None


def dualize(structure, coframe, flips=()):
    """
    Args:
        structure: a LieStructure
        coframe: coframe names, dual to ``structure.members`` position by position
        flips: wedge pairs displayed in the opposite orientation
    """
    if len(coframe) != len(structure.members):
        raise ValueError('coframe and frame have different lengths')
    dual = dict(zip(structure.members, coframe))
    flips = set(flips)
    equations = {omega: [] for omega in coframe}
    for a, b in structure.pairs():
        for member, coeff in structure.terms(a, b):
            wedge = (dual[a], dual[b])
            coeff = -coeff
            if wedge in flips:
                wedge = wedge[::-1]
                coeff = -coeff
            equations[dual[member]].append(WedgeTerm(coeff, wedge))
    return CoframeStructure(structure.class_id, tuple(coframe), equations)


def undualize(coframe_structure, members):
    """Recover the LieStructure whose dual is ``coframe_structure``."""
    index = {omega: i for i, omega in enumerate(coframe_structure.members)}
    frame = dict(zip(coframe_structure.members, members))
    entries = {}
    for omega in coframe_structure.members:
        for term in coframe_structure.terms(omega):
            first, second = sorted(term.wedge, key=index.get)
            coeff = -term.oriented(first, second)
            entries.setdefault((frame[first], frame[second]), []).append((frame[omega], coeff))
    ordered = {}
    for pair in LieStructure(coframe_structure.class_id, tuple(members)).pairs():
        if pair in entries:
            ordered[pair] = sorted(entries[pair], key=lambda t: members.index(t[0]))
    return LieStructure(coframe_structure.class_id, tuple(members), ordered)


def _signed(label, first):
    negative = label.startswith('-')
    if negative:
        label = label[1:]
    sign = '-' if negative else ('' if first else '+')
    if label == '1':
        body = ''
    elif ('+' in label or '-' in label) and not label.startswith('('):
        body = f'({label})*'
    else:
        body = f'{label}*'
    return f'{sign}{body}' if first else f'{sign} {body}'


def render_equation(coframe_structure, omega):
    terms = coframe_structure.terms(omega)
    if not terms:
        return f'd{omega} = 0'
    parts = []
    for i, term in enumerate(terms):
        j, k = term.wedge
        parts.append(f'{_signed(term.coefficient.label, i == 0)}{j}^{k}')
    return f'd{omega} = ' + ' '.join(parts)


def render_text(coframe_structure):
    return '\n'.join(render_equation(coframe_structure, omega) for omega in coframe_structure.members)


def equations_data(coframe_structure):
    """Plain data for the JSON report, one entry per coframe member."""
    return [
        {
            'd_omega': omega,
            'terms': [
                {'coeff': term.coefficient.label, 'wedge': list(term.wedge)}
                for term in coframe_structure.terms(omega)
            ],
        }
        for omega in coframe_structure.members
    ]
