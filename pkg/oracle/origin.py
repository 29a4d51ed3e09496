"""
Exact evaluation of a frame at the origin of a normalized model.
"""

import logging
from dataclasses import dataclass, field

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from classes.base import get_pipeline
from crframes.exceptions import ClassHypothesisViolation, SingularPointError
from jetalg.coefficients import format_coefficient

from .instantiate import evaluate_at_base
from .points import origin
from .rank import member_field

logger = logging.getLogger(__name__)

# Vertical members whose u components form the determinant matrix at 0
VERTICAL_ROWS = {
    'I': ('T',),
    'II': ('T', 'S'),
    'III1': ('T', 'S', 'Sbar'),
    'III2': ('T', 'S', 'R'),
    'IV1': ('T',),
    'IV2': ('T',),
}


@dataclass
class OriginReport:
    class_id: str
    phi: list
    fields: dict = field(default_factory=dict)
    rows: tuple = ()
    matrix: list = field(default_factory=list)
    determinant: object = None
    levi: list = None

    def formatted_matrix(self):
        return [[format_coefficient(v) for v in row] for row in self.matrix]


def check_normalized(phi):
    """The lowest-order part of phi_1 must carry z1 zbar1."""
    arity = phi.arity
    z1, zbar1 = phi.symbols[arity.holomorphic[0]], phi.symbols[arity.antiholomorphic[0]]
    poly = sympy.Poly(phi.functions[0], *phi.symbols.values())
    if poly.is_zero or poly.coeff_monomial(z1 * zbar1) == 0:
        raise ClassHypothesisViolation(
            f'phi1 of {phi.name or "the model"} has no z1 zbar1 term; not a normalized model of class {phi.class_id}'
        )


def origin_frame_report(phi, pipeline=None):
    """Frame components at 0 and the determinant of the vertical members' u components."""
    check_normalized(phi)
    pipeline = pipeline or get_pipeline(phi.class_id, backend='dag')
    arity = pipeline.arity
    rows = VERTICAL_ROWS[phi.class_id]
    fields = {name: member_field(pipeline, name) for name in pipeline.members}
    nodes = [fields[name][coord] for name in fields for coord in arity.coords]
    levi_nodes = []
    if arity.p > 1:
        dets = pipeline.lazy_package.determinants
        levi_nodes = [dets[f'ell{j}{k}'] for j in (1, 2) for k in (1, 2)]
    try:
        values = iter(evaluate_at_base(nodes + levi_nodes, phi, origin(arity)))
    except SingularPointError as exc:
        raise ClassHypothesisViolation(f'{exc.factor} vanishes at the origin', witness={'point': 'origin'}) from exc

    report = OriginReport(phi.class_id, phi.texts(), rows=rows)
    for name in fields:
        report.fields[name] = {arity.name(coord): next(values) for coord in arity.coords}
    report.matrix = [[report.fields[name][arity.name(u)] for u in arity.real] for name in rows]
    if levi_nodes:
        report.levi = [[next(values), next(values)], [next(values), next(values)]]
    report.determinant = DomainMatrix(report.matrix, (len(rows), arity.q), QQ_I).det()
    logger.info('Class %s origin determinant: %s', phi.class_id, format_coefficient(report.determinant))
    if not report.determinant:
        raise ClassHypothesisViolation(
            f'the {", ".join(rows)} determinant of class {phi.class_id} vanishes at the origin',
            witness={'matrix': report.formatted_matrix(), 'rows': list(rows)},
        )
    return report

