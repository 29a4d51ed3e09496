"""
Expressing a vector field in a frame by Cramer's rule.

The solve is block structured.  Horizontal members (those with a z or zbar
component) are determined from the z/zbar block of the coordinates, then the
vertical members from the u block, optionally restricted to a subset of its
rows.  Whatever is left over on any coordinate is returned as the residual.
"""

import logging
from dataclasses import dataclass

from crframes.exceptions import ContractError, DegenerateFrameError

from .fields import VectorField

logger = logging.getLogger(__name__)


@dataclass
class FrameExpansion:
    coefficients: dict
    residual: VectorField

    def __getitem__(self, name):
        return self.coefficients[name]


def determinant(matrix, backend):
    """Laplace expansion along the first row, skipping zero entries."""
    size = len(matrix)
    if size == 0:
        return backend.one()
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = backend.zero()
    for col, entry in enumerate(matrix[0]):
        if backend.is_zero(entry):
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * determinant(minor, backend)
        total = total + term if col % 2 == 0 else total - term
    return total


def cramer(matrix, rhs, backend):
    """Solve ``matrix @ x = rhs``; raises DegenerateFrameError when the determinant is formally zero."""
    det = determinant(matrix, backend)
    if backend.is_zero(det):
        raise DegenerateFrameError('frame determinant vanishes identically')
    if len(matrix) == 1:
        return [rhs[0] / det]
    solution = []
    for col in range(len(matrix)):
        replaced = [row[:col] + [rhs[i]] + row[col + 1:] for i, row in enumerate(matrix)]
        numerator = determinant(replaced, backend)
        solution.append(backend.zero() if backend.is_zero(numerator) else numerator / det)
    return solution


def frame_solve(field, frame, vertical_rows=None):
    """
    Expand ``field`` in ``frame`` (an ordered mapping name -> VectorField).

    Args:
        field: the VectorField to express
        frame: ordered mapping of member name to VectorField
        vertical_rows: u coordinates used for the vertical solve (all of them by default)

    Returns:
        FrameExpansion with one coefficient per member and the residual field.
    """
    arity, backend = field.arity, field.backend
    names = list(frame)
    horizontal = [n for n in names if frame[n].is_horizontal()]
    vertical = [n for n in names if not frame[n].is_horizontal()]
    horizontal_rows = list(arity.holomorphic + arity.antiholomorphic)
    rows = list(vertical_rows) if vertical_rows is not None else list(arity.real)

    if len(horizontal) != len(horizontal_rows) and horizontal:
        raise ContractError(
            f'{len(horizontal)} horizontal members for {len(horizontal_rows)} horizontal coordinates'
        )
    if len(vertical) != len(rows):
        raise ContractError(f'{len(vertical)} vertical members for {len(rows)} solve rows')

    coefficients = {}
    remainder = field
    if horizontal:
        matrix = [[frame[n][c] for n in horizontal] for c in horizontal_rows]
        rhs = [field[c] for c in horizontal_rows]
        if all(backend.is_zero(value) for value in rhs):
            values = [backend.zero()] * len(horizontal)
        else:
            values = cramer(matrix, rhs, backend)
        for name, value in zip(horizontal, values):
            coefficients[name] = value
            if not backend.is_zero(value):
                remainder = remainder - frame[name].scale(value)

    if vertical:
        matrix = [[frame[n][c] for n in vertical] for c in rows]
        rhs = [remainder[c] for c in rows]
        if all(backend.is_zero(value) for value in rhs):
            values = [backend.zero()] * len(vertical)
        else:
            values = cramer(matrix, rhs, backend)
        for name, value in zip(vertical, values):
            coefficients[name] = value
            if not backend.is_zero(value):
                remainder = remainder - frame[name].scale(value)

    return FrameExpansion({name: coefficients[name] for name in names}, remainder)


def reassemble(expansion, frame):
    out = expansion.residual
    for name, value in expansion.coefficients.items():
        out = out + frame[name].scale(value)
    return out
