"""
Concrete polynomial graphing functions.

A phi file holds one real polynomial per line in the base coordinates of
the class (``z``, ``zbar``, ``u`` or ``u1..u3``, ``z1, z2, zbar1, zbar2``).
Text after ``#`` is a comment and a line may start with a ``v1 =`` style
label.  Coefficients are Gaussian rationals written with ``I``.
"""

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import sympy
from rest_framework import serializers
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import QQ, QQ_I, ZZ, ZZ_I

from classes.base import CLASS_ARITY, CLASS_IDS
from jetalg.jets import U, Z, ZBAR, Coord

MODELS_DIR = Path(__file__).resolve().parent / 'models'

TRANSFORMATIONS = standard_transformations + (convert_xor,)


def base_symbols(arity):
    """Ordered mapping of coordinate to sympy Symbol, named as in the arity."""
    return {coord: sympy.Symbol(arity.name(coord)) for coord in arity.coords}


def conjugate_polynomial(expr, arity):
    """Conjugate the coefficients and exchange z with zbar."""
    symbols = base_symbols(arity)
    swapped = [symbols[coord.conjugate()] for coord in symbols]
    poly = sympy.Poly(expr, *symbols.values())
    return sympy.Add(*(
        sympy.conjugate(coeff) * sympy.Mul(*(s ** e for s, e in zip(swapped, monom)))
        for monom, coeff in poly.terms()
    ))


def strip_line(line):
    line = line.split('#', 1)[0].strip()
    if '=' in line:
        line = line.split('=', 1)[1].strip()
    return line


def parse_polynomial(text, arity):
    symbols = base_symbols(arity)
    local = {str(s): s for s in symbols.values()}
    local['I'] = sympy.I
    return sympy.expand(parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS))


class PhiSerializer(serializers.Serializer):
    """
    Validates a graphing function set for a class.

    Each function must be a polynomial in the base coordinates with
    Gaussian-rational coefficients, real, and vanishing at the origin.
    """
    class_id = serializers.ChoiceField(choices=CLASS_IDS)
    functions = serializers.ListField(child=serializers.CharField(), allow_empty=False)

    def validate(self, attrs):
        arity = CLASS_ARITY[attrs['class_id']]
        functions = attrs['functions']
        if len(functions) != arity.q:
            raise serializers.ValidationError({
                'functions': f'class {attrs["class_id"]} needs {arity.q} graphing functions, got {len(functions)}'
            })
        symbols = list(base_symbols(arity).values())
        origin = {s: 0 for s in symbols}
        parsed = []
        for k, text in enumerate(functions, start=1):
            try:
                expr = parse_polynomial(text, arity)
            except (SyntaxError, TypeError, sympy.SympifyError) as exc:
                raise serializers.ValidationError({'functions': f'phi{k}: cannot parse {text!r} ({exc})'})
            if not expr.free_symbols <= set(symbols) or not expr.is_polynomial(*symbols):
                raise serializers.ValidationError({'functions': f'phi{k} is not a polynomial in {symbols}'})
            domain = sympy.Poly(expr, *symbols).domain if expr.free_symbols else ZZ
            if domain not in (ZZ, QQ, ZZ_I, QQ_I):
                raise serializers.ValidationError({'functions': f'phi{k} has non Gaussian-rational coefficients'})
            if expr.xreplace(origin) != 0:
                raise serializers.ValidationError({'functions': f'phi{k} does not vanish at the origin'})
            if sympy.expand(conjugate_polynomial(expr, arity) - expr) != 0:
                raise serializers.ValidationError({'functions': f'phi{k} is not real'})
            parsed.append(expr)
        attrs['parsed'] = parsed
        return attrs


@dataclass
class ConcretePhi:
    class_id: str
    functions: tuple
    name: str = ''

    @property
    def arity(self):
        return CLASS_ARITY[self.class_id]

    @cached_property
    def symbols(self):
        return base_symbols(self.arity)

    @cached_property
    def _derivatives(self):
        return {}

    def derivative(self, var):
        """The sympy polynomial standing for a jet variable."""
        found = self._derivatives.get(var)
        if found is None:
            expr = self.functions[var.func - 1]
            for kind, orders in ((Z, var.dz), (ZBAR, var.dzbar), (U, var.du)):
                for index, order in enumerate(orders):
                    if order:
                        expr = sympy.diff(expr, self.symbols[Coord(kind, index)], order)
            found = self._derivatives.setdefault(var, expr)
        return found

    def texts(self):
        return [sympy.sstr(f, order='lex') for f in self.functions]


def phi_from_texts(class_id, functions, name=''):
    serializer = PhiSerializer(data={'class_id': class_id, 'functions': list(functions)})
    serializer.is_valid(raise_exception=True)
    return ConcretePhi(class_id, tuple(serializer.validated_data['parsed']), name)


def read_phi_lines(text):
    return [line for line in (strip_line(raw) for raw in text.splitlines()) if line]


def load_phi(path, class_id):
    """Read and validate a phi file; raises serializers.ValidationError on bad input."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise serializers.ValidationError({'phi': f'cannot read {path}: {exc.strerror}'})
    return phi_from_texts(class_id, read_phi_lines(text), name=path.name)


def load_model(name, class_id):
    """A shipped model from ``oracle/models``."""
    return load_phi(MODELS_DIR / f'{name}.phi', class_id)
