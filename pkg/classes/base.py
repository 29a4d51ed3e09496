"""
Common machinery of the six class pipelines.

A pipeline builds the intrinsic generators of its class, derives the
transversal fields by Lie brackets, solves the defining brackets for the
fundamental functions, builds the rpl functions and finally assembles the
complete Lie-structure table.  Every stage is computed once and cached on
the pipeline instance.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property

from crframes.exceptions import UsageError
from exprdag import nodes
from jetalg.jets import Arity
from jetalg.rational import RationalFn
from vfield.backends import DAG, EXPANDED, get_backend
from vfield.fields import VectorField, lie_bracket
from vfield.solve import frame_solve

logger = logging.getLogger(__name__)

CLASS_IDS = ('I', 'II', 'III1', 'III2', 'IV1', 'IV2')

CLASS_ARITY = {
    'I': Arity(1, 1),
    'II': Arity(1, 2),
    'III1': Arity(1, 3),
    'III2': Arity(1, 3),
    'IV1': Arity(2, 1),
    'IV2': Arity(2, 1),
}


@contextmanager
def stage(class_id, name):
    started = time.perf_counter()
    yield
    logger.info('Class %s: %s in %.2fs', class_id, name, time.perf_counter() - started)


def neg_label(label):
    return label[1:] if label.startswith('-') else f'-{label}'


@dataclass
class Coefficient:
    """A structure coefficient: its display label and its value as a field element."""

    label: str
    value: object

    def __neg__(self):
        return Coefficient(neg_label(self.label), -self.value)


@dataclass
class LieStructure:
    """
    Structure constants [X_a, X_b] = sum_c A^c_ab X_c for a < b in frame order.

    ``entries`` maps an ordered pair of member names to a list of
    ``(member, Coefficient)`` terms; a missing pair is a vanishing bracket.
    """

    class_id: str
    members: tuple
    entries: dict = field(default_factory=dict)

    def pairs(self):
        return [
            (a, b)
            for i, a in enumerate(self.members)
            for b in self.members[i + 1:]
        ]

    def terms(self, a, b):
        return self.entries.get((a, b), [])

    def coefficient(self, a, b, member):
        """A^member_ab, using antisymmetry for a pair given out of frame order."""
        if self.members.index(a) > self.members.index(b):
            found = self.coefficient(b, a, member)
            return -found if found is not None else None
        for name, coeff in self.terms(a, b):
            if name == member:
                return coeff
        return None


@dataclass
class FramePackage:
    class_id: str
    arity: Arity
    backend: object
    generators: dict
    derived: dict
    determinants: dict = field(default_factory=dict)
    numerators: dict = field(default_factory=dict)
    rigid: bool = False

    def field(self, name):
        if name in self.generators:
            return self.generators[name]
        if name in self.derived:
            return self.derived[name]
        return None


def term(member, label, value):
    return (member, Coefficient(label, value))


class ClassPipeline:
    """
    Subclasses set the class attributes and implement the build hooks.

    ``lazy_fundamentals`` classes solve for their fundamental functions on
    the DAG form of the frame, whatever backend the frame itself was built on.
    """

    class_id = None
    members = ()
    coframe = ()
    conjugate_members = {}
    fundamental_names = ()
    rpl_names = ()
    display_flips = ()
    needs_phi = False
    default_backend = 'expanded'
    supports_rigid = False
    lazy_fundamentals = False

    def __init__(self, backend='auto', rigid=False):
        self.arity = CLASS_ARITY[self.class_id]
        if rigid and not self.supports_rigid:
            raise UsageError(f'class {self.class_id} has no rigid package')
        if rigid:
            backend = 'expanded'
        self.backend = get_backend(self.default_backend if backend in (None, 'auto') else backend)
        self.rigid = rigid
        self._brackets = {}

    def __repr__(self):
        return f'{type(self).__name__}(backend={self.backend.name!r}, rigid={self.rigid})'

    # Hooks

    def build_generators(self, backend):
        """Return ``(generators, determinants)`` on ``backend``."""
        raise NotImplementedError

    def derive_fields(self, generators):
        """Return the derived fields from the generators, in frame order."""
        raise NotImplementedError

    def numerators(self, package):
        return {}

    def compute_fundamentals(self):
        raise NotImplementedError

    def compute_rpl(self):
        return {}

    def table(self):
        """Entries of the Lie-structure table as ``{(a, b): [term(...), ...]}``."""
        raise NotImplementedError

    def identities(self):
        """Named class identities (DAG nodes that must vanish identically)."""
        return {}

    def explicit_coframe(self):
        """Explicit 1-forms dual to the frame, when the class has them."""
        return None

    # Stages

    def bracket(self, x, y):
        out = lie_bracket(x, y)
        if self.rigid:
            out = out.map(RationalFn.rigidify)
        return out

    def build_frame(self, backend):
        generators, determinants = self.build_generators(backend)
        if self.rigid:
            generators = {n: f.map(RationalFn.rigidify) for n, f in generators.items()}
        derived = self.derive_fields(generators)
        package = FramePackage(
            self.class_id, self.arity, backend, generators, derived, determinants, rigid=self.rigid,
        )
        if backend is EXPANDED:
            package.numerators = self.numerators(package)
        return package

    @cached_property
    def package(self):
        with stage(self.class_id, f'frame on the {self.backend.name} backend'):
            return self.build_frame(self.backend)

    @cached_property
    def lazy_package(self):
        if self.backend is DAG:
            return self.package
        with stage(self.class_id, 'frame on the dag backend'):
            return self.build_frame(DAG)

    @cached_property
    def solve_package(self):
        if self.lazy_fundamentals and not self.rigid:
            return self.lazy_package
        return self.package

    @cached_property
    def frame(self):
        """Ordered mapping of member name to VectorField on the solve backend."""
        package = self.solve_package
        out = {}
        for name in self.members:
            member = package.field(name)
            if member is None:
                member = package.field(self.conjugate_members[name]).conjugate()
            out[name] = member
        return out

    @property
    def solve_backend(self):
        return self.solve_package.backend

    @cached_property
    def fundamentals(self):
        with stage(self.class_id, 'fundamental functions'):
            return self.compute_fundamentals()

    @cached_property
    def rpl(self):
        with stage(self.class_id, 'rpl functions'):
            return {name: self.rigidified(value) for name, value in self.compute_rpl().items()}

    @cached_property
    def structure(self):
        entries = {}
        for pair, terms in self.table().items():
            a, b = pair
            if self.members.index(a) > self.members.index(b):
                raise ValueError(f'table pair {pair} is out of frame order')
            kept = [(m, c) for m, c in terms if not self.solve_backend.is_zero(self.solve_backend.lift(c.value))]
            if kept:
                entries[pair] = kept
        return LieStructure(self.class_id, tuple(self.members), entries)

    def solve(self, field, members=None, vertical_rows=None):
        frame = self.frame if members is None else {n: self.frame[n] for n in members}
        return frame_solve(field, frame, vertical_rows)

    def apply(self, name, f):
        return self.rigidified(self.frame[name].apply(f))

    def rigidified(self, value):
        """Drop the u-dependent jets of an expanded value when the package is rigid."""
        if self.rigid and isinstance(value, RationalFn):
            return value.rigidify()
        return value

    # Verification

    def direct_bracket(self, a, b):
        """[X_a, X_b] recomputed from the member fields."""
        if (a, b) not in self._brackets:
            self._brackets[(a, b)] = self.bracket(self.frame[a], self.frame[b])
        return self._brackets[(a, b)]

    def bracket_residual(self, a, b):
        """direct [X_a, X_b] minus its table expansion, as a VectorField on the DAG backend."""
        frame = self.frame
        backend = self.solve_backend
        direct = self.direct_bracket(a, b)
        expected = VectorField(self.arity, backend)
        for member, coeff in self.structure.terms(a, b):
            expected = expected + frame[member].scale(coeff.value)
        if self.rigid:
            expected = expected.map(RationalFn.rigidify)
        return (direct - expected).to_dag()

    def table_residuals(self, pairs=None):
        named = {}
        for a, b in pairs or self.structure.pairs():
            residual = self.bracket_residual(a, b)
            if residual.is_zero():
                named[f'[{a},{b}]'] = nodes.zero()
                continue
            for coord, value in sorted(residual.components.items()):
                named[f'[{a},{b}] {self.arity.name(coord)}'] = value
        return named

    def suite(self, include_table=True):
        named = {name: DAG.lift(value) for name, value in self.identities().items()}
        if include_table:
            named.update(self.table_residuals())
        return named

    def to_dag(self, value):
        return self.solve_backend.to_dag(value)


PIPELINES = {}


def register(cls):
    PIPELINES[cls.class_id] = cls
    return cls


def get_pipeline(class_id, backend='auto', rigid=False):
    from . import pipelines  # noqa: F401  populates the registry
    try:
        cls = PIPELINES[class_id]
    except KeyError:
        raise UsageError(f'unknown class {class_id!r}; expected one of {", ".join(CLASS_IDS)}') from None
    return cls(backend=backend, rigid=rigid)
