"""
Hash-consed expression DAG over jet variables.

Nodes are created only through the constructors below, which fold trivial
cases and share structurally equal nodes, so ``a is b`` decides structural
equality.  ``derive`` and ``conj`` never appear as stored nodes: they are
pushed down to the leaves when requested.  Children always have smaller ids
than their parents.
"""

import threading

from crframes.exceptions import ContractError
from jetalg.coefficients import ONE, ZERO, coerce, conj as conj_coeff
from jetalg.jets import JETS, JetVar
from jetalg.poly import Poly

LEAF, CONST, POLY, ADD, MUL, DIV, NEG = 'leaf', 'const', 'poly', 'add', 'mul', 'div', 'neg'


class Node:
    __slots__ = ('id', 'kind', 'args', 'payload')

    def __init__(self, ident, kind, args, payload):
        self.id = ident
        self.kind = kind
        self.args = args
        self.payload = payload

    def __hash__(self):
        return self.id

    def __eq__(self, other):
        return self is other

    def __repr__(self):
        if self.kind == LEAF:
            return f'Node#{self.id}({JETS.var(self.payload).text()})'
        if self.kind == CONST:
            return f'Node#{self.id}(const)'
        return f'Node#{self.id}({self.kind} {" ".join(str(a.id) for a in self.args)})'

    # Operator sugar so DAG elements mix with RationalFn-style code

    def __add__(self, other):
        return add(self, lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, lift(other))

    def __rsub__(self, other):
        return sub(lift(other), self)

    def __mul__(self, other):
        return mul(self, lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, lift(other))

    def __rtruediv__(self, other):
        return div(lift(other), self)

    def __neg__(self):
        return neg(self)

    def derive(self, coord):
        return derive(self, coord)

    def conjugate(self):
        return conjugate(self)

    def is_zero(self):
        return self.kind == CONST and not self.payload


class NodeTable:
    """Interned nodes plus the derivative and conjugate memos keyed by their ids."""

    def __init__(self):
        self._lock = threading.Lock()
        self.clear()

    def clear(self):
        """Forget every node; nodes built before the call must not be used afterwards."""
        with self._lock:
            self._nodes = []
            self._index = {}
            self._labels = {}
            self.derived = {}
            self.conjugates = {}

    def intern(self, kind, args, payload):
        key = (kind, tuple(a.id for a in args), payload)
        found = self._index.get(key)
        if found is not None:
            return found
        with self._lock:
            found = self._index.get(key)
            if found is None:
                found = Node(len(self._nodes), kind, tuple(args), payload)
                self._nodes.append(found)
                self._index[key] = found
            return found

    def label(self, node, name):
        self._labels.setdefault(node.id, name)
        return node

    def label_of(self, node):
        return self._labels.get(node.id)

    def __len__(self):
        return len(self._nodes)


NODES = NodeTable()


def const(value):
    return NODES.intern(CONST, (), coerce(value))


def zero():
    return const(ZERO)


def one():
    return const(ONE)


def leaf(var):
    if isinstance(var, JetVar):
        var = JETS.id_of(var)
    return NODES.intern(LEAF, (), var)


def poly(p):
    """A whole expanded polynomial as one node; monomial-free cases fold."""
    if p.is_constant():
        return const(p.constant_value())
    if len(p.terms) == 1:
        (mono, coeff), = p.terms.items()
        if len(mono) == 1 and mono[0][1] == 1 and coeff == ONE:
            return leaf(mono[0][0])
    return NODES.intern(POLY, (), p)


def lift(value):
    if isinstance(value, Node):
        return value
    if isinstance(value, Poly):
        return poly(value)
    return const(value)


def _is_const(node, value=None):
    return node.kind == CONST and (value is None or node.payload == value)


def add(a, b):
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.kind == CONST and b.kind == CONST:
        return const(a.payload + b.payload)
    if a.id > b.id:
        a, b = b, a
    return NODES.intern(ADD, (a, b), None)


def neg(a):
    if a.kind == CONST:
        return const(-a.payload)
    if a.kind == NEG:
        return a.args[0]
    return NODES.intern(NEG, (a,), None)


def sub(a, b):
    if a is b:
        return zero()
    return add(a, neg(b))


def mul(a, b):
    if a.is_zero() or b.is_zero():
        return zero()
    if _is_const(a, ONE):
        return b
    if _is_const(b, ONE):
        return a
    if a.kind == CONST and b.kind == CONST:
        return const(a.payload * b.payload)
    if _is_const(a, -ONE):
        return neg(b)
    if _is_const(b, -ONE):
        return neg(a)
    if a.id > b.id:
        a, b = b, a
    return NODES.intern(MUL, (a, b), None)


def div(a, b):
    if b.is_zero():
        raise ContractError('division by the zero expression')
    if a.is_zero():
        return a
    if _is_const(b, ONE):
        return a
    if b.kind == CONST:
        return mul(a, const(ONE / b.payload))
    return NODES.intern(DIV, (a, b), None)


def total(nodes):
    out = zero()
    for node in nodes:
        out = add(out, node)
    return out


def product(nodes):
    out = one()
    for node in nodes:
        out = mul(out, node)
    return out


def reachable(*roots):
    """Every node under ``roots``, children before parents."""
    seen = {}
    stack = list(roots)
    while stack:
        node = stack.pop()
        if node.id in seen:
            continue
        seen[node.id] = node
        stack.extend(node.args)
    return [seen[i] for i in sorted(seen)]


def derive(root, coord):
    """Exact derivative along a base coordinate, built without derive nodes."""
    cached = NODES.derived.get((root.id, coord))
    if cached is not None:
        return cached

    def d(child):
        return NODES.derived[(child.id, coord)]

    for node in reachable(root):
        key = (node.id, coord)
        if key in NODES.derived:
            continue
        kind = node.kind
        if kind == CONST:
            result = zero()
        elif kind == LEAF:
            result = leaf(JETS.prolong(node.payload, coord))
        elif kind == POLY:
            result = poly(node.payload.derive(coord))
        elif kind == ADD:
            result = add(d(node.args[0]), d(node.args[1]))
        elif kind == NEG:
            result = neg(d(node.args[0]))
        elif kind == MUL:
            a, b = node.args
            result = add(mul(d(a), b), mul(a, d(b)))
        else:
            a, b = node.args
            da, db = d(a), d(b)
            if db.is_zero():
                result = div(da, b)
            else:
                result = div(sub(mul(da, b), mul(a, db)), mul(b, b))
        NODES.derived[key] = result
    return NODES.derived[(root.id, coord)]


def conjugate(root):
    """Complex conjugate; every graphing function is real, so leaves swap z and zbar orders."""
    cached = NODES.conjugates.get(root.id)
    if cached is not None:
        return cached

    def c(child):
        return NODES.conjugates[child.id]

    for node in reachable(root):
        if node.id in NODES.conjugates:
            continue
        kind = node.kind
        if kind == CONST:
            result = const(conj_coeff(node.payload))
        elif kind == LEAF:
            result = leaf(JETS.conj(node.payload))
        elif kind == POLY:
            result = poly(node.payload.conjugate())
        elif kind == ADD:
            result = add(c(node.args[0]), c(node.args[1]))
        elif kind == NEG:
            result = neg(c(node.args[0]))
        elif kind == MUL:
            result = mul(c(node.args[0]), c(node.args[1]))
        else:
            result = div(c(node.args[0]), c(node.args[1]))
        label = NODES.label_of(node)
        if label is not None:
            NODES.label(result, _conjugate_label(label))
        NODES.conjugates[node.id] = result
    return NODES.conjugates[root.id]


def _conjugate_label(label):
    if label == 'Delta':
        return 'Deltabar'
    if label == 'Deltabar':
        return 'Delta'
    return label


def from_rational(f):
    """DAG of a RationalFn: the numerator divided by each labelled denominator factor in turn."""
    node = poly(f.num)
    for handle, exp in sorted(f.den.items(), key=lambda item: (item[0].label, item[1])):
        factor = NODES.label(poly(handle.poly), handle.label)
        for _ in range(exp):
            node = div(node, factor)
    return node


def node_count(root):
    return len(reachable(root))


def leaves(*roots):
    """Jet variables read by ``roots`` (leaf nodes and inside poly nodes), in jet order."""
    ids = set()
    for node in reachable(*roots):
        if node.kind == LEAF:
            ids.add(node.payload)
        elif node.kind == POLY:
            ids |= node.payload.jet_ids()
    return sorted((JETS.var(i) for i in ids), key=lambda var: var.sort_key)
