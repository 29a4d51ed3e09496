"""
Binary interchange for polynomials.

Layout (all integers big-endian)::

    header   b'CRJP' | version:u8 | p:u8 | q:u8 | terms:u32
    record   length:u32 | payload
    payload  re_num | re_den | im_num | im_den | nvars:u16 | var*
    integer  nbytes:u16 | two's-complement bytes
    var      func:u16 | dz:u16*p | dzbar:u16*p | du:u16*q | exp:u32

Records follow the canonical (graded-lexicographic) term order, so equal
polynomials always serialize to equal bytes.
"""

import struct

from sympy.polys.domains import QQ, QQ_I

from crframes.exceptions import ContractError

from .jets import JETS, Arity, JetVar
from .poly import Poly, mono_mul

MAGIC = b'CRJP'
VERSION = 1

_HEADER = struct.Struct('>4sBBBI')
_U16 = struct.Struct('>H')
_U32 = struct.Struct('>I')


def _pack_int(value):
    size = max(1, (value.bit_length() + 8) // 8)
    return _U16.pack(size) + value.to_bytes(size, 'big', signed=True)


def _unpack_int(buf, offset):
    (size,) = _U16.unpack_from(buf, offset)
    offset += _U16.size
    return int.from_bytes(buf[offset:offset + size], 'big', signed=True), offset + size


def _pack_var(var, exp):
    fields = (var.func,) + var.dz + var.dzbar + var.du
    return struct.pack(f'>{len(fields)}H', *fields) + _U32.pack(exp)


def dumps(poly, arity):
    out = [_HEADER.pack(MAGIC, VERSION, arity.p, arity.q, len(poly.terms))]
    for mono, coeff in poly.sorted_terms():
        payload = b''.join([
            _pack_int(int(coeff.x.numerator)),
            _pack_int(int(coeff.x.denominator)),
            _pack_int(int(coeff.y.numerator)),
            _pack_int(int(coeff.y.denominator)),
            _U16.pack(len(mono)),
        ])
        factors = sorted(mono, key=lambda f: JETS.key(f[0]))
        payload += b''.join(_pack_var(JETS.var(v), e) for v, e in factors)
        out.append(_U32.pack(len(payload)) + payload)
    return b''.join(out)


def loads(data):
    """Return ``(poly, arity)``."""
    try:
        magic, version, p, q, count = _HEADER.unpack_from(data, 0)
    except struct.error as exc:
        raise ContractError(f'truncated polynomial header: {exc}') from exc
    if magic != MAGIC or version != VERSION:
        raise ContractError('not a polynomial interchange file')
    arity = Arity(p, q)
    var_struct = struct.Struct(f'>{1 + 2 * p + q}H')
    offset = _HEADER.size
    pairs = []
    try:
        for _ in range(count):
            (length,) = _U32.unpack_from(data, offset)
            offset += _U32.size
            end = offset + length
            re_num, pos = _unpack_int(data, offset)
            re_den, pos = _unpack_int(data, pos)
            im_num, pos = _unpack_int(data, pos)
            im_den, pos = _unpack_int(data, pos)
            (nvars,) = _U16.unpack_from(data, pos)
            pos += _U16.size
            mono = ()
            for _ in range(nvars):
                fields = var_struct.unpack_from(data, pos)
                pos += var_struct.size
                (exp,) = _U32.unpack_from(data, pos)
                pos += _U32.size
                var = JetVar(fields[0], fields[1:1 + p], fields[1 + p:1 + 2 * p], fields[1 + 2 * p:])
                mono = mono_mul(mono, ((JETS.id_of(var), exp),))
            if pos != end:
                raise ContractError('polynomial record length mismatch')
            offset = end
            pairs.append((mono, QQ_I(QQ(re_num, re_den), QQ(im_num, im_den))))
    except struct.error as exc:
        raise ContractError(f'truncated polynomial record: {exc}') from exc
    return Poly.from_terms(pairs), arity
