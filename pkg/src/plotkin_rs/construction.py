"""Length-3n codes (a | a+b | a+alpha*b+z) from three nested RS codes."""
from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .rs import RSCode, rs_new


@dataclass(frozen=True)
class CodeParams:
    n0: int
    k0: int
    d0: int

    @property
    def radius(self) -> int:
        return (self.d0 - 1) // 2


@dataclass(frozen=True)
class MessageTriple:
    msg_a: tuple
    msg_b: tuple
    msg_z: tuple

    def flat(self) -> list:
        return [*self.msg_a, *self.msg_b, *self.msg_z]


@dataclass(frozen=True)
class NestedTriple:
    code_a: RSCode
    code_b: RSCode
    code_z: RSCode
    alpha: int

    @property
    def field(self) -> FieldSpec:
        return self.code_a.field

    @property
    def n(self) -> int:
        return self.code_a.n

    @property
    def k0(self) -> int:
        return self.code_a.k + self.code_b.k + self.code_z.k

    @property
    def kernel(self):
        return self.code_a.kernel

    def params(self) -> CodeParams:
        return params(self)

    def split_message(self, symbols) -> MessageTriple:
        symbols = list(symbols)
        ka, kb, kz = self.code_a.k, self.code_b.k, self.code_z.k
        if len(symbols) != ka + kb + kz:
            raise ValueError(f"expected {ka + kb + kz} message symbols, got {len(symbols)}")
        return MessageTriple(tuple(symbols[:ka]), tuple(symbols[ka:ka + kb]),
                             tuple(symbols[ka + kb:]))

    def compose(self, a, b, z) -> list:
        """Blocks (a, a+b, a+alpha*b+z) from component codewords."""
        kern = self.kernel
        ab = [x ^ y for x, y in zip(a, b)]
        last = kern.axpy([x ^ y for x, y in zip(a, z)], self.alpha, b)
        return list(a) + ab + last

    def encode(self, msg: MessageTriple) -> list:
        return encode(self, msg)

    def extract_components(self, codeword):
        return extract_components(self, codeword)

    def is_codeword(self, v) -> bool:
        return is_codeword(self, v)


def triple_new(field: FieldSpec, n: int, k_a: int, k_b: int, k_z: int, alpha=None,
               eval_points=None) -> NestedTriple:
    if not k_a >= k_b >= k_z >= 1:
        raise ValueError(f"need k_a >= k_b >= k_z >= 1, got ({k_a}, {k_b}, {k_z})")
    if n > field.q:
        raise ValueError(f"length {n} exceeds field size {field.q}")
    if alpha is None:
        alpha = field.generator().value
    alpha = int(alpha)
    field.check(alpha)
    if alpha in (0, 1):
        raise ValueError("alpha must not be 0 or 1")
    code_a = rs_new(field, n, k_a, eval_points)
    pts = code_a.eval_points
    return NestedTriple(code_a, rs_new(field, n, k_b, pts), rs_new(field, n, k_z, pts), alpha)


def params(triple: NestedTriple) -> CodeParams:
    da, db, dz = triple.code_a.d, triple.code_b.d, triple.code_z.d
    return CodeParams(3 * triple.n, triple.k0, min(3 * da, 2 * db, dz))


def encode(triple: NestedTriple, msg) -> list:
    if not isinstance(msg, MessageTriple):
        msg = triple.split_message(msg)
    a = triple.code_a.encode(msg.msg_a)
    b = triple.code_b.encode(msg.msg_b)
    z = triple.code_z.encode(msg.msg_z)
    return triple.compose(a, b, z)


def extract_components(triple: NestedTriple, codeword):
    """Invert the block mixing: a = c1, b = c2 - c1, z = c3 - c1 - alpha*b."""
    n = triple.n
    codeword = list(codeword)
    if len(codeword) != 3 * n:
        raise ValueError(f"expected length {3 * n}, got {len(codeword)}")
    a = codeword[:n]
    b = [x ^ y for x, y in zip(codeword[n:2 * n], a)]
    z = triple.kernel.axpy([x ^ y for x, y in zip(codeword[2 * n:], a)], triple.alpha, b)
    return a, b, z


def is_codeword(triple: NestedTriple, v) -> bool:
    v = list(v)
    if len(v) != 3 * triple.n:
        return False
    a, b, z = extract_components(triple, v)
    return (triple.code_a.is_member(a) and triple.code_b.is_member(b)
            and triple.code_z.is_member(z))
