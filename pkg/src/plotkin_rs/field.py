"""GF(2^m) arithmetic on integer-coded polynomial-basis symbols.

Symbols are plain ``int`` values in ``[0, q)``. :class:`FieldSpec` owns the
exp/log tables and does the arithmetic; :class:`FieldElement` is a thin
operator-overloading wrapper for interactive use and tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

# x^m + ... primitive over GF(2), one per degree.
DEFAULT_PRIM_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MIN_DEGREE = 2
MAX_DEGREE = 16


class FieldError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(2^m) defined by a primitive polynomial given as a bit mask."""

    m: int
    prim_poly: int
    # exp has length 2*(q-1) so mul never needs a modulo
    exp: tuple = dc_field(repr=False)
    log: tuple = dc_field(repr=False)

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        """Size of the multiplicative group, q - 1."""
        return (1 << self.m) - 1

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.m == other.m and self.prim_poly == other.prim_poly

    def __hash__(self):
        return hash((self.m, self.prim_poly))

    def __reduce__(self):
        return (field_new, (self.m, self.prim_poly))

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"symbol {x} outside GF({self.q})")
        return x

    def add(self, x: int, y: int) -> int:
        return x ^ y

    # characteristic 2: subtraction is addition
    sub = add

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[self.log[x] + self.log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^m)")
        return self.exp[self.order - self.log[x]]

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if x == 0:
            return 0
        return self.exp[self.log[x] - self.log[y] + self.order]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp[(self.log[x] * e) % self.order]

    def mult_order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise FieldError("zero has no multiplicative order")
        from math import gcd

        return self.order // gcd(self.log[x], self.order)

    def generator(self) -> "FieldElement":
        # x itself generates because prim_poly is primitive
        return FieldElement(self, 2)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]


def _poly_order_of_x(m: int, prim_poly: int) -> tuple[list, int]:
    """Power x repeatedly modulo prim_poly; return the powers seen and the order of x."""
    q = 1 << m
    powers = []
    x = 1
    for i in range(q - 1):
        if i > 0 and x == 1:
            return powers, i
        powers.append(x)
        x <<= 1
        if x & q:
            x ^= prim_poly
    return powers, (q - 1 if x == 1 else 0)


def field_new(m: int, prim_poly: int | None = None) -> FieldSpec:
    """Build GF(2^m); rejects polynomials of the wrong degree or that are not primitive."""
    if not isinstance(m, int) or not MIN_DEGREE <= m <= MAX_DEGREE:
        raise FieldError(f"extension degree must be in {MIN_DEGREE}..{MAX_DEGREE}, got {m!r}")
    if prim_poly is None:
        prim_poly = DEFAULT_PRIM_POLYS[m]
    if prim_poly.bit_length() - 1 != m:
        raise FieldError(f"polynomial {prim_poly:#x} does not have degree {m}")
    q = 1 << m
    powers, order = _poly_order_of_x(m, prim_poly)
    if order != q - 1:
        raise FieldError(
            f"polynomial {prim_poly:#x} is not primitive: x has order {order or 'undefined'}, "
            f"expected {q - 1}"
        )
    exp = powers + powers
    log = [0] * q
    for i, v in enumerate(powers):
        log[v] = i
    return FieldSpec(m, prim_poly, tuple(exp), tuple(log))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec = dc_field(repr=False)
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.spec.check(other)
        return NotImplemented

    def __add__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.spec, self.value ^ y)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.spec, self.spec.mul(self.value, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.spec, self.spec.div(self.value, y))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __neg__(self):
        return self

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def order(self) -> int:
        return self.spec.mult_order(self.value)
