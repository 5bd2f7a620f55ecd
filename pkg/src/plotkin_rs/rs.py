"""Evaluation-form Reed-Solomon codes with errors-and-erasures decoding.

A codeword is the vector of evaluations of a message polynomial of degree < k
(message symbols are its coefficients, lowest degree first) at the code's
evaluation points. Erasures are handled by decoding in the code punctured to
the non-erased points and re-extending the recovered polynomial.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from ._backend import GFKernel
from .field import FieldSpec

_KERNELS: dict = {}


def kernel_for(field: FieldSpec):
    """Shared kernel instance per field."""
    kern = _KERNELS.get(field)
    if kern is None:
        kern = _KERNELS[field] = GFKernel(field.exp, field.log, field.q)
    return kern


class RSStatus(enum.Enum):
    SUCCESS = "Success"
    FAILURE = "Failure"


@dataclass(frozen=True)
class RSDecodeOutcome:
    status: RSStatus
    codeword: list | None = None
    error_vector: list | None = None
    error_weight: int | None = None
    message: list | None = None

    @property
    def ok(self) -> bool:
        return self.status is RSStatus.SUCCESS


def default_eval_points(field: FieldSpec, n: int) -> tuple:
    """First n entries of (1, g, g^2, ..., g^(q-2), 0)."""
    pts = list(field.exp[: field.order]) + [0]
    return tuple(pts[:n])


@dataclass(frozen=True, eq=False)
class RSCode:
    field: FieldSpec
    n: int
    k: int
    eval_points: tuple

    def __post_init__(self):
        if len(self.eval_points) != self.n:
            raise ValueError("need exactly n evaluation points")

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def radius(self) -> int:
        """Guaranteed error-correction radius floor((d - 1) / 2)."""
        return (self.d - 1) // 2

    @cached_property
    def kernel(self):
        return kernel_for(self.field)

    def __eq__(self, other):
        if not isinstance(other, RSCode):
            return NotImplemented
        return (self.field, self.n, self.k, self.eval_points) == (
            other.field, other.n, other.k, other.eval_points)

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.eval_points))

    def __reduce__(self):
        return (RSCode, (self.field, self.n, self.k, self.eval_points))

    def _check_symbols(self, v) -> None:
        # the compiled kernel indexes its tables without bounds checks
        if v and (min(v) < 0 or max(v) >= self.field.q):
            raise ValueError(f"symbol outside GF({self.field.q})")

    def encode(self, message) -> list:
        message = list(message)
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != k = {self.k}")
        self._check_symbols(message)
        return self.kernel.poly_eval(message, self.eval_points)

    def is_member(self, word) -> bool:
        word = list(word)
        if len(word) != self.n:
            return False
        self._check_symbols(word)
        # interpolate from the first k coordinates, compare the rest
        f = self.kernel.interpolate(self.eval_points[: self.k], word[: self.k])
        return self.kernel.poly_eval(f, self.eval_points[self.k:]) == word[self.k:]

    def message_of(self, codeword) -> list:
        """Message polynomial of a codeword, read off any k coordinates."""
        return self.kernel.interpolate(self.eval_points[: self.k], list(codeword)[: self.k])

    def decode(self, received, erasures=()) -> RSDecodeOutcome:
        received = list(received)
        if len(received) != self.n:
            raise ValueError(f"received length {len(received)} != n = {self.n}")
        self._check_symbols(received)
        erased = set(erasures)
        if any(not 0 <= i < self.n for i in erased):
            raise ValueError("erasure position out of range")
        if len(erased) >= self.d:
            raise ValueError(f"{len(erased)} erasures exceed the code's capability (d = {self.d})")
        keep = [i for i in range(self.n) if i not in erased]
        f = self.kernel.gao_decode(
            [self.eval_points[i] for i in keep], [received[i] for i in keep], self.k)
        if f is None:
            return RSDecodeOutcome(RSStatus.FAILURE)
        codeword = self.kernel.poly_eval(f, self.eval_points)
        err = [r ^ c for r, c in zip(received, codeword)]
        weight = sum(1 for e in err if e)
        return RSDecodeOutcome(RSStatus.SUCCESS, codeword, err, weight, f)

    def puncture(self, keep) -> "RSCode":
        keep = list(keep)
        if len(keep) < self.k:
            raise ValueError(f"cannot keep {len(keep)} < k = {self.k} coordinates")
        if len(set(keep)) != len(keep) or any(not 0 <= i < self.n for i in keep):
            raise ValueError("keep must list distinct in-range indices")
        return RSCode(self.field, len(keep), self.k, tuple(self.eval_points[i] for i in keep))

    def reextend(self, punctured_codeword, keep) -> list:
        keep = list(keep)
        punctured_codeword = list(punctured_codeword)
        if len(keep) < self.k:
            raise ValueError(f"cannot re-extend from {len(keep)} < k = {self.k} coordinates")
        if len(punctured_codeword) != len(keep):
            raise ValueError("punctured word and keep list differ in length")
        xs = [self.eval_points[i] for i in keep[: self.k]]
        f = self.kernel.interpolate(xs, punctured_codeword[: self.k])
        return self.kernel.poly_eval(f, self.eval_points)


def rs_new(field: FieldSpec, n: int, k: int, eval_points=None) -> RSCode:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > field.q:
        raise ValueError(f"length {n} exceeds field size {field.q}")
    if eval_points is None:
        eval_points = default_eval_points(field, n)
    eval_points = tuple(int(x) for x in eval_points)
    if len(eval_points) != n:
        raise ValueError("need exactly n evaluation points")
    if len(set(eval_points)) != n:
        raise ValueError("evaluation points must be distinct")
    for x in eval_points:
        field.check(x)
    return RSCode(field, n, k, eval_points)
