"""Four-step cascade decoder for the (a | a+b | a+alpha*b+z) code.

1. Cancel a and b: r_z - alpha*r_b + (alpha-1)*r_a is a noisy C_z word. Decode it,
   and remember where it was corrupted.
2. r_b - r_a is a noisy C_b word. Decode it with the step-1 locations erased.
3. Three noisy copies of a remain (r_a, r_b - b, r_z - alpha*b - z); decode each in C_a.
4. Keep the candidate whose implied error over all 3n positions is lightest.

Within floor((d0 - 1) / 2) errors this always returns the transmitted word.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .construction import MessageTriple, NestedTriple, is_codeword

STREAM_NAMES = ("a", "b", "z")


class CascadeStatus(enum.Enum):
    SUCCESS = "Success"
    STEP1_FAILURE = "Step1Failure"
    STEP2_FAILURE = "Step2Failure"
    ALL_CANDIDATES_FAILED = "AllCandidatesFailed"


@dataclass(frozen=True)
class ReceivedWord:
    r_a: tuple
    r_b: tuple
    r_z: tuple

    def __post_init__(self):
        if not len(self.r_a) == len(self.r_b) == len(self.r_z):
            raise ValueError("received blocks must have equal length")

    @classmethod
    def from_flat(cls, word, n: int) -> "ReceivedWord":
        word = list(word)
        if len(word) != 3 * n:
            raise ValueError(f"expected {3 * n} symbols, got {len(word)}")
        return cls(tuple(word[:n]), tuple(word[n:2 * n]), tuple(word[2 * n:]))

    def flat(self) -> list:
        return [*self.r_a, *self.r_b, *self.r_z]


@dataclass(frozen=True)
class Candidate:
    stream: int  # 0, 1, 2 for the a-, b- and z-streams
    a: list
    msg_a: list
    weights: tuple  # (|e_a|, |e_b|, |e_z|)

    @property
    def total(self) -> int:
        return sum(self.weights)


@dataclass
class DecodeTrace:
    z_hat: list | None = None
    e_locs: frozenset = frozenset()
    b_hat: list | None = None
    candidates: list = dc_field(default_factory=list)
    chosen_index: int | None = None
    tau_min: int | None = None

    def summary(self) -> str:
        parts = [f"|E_abz|={len(self.e_locs)}"]
        if self.candidates:
            cands = ", ".join(
                f"{STREAM_NAMES[c.stream]}:{'/'.join(map(str, c.weights))}={c.total}"
                for c in self.candidates)
            parts.append(f"candidates=[{cands}]")
        if self.chosen_index is not None:
            parts.append(f"chosen={STREAM_NAMES[self.candidates[self.chosen_index].stream]}")
            parts.append(f"tau_min={self.tau_min}")
        return " ".join(parts)


@dataclass(frozen=True)
class CascadeOutcome:
    status: CascadeStatus
    trace: DecodeTrace
    codeword: list | None = None
    message: MessageTriple | None = None

    @property
    def ok(self) -> bool:
        return self.status is CascadeStatus.SUCCESS


def _as_received(triple: NestedTriple, r) -> ReceivedWord:
    if isinstance(r, ReceivedWord):
        if len(r.r_a) != triple.n:
            raise ValueError(f"received blocks have length {len(r.r_a)}, expected {triple.n}")
        return r
    return ReceivedWord.from_flat(r, triple.n)


def combine_step1(triple: NestedTriple, r) -> list:
    """r_z - alpha*r_b + (alpha-1)*r_a, which equals z plus a mixed error."""
    r = _as_received(triple, r)
    kern = triple.kernel
    alpha = triple.alpha
    out = kern.axpy(r.r_z, alpha, r.r_b)
    return kern.axpy(out, alpha ^ 1, r.r_a)


def _weight(v) -> int:
    return sum(1 for x in v if x)


def decode(triple: NestedTriple, r, strict: bool = False) -> CascadeOutcome:
    r = _as_received(triple, r)
    kern = triple.kernel
    alpha = triple.alpha
    trace = DecodeTrace()

    # step 1
    out_z = triple.code_z.decode(combine_step1(triple, r))
    if not out_z.ok:
        return CascadeOutcome(CascadeStatus.STEP1_FAILURE, trace)
    z_hat = out_z.codeword
    e_locs = frozenset(i for i, e in enumerate(out_z.error_vector) if e)
    trace.z_hat = z_hat
    trace.e_locs = e_locs

    # step 2
    if len(e_locs) >= triple.code_b.d:
        return CascadeOutcome(CascadeStatus.STEP2_FAILURE, trace)
    diff = [x ^ y for x, y in zip(r.r_b, r.r_a)]
    out_b = triple.code_b.decode(diff, e_locs)
    if not out_b.ok:
        return CascadeOutcome(CascadeStatus.STEP2_FAILURE, trace)
    b_hat = out_b.codeword
    trace.b_hat = b_hat

    # step 3
    streams = (
        list(r.r_a),
        [x ^ y for x, y in zip(r.r_b, b_hat)],
        [x ^ y for x, y in zip(kern.axpy(r.r_z, alpha, b_hat), z_hat)],
    )
    for idx, stream in enumerate(streams):
        out_a = triple.code_a.decode(stream)
        if not out_a.ok:
            continue
        a = out_a.codeword
        # step 4 bookkeeping: error each block would carry if this a were right
        weights = tuple(sum(1 for x, y in zip(s, a) if x != y) for s in streams)
        trace.candidates.append(Candidate(idx, a, out_a.message, weights))
    if not trace.candidates:
        return CascadeOutcome(CascadeStatus.ALL_CANDIDATES_FAILED, trace)

    # step 4: argmin of total weight, earliest stream wins ties
    best = min(range(len(trace.candidates)), key=lambda i: trace.candidates[i].total)
    chosen = trace.candidates[best]
    trace.chosen_index = best
    trace.tau_min = chosen.total

    codeword = triple.compose(chosen.a, b_hat, z_hat)
    message = MessageTriple(tuple(chosen.msg_a), tuple(out_b.message), tuple(out_z.message))
    if strict and not is_codeword(triple, codeword):
        raise RuntimeError("cascade decoder produced a non-codeword")
    return CascadeOutcome(CascadeStatus.SUCCESS, trace, codeword, message)


@dataclass(frozen=True)
class GroundTruthAnalysis:
    """Error bookkeeping relative to a known transmitted word (test support)."""

    tau: int
    e_locs_true: frozenset
    cancelled: frozenset
    block_weights: tuple
    step2_diff: tuple  # e_b - e_a, the error seen by step 2

    def step2_error_count(self, e_locs=None) -> int:
        """Step-2 errors left after erasing e_locs (default: the true step-1 support)."""
        erased = self.e_locs_true if e_locs is None else e_locs
        return sum(1 for i, x in enumerate(self.step2_diff) if x and i not in erased)

    @property
    def min_stream_weight(self) -> int:
        return min(self.block_weights)


def analyze_ground_truth(triple: NestedTriple, transmitted, e) -> GroundTruthAnalysis:
    n = triple.n
    e = list(e)
    if len(e) != 3 * n or len(transmitted) != 3 * n:
        raise ValueError(f"expected length {3 * n}")
    e_a, e_b, e_z = e[:n], e[n:2 * n], e[2 * n:]
    combined = combine_step1(triple, e)
    diff = tuple(x ^ y for x, y in zip(e_b, e_a))
    e_locs = frozenset(i for i, x in enumerate(combined) if x)
    cancelled = frozenset(i for i in range(n) if diff[i] and not combined[i])
    tau = _weight(e)
    # every hidden position carries at least two error symbols
    if len(e_locs) + 2 * len(cancelled) > tau:
        raise AssertionError("|E_abz| + 2|I_abz| exceeds the error weight")
    return GroundTruthAnalysis(tau, e_locs, cancelled,
                               (_weight(e_a), _weight(e_b), _weight(e_z)), diff)
