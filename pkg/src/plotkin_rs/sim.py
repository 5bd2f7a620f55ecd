"""Monte Carlo frame-error simulation with per-trial seeded RNG streams.

Trial ``i`` of a run seeded with ``s`` draws everything (message, error
positions, error values) from ``numpy.random.default_rng([s, i])``, so results
do not depend on how trials are split across workers.
"""
from __future__ import annotations

import csv
import io
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import cascade
from .cascade import CascadeStatus
from .construction import NestedTriple

CSV_HEADER = ("model", "param", "trials", "successes", "miscorrections", "failures",
              "fer", "mds_reference")


@dataclass(frozen=True)
class ChannelModel:
    kind: str  # "fixed" or "qsc"
    tau: int = 0
    p: float = 0.0

    def __post_init__(self):
        if self.kind not in ("fixed", "qsc"):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.tau < 0:
            raise ValueError("tau must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")

    @classmethod
    def fixed(cls, tau: int) -> "ChannelModel":
        return cls("fixed", tau=int(tau))

    @classmethod
    def qsc(cls, p: float) -> "ChannelModel":
        return cls("qsc", p=float(p))

    @property
    def param(self) -> str:
        return str(self.tau) if self.kind == "fixed" else f"{self.p:.10g}"

    def describe(self) -> str:
        return f"{self.kind}:{self.param}"

    def error(self, rng: np.random.Generator, length: int, q: int) -> list:
        e = np.zeros(length, dtype=np.int64)
        if self.kind == "fixed":
            if self.tau > length:
                raise ValueError(f"cannot place {self.tau} errors in {length} symbols")
            pos = rng.choice(length, size=self.tau, replace=False)
            e[pos] = rng.integers(1, q, size=self.tau)
        else:
            hit = rng.random(length) < self.p
            # xor with a uniform nonzero value gives a uniform *different* symbol
            e[hit] = rng.integers(1, q, size=int(hit.sum()))
        return e.tolist()


def parse_model(text: str) -> ChannelModel:
    kind, _, value = text.partition(":")
    kind = kind.strip().lower()
    if kind == "fixed":
        return ChannelModel.fixed(int(value) if value else 0)
    if kind == "qsc":
        return ChannelModel.qsc(float(value) if value else 0.0)
    raise ValueError(f"model must be fixed:TAU or qsc:P, got {text!r}")


@dataclass
class SimRecord:
    model: ChannelModel
    trials: int = 0
    successes: int = 0
    miscorrections: int = 0
    failures_by_status: Counter = dc_field(default_factory=Counter)
    decode_seconds: float = 0.0

    @property
    def failures(self) -> int:
        return sum(self.failures_by_status.values())

    @property
    def fer(self) -> float:
        return (self.miscorrections + self.failures) / self.trials if self.trials else 0.0

    @property
    def mean_decode_time(self) -> float:
        return self.decode_seconds / self.trials if self.trials else 0.0

    def merge(self, other: "SimRecord") -> None:
        self.trials += other.trials
        self.successes += other.successes
        self.miscorrections += other.miscorrections
        self.failures_by_status.update(other.failures_by_status)
        self.decode_seconds += other.decode_seconds


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def draw_trial(triple: NestedTriple, model: ChannelModel, seed: int, trial: int):
    """Transmitted codeword and error vector for one trial."""
    rng = trial_rng(seed, trial)
    q = triple.field.q
    msg = rng.integers(0, q, size=triple.k0).tolist()
    codeword = triple.encode(msg)
    e = model.error(rng, 3 * triple.n, q)
    return codeword, e


def _run_range(triple: NestedTriple, model: ChannelModel, seed: int, start: int,
               stop: int) -> SimRecord:
    rec = SimRecord(model)
    clock = time.perf_counter
    for i in range(start, stop):
        codeword, e = draw_trial(triple, model, seed, i)
        r = [x ^ y for x, y in zip(codeword, e)]
        t0 = clock()
        out = cascade.decode(triple, r)
        rec.decode_seconds += clock() - t0
        rec.trials += 1
        if out.status is CascadeStatus.SUCCESS:
            if out.codeword == codeword:
                rec.successes += 1
            else:
                rec.miscorrections += 1
        else:
            rec.failures_by_status[out.status.value] += 1
    return rec


def run_simulation(triple: NestedTriple, model: ChannelModel, trials: int, seed: int,
                   jobs: int = 1) -> SimRecord:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if jobs <= 1 or trials < 2 * jobs:
        return _run_range(triple, model, seed, 0, trials)
    bounds = [trials * j // jobs for j in range(jobs + 1)]
    total = SimRecord(model)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_range, triple, model, seed, lo, hi)
                   for lo, hi in zip(bounds, bounds[1:])]
        for fut in futures:
            total.merge(fut.result())
    return total


def mds_reference(n0: int, k0: int, tau: int) -> int:
    """1 if a bounded-distance decoder of an MDS (n0, k0) code corrects tau errors."""
    return int(tau <= (n0 - k0) // 2)


def mds_reference_fer(n0: int, k0: int, model: ChannelModel) -> float:
    """Frame error rate of the MDS bounded-distance reference under a channel model."""
    if model.kind == "fixed":
        return float(1 - mds_reference(n0, k0, model.tau))
    t = (n0 - k0) // 2
    p = model.p
    # P(more than t symbol errors) for Binomial(n0, p)
    ok = sum(math.comb(n0, w) * p ** w * (1 - p) ** (n0 - w) for w in range(t + 1))
    return max(0.0, 1.0 - ok)


def sweep_values(kind: str, spec: str) -> list:
    """Inclusive LO:HI:STEP grid; integers for fixed, floats for qsc."""
    try:
        lo, hi, step = spec.split(":")
    except ValueError:
        raise ValueError(f"sweep must look like LO:HI:STEP, got {spec!r}") from None
    if kind == "fixed":
        lo, hi, step = int(lo), int(hi), int(step)
        if step <= 0:
            raise ValueError("sweep step must be positive")
        return list(range(lo, hi + 1, step))
    lo, hi, step = float(lo), float(hi), float(step)
    if step <= 0:
        raise ValueError("sweep step must be positive")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 12) for i in range(count)]


def csv_row(triple: NestedTriple, rec: SimRecord) -> list:
    p = triple.params()
    return [rec.model.kind, rec.model.param, rec.trials, rec.successes, rec.miscorrections,
            rec.failures, f"{rec.fer:.10g}", f"{mds_reference_fer(p.n0, p.k0, rec.model):.10g}"]


def records_to_csv(triple: NestedTriple, records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(csv_row(triple, rec))
    return buf.getvalue()
