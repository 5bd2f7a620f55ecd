"""Brute-force ground truth for tiny instances: full codebooks and ML decoding."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .construction import NestedTriple, encode

MAX_CODEWORDS = 1 << 24


@dataclass(frozen=True)
class TinyCodeTable:
    triple: NestedTriple
    codewords: list
    min_distance: int


def enumerate_code(triple: NestedTriple, limit: int = MAX_CODEWORDS) -> TinyCodeTable:
    """Every codeword, by running every message through the encoder."""
    q, k0 = triple.field.q, triple.k0
    size = q ** k0
    if size > limit:
        raise ValueError(f"code has {q}^{k0} = {size} codewords, above the limit {limit}")
    codewords = [tuple(encode(triple, msg)) for msg in itertools.product(range(q), repeat=k0)]
    # linear code: minimum distance is the lightest nonzero codeword
    min_distance = min((sum(1 for x in c if x) for c in codewords if any(c)),
                       default=0)
    return TinyCodeTable(triple, codewords, min_distance)


def nearest_codeword(table: TinyCodeTable, r):
    """Minimum-Hamming-distance codeword, its distance, and whether it is unique."""
    r = tuple(r)
    best, best_dist, count = None, None, 0
    for c in table.codewords:
        dist = sum(1 for x, y in zip(c, r) if x != y)
        if best_dist is None or dist < best_dist:
            best, best_dist, count = c, dist, 1
        elif dist == best_dist:
            count += 1
    return list(best), best_dist, count == 1


def error_patterns(length: int, q: int, max_weight: int):
    """All error vectors of weight <= max_weight, lightest first."""
    for w in range(max_weight + 1):
        for pos in itertools.combinations(range(length), w):
            for vals in itertools.product(range(1, q), repeat=w):
                e = [0] * length
                for p, v in zip(pos, vals):
                    e[p] = v
                yield e


# GF(4) instances small enough to enumerate in well under a second
TINY_INSTANCES = ((3, (2, 1, 1)), (3, (1, 1, 1)), (4, (2, 2, 1)))


def check_min_distance(triple: NestedTriple):
    """(enumerated minimum distance, predicted d0)."""
    return enumerate_code(triple).min_distance, triple.params().d0


def oracle_mismatches(triple: NestedTriple, table: TinyCodeTable | None = None) -> int:
    """Count (codeword, pattern) pairs within the decoding radius where the cascade
    decoder disagrees with brute-force nearest-codeword decoding."""
    from . import cascade

    if table is None:
        table = enumerate_code(triple)
    radius = triple.params().radius
    patterns = list(error_patterns(3 * triple.n, triple.field.q, radius))
    bad = 0
    for c in table.codewords:
        for e in patterns:
            r = [x ^ y for x, y in zip(c, e)]
            expected, _, _ = nearest_codeword(table, r)
            out = cascade.decode(triple, r)
            if not out.ok or out.codeword != expected:
                bad += 1
    return bad
