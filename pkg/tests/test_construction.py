import itertools
import random

import pytest

from plotkin_rs import (MessageTriple, extract_components, field_new, is_codeword, params,
                        triple_new)


def wt(v):
    return sum(1 for x in v if x)


def min_weight_message(field, code):
    """Coefficients of prod_{j < k-1} (X - x_j): vanishes on k-1 points, weight d."""
    poly = [1]
    for x in code.eval_points[: code.k - 1]:
        nxt = [0] + poly
        for j, c in enumerate(poly):
            nxt[j] ^= field.mul(c, x)
        poly = nxt
    return poly + [0] * (code.k - len(poly))


def rand_msg(rng, triple):
    q = triple.field.q
    return MessageTriple(*(tuple(rng.randrange(q) for _ in range(c.k))
                           for c in (triple.code_a, triple.code_b, triple.code_z)))


def test_table1_params(table1):
    p = params(table1)
    assert (p.n0, p.k0, p.d0) == (384, 216, 93)
    assert (table1.code_a.d, table1.code_b.d, table1.code_z.d) == (31, 47, 93)
    assert p.radius == 46


def test_desk_params(desk):
    # min{3*5, 2*7, 11}
    assert params(desk) == params(desk)
    p = desk.params()
    assert (p.n0, p.k0, p.d0) == (45, 25, 11)


def test_degenerate_params(gf16):
    t = triple_new(gf16, 6, 6, 6, 6)
    assert params(t).d0 == 1


def test_triple_validation(gf256, gf16):
    with pytest.raises(ValueError, match="k_a >= k_b >= k_z"):
        triple_new(gf256, 128, 36, 82, 98)
    with pytest.raises(ValueError, match="alpha"):
        triple_new(gf16, 15, 11, 9, 5, alpha=1)
    with pytest.raises(ValueError, match="alpha"):
        triple_new(gf16, 15, 11, 9, 5, alpha=0)
    with pytest.raises(ValueError):
        triple_new(gf16, 17, 11, 9, 5)
    t = triple_new(gf16, 15, 11, 9, 5, alpha=7)
    assert t.alpha == 7


def test_default_alpha_is_generator(desk, gf16):
    assert desk.alpha == gf16.generator().value
    assert gf16.mult_order(desk.alpha) == 15


def test_shared_points(table1):
    assert table1.code_a.eval_points == table1.code_b.eval_points == table1.code_z.eval_points


def test_encode_structure(desk):
    rng = random.Random(0)
    n = desk.n
    assert desk.encode(MessageTriple((0,) * 11, (0,) * 9, (0,) * 5)) == [0] * 45
    m = rand_msg(rng, desk)
    a = desk.code_a.encode(m.msg_a)
    b = desk.code_b.encode(m.msg_b)
    assert desk.encode(MessageTriple(m.msg_a, (0,) * 9, (0,) * 5)) == a * 3
    only_b = desk.encode(MessageTriple((0,) * 11, m.msg_b, (0,) * 5))
    assert only_b[:n] == [0] * n
    assert only_b[n:2 * n] == b
    assert only_b[2 * n:] == [desk.field.mul(desk.alpha, x) for x in b]
    with pytest.raises(ValueError):
        desk.encode([1] * 24)


def test_flat_message_equivalent(desk):
    rng = random.Random(1)
    m = rand_msg(rng, desk)
    assert desk.encode(m.flat()) == desk.encode(m)


def test_linearity(desk):
    rng = random.Random(2)
    for _ in range(200):
        m1, m2 = rand_msg(rng, desk), rand_msg(rng, desk)
        s = [x ^ y for x, y in zip(m1.flat(), m2.flat())]
        lhs = [x ^ y for x, y in zip(desk.encode(m1), desk.encode(m2))]
        assert desk.encode(s) == lhs


def test_extract_inverts_encode(desk):
    rng = random.Random(3)
    for _ in range(200):
        m = rand_msg(rng, desk)
        a, b, z = extract_components(desk, desk.encode(m))
        assert a == desk.code_a.encode(m.msg_a)
        assert b == desk.code_b.encode(m.msg_b)
        assert z == desk.code_z.encode(m.msg_z)
    assert extract_components(desk, [0] * 45) == ([0] * 15,) * 3


def test_membership(desk, table1):
    rng = random.Random(4)
    for triple, trials in ((desk, 1000), (table1, 50)):
        for _ in range(trials):
            c = triple.encode(rand_msg(rng, triple))
            assert is_codeword(triple, c)
            bad = list(c)
            bad[rng.randrange(len(bad))] ^= rng.randrange(1, triple.field.q)
            assert not is_codeword(triple, bad)
    assert is_codeword(desk, [0] * 45)
    assert not is_codeword(desk, [0] * 44)


def test_random_word_not_member(desk):
    rng = random.Random(5)
    hits = 0
    for _ in range(200):
        v = [rng.randrange(16) for _ in range(45)]
        hits += is_codeword(desk, v)
        if not is_codeword(desk, v):
            a, b, z = extract_components(desk, v)
            assert not (desk.code_a.is_member(a) and desk.code_b.is_member(b)
                        and desk.code_z.is_member(z))
    # 16^25 codewords among 16^45 words
    assert hits == 0


def test_nesting(desk):
    rng = random.Random(6)
    for _ in range(1000):
        z = desk.code_z.encode([rng.randrange(16) for _ in range(5)])
        b = desk.code_b.encode([rng.randrange(16) for _ in range(9)])
        assert desk.code_b.is_member(z) and desk.code_a.is_member(z)
        assert desk.code_a.is_member(b)


def test_min_distance_attained(desk, table1):
    for triple in (desk, table1):
        f = triple.field
        ca, cb, cz = triple.code_a, triple.code_b, triple.code_z
        za, zb, zz = (0,) * ca.k, (0,) * cb.k, (0,) * cz.k
        ma = tuple(min_weight_message(f, ca))
        mb = tuple(min_weight_message(f, cb))
        mz = tuple(min_weight_message(f, cz))
        assert wt(ca.encode(ma)) == ca.d
        assert wt(triple.encode(MessageTriple(ma, zb, zz))) == 3 * ca.d
        assert wt(triple.encode(MessageTriple(za, mb, zz))) == 2 * cb.d
        assert wt(triple.encode(MessageTriple(za, zb, mz))) == cz.d
        d0 = triple.params().d0
        assert d0 == min(3 * ca.d, 2 * cb.d, cz.d)


def test_exhaustive_min_distance_gf4(gf4):
    t = triple_new(gf4, 3, 2, 1, 1)
    weights = [wt(t.encode(list(m))) for m in itertools.product(range(4), repeat=4)]
    assert len(weights) == 256
    assert min(w for w in weights if w) == 3 == min(3 * 2, 2 * 3, 3)
