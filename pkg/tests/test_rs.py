import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from plotkin_rs import field_new, rs_new
from plotkin_rs.rs import RSStatus, default_eval_points


def random_error(rng, n, q, weight, avoid=()):
    e = [0] * n
    for p in rng.sample([i for i in range(n) if i not in avoid], weight):
        e[p] = rng.randrange(1, q)
    return e


def test_distance_formula(gf16, gf256):
    assert rs_new(gf16, 15, 11).d == 5
    assert rs_new(gf256, 128, 98).d == 31
    assert rs_new(gf256, 128, 82).d == 47
    assert rs_new(gf256, 128, 36).d == 93


def test_default_points(gf16):
    pts = default_eval_points(gf16, 16)
    assert pts[0] == 1 and pts[1] == 2 and pts[-1] == 0
    assert len(set(pts)) == 16
    assert default_eval_points(gf16, 4) == (1, 2, 4, 8)


def test_rejects_bad_parameters(gf16):
    with pytest.raises(ValueError):
        rs_new(gf16, 17, 4)
    with pytest.raises(ValueError):
        rs_new(gf16, 5, 6)
    with pytest.raises(ValueError):
        rs_new(gf16, 3, 2, eval_points=[1, 1, 2])
    with pytest.raises(ValueError):
        rs_new(gf16, 3, 2, eval_points=[1, 2])


def test_encode_examples(gf4, gf16):
    code = rs_new(gf4, 3, 2)
    assert code.eval_points == (1, 2, 3)
    # f(x) = 1 + x at 1, g, g^2 (g^2 = g + 1): 1+1, 1+g, 1+g^2
    assert code.encode([1, 1]) == [0, 3, 2]
    c16 = rs_new(gf16, 15, 11)
    assert c16.encode([0] * 11) == [0] * 15
    assert c16.encode([7] + [0] * 10) == [7] * 15
    with pytest.raises(ValueError):
        c16.encode([1] * 10)


def test_mds_exhaustive_gf4(gf4):
    code = rs_new(gf4, 3, 2)
    words = [code.encode(list(m)) for m in itertools.product(range(4), repeat=2)]
    assert len({tuple(w) for w in words}) == 16
    assert min(sum(1 for x in w if x) for w in words if any(w)) == 2 == code.d


def test_linearity(gf16):
    code = rs_new(gf16, 15, 9)
    rng = random.Random(1)
    for _ in range(100):
        m1 = [rng.randrange(16) for _ in range(9)]
        m2 = [rng.randrange(16) for _ in range(9)]
        s = [x ^ y for x, y in zip(m1, m2)]
        assert code.encode(s) == [x ^ y for x, y in zip(code.encode(m1), code.encode(m2))]


def test_decode_clean(gf16):
    code = rs_new(gf16, 15, 11)
    c = code.encode(list(range(11)))
    out = code.decode(c)
    assert out.status is RSStatus.SUCCESS
    assert out.codeword == c and out.error_weight == 0
    assert out.message == list(range(11))


def test_two_errors_d5(gf16):
    code = rs_new(gf16, 15, 11)
    rng = random.Random(2)
    for _ in range(1000):
        c = code.encode([rng.randrange(16) for _ in range(11)])
        e = random_error(rng, 15, 16, 2)
        r = [x ^ y for x, y in zip(c, e)]
        out = code.decode(r)
        assert out.ok and out.codeword == c
        assert out.error_vector == e and out.error_weight == 2


def test_two_erasures_one_error(gf16):
    code = rs_new(gf16, 15, 11)
    rng = random.Random(3)
    for _ in range(1000):
        c = code.encode([rng.randrange(16) for _ in range(11)])
        erased = rng.sample(range(15), 2)
        e = random_error(rng, 15, 16, 1, avoid=erased)
        r = [x ^ y for x, y in zip(c, e)]
        for p in erased:
            r[p] = rng.randrange(16)  # erased values are garbage
        out = code.decode(r, erased)
        assert out.ok and out.codeword == c


def test_beyond_radius_is_failure_or_bounded_miscorrection(gf16):
    code = rs_new(gf16, 15, 11)
    rng = random.Random(4)
    outcomes = set()
    for _ in range(500):
        c = code.encode([rng.randrange(16) for _ in range(11)])
        r = [x ^ y for x, y in zip(c, random_error(rng, 15, 16, 3))]
        out = code.decode(r)
        if out.ok:
            assert len(out.codeword) == 15
            assert out.codeword != c
            assert out.error_weight <= code.radius
            assert code.is_member(out.codeword)
            outcomes.add("miscorrect")
        else:
            assert out.codeword is None
            outcomes.add("fail")
    assert "fail" in outcomes


def test_too_many_erasures_rejected(gf16):
    code = rs_new(gf16, 15, 11)
    with pytest.raises(ValueError):
        code.decode([0] * 15, erasures=range(5))
    with pytest.raises(ValueError):
        code.decode([0] * 15, erasures=[15])
    with pytest.raises(ValueError):
        code.decode([0] * 14)


def test_puncture_parameters(gf16):
    code = rs_new(gf16, 15, 9)
    keep = [i for i in range(15) if i not in (0, 3, 7, 12)]
    sub = code.puncture(keep)
    # d* = d - |E| with |E| = 4
    assert (sub.n, sub.k, sub.d) == (11, 9, 3) == (15 - 4, 9, code.d - 4)
    assert code.puncture(range(15)) == code
    with pytest.raises(ValueError):
        code.puncture(range(8))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_reextend_roundtrip(data):
    f = field_new(data.draw(st.sampled_from([3, 4, 8])))
    n = data.draw(st.integers(2, min(f.q, 30)))
    k = data.draw(st.integers(1, n))
    code = rs_new(f, n, k)
    msg = data.draw(st.lists(st.integers(0, f.q - 1), min_size=k, max_size=k))
    keep = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=k, max_size=n)))
    c = code.encode(msg)
    sub = code.puncture(keep)
    pc = [c[i] for i in keep]
    assert sub.encode(msg) == pc
    assert code.reextend(pc, keep) == c


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_erasure_decoding_equals_puncture_decode_reextend(data):
    f = field_new(4)
    code = rs_new(f, 15, data.draw(st.integers(1, 12)))
    s = data.draw(st.integers(0, code.d - 1))
    erased = data.draw(st.sets(st.integers(0, 14), min_size=s, max_size=s))
    r = data.draw(st.lists(st.integers(0, 15), min_size=15, max_size=15))
    keep = [i for i in range(15) if i not in erased]
    direct = code.decode(r, erased)
    sub = code.puncture(keep)
    via = sub.decode([r[i] for i in keep])
    assert direct.ok == via.ok
    if direct.ok:
        assert direct.codeword == code.reextend(via.codeword, keep)


@pytest.mark.parametrize("m,n,k", [(4, 15, 11), (4, 15, 9), (4, 15, 5), (8, 128, 98)])
def test_errors_and_erasures_within_budget(m, n, k):
    f = field_new(m)
    code = rs_new(f, n, k)
    rng = random.Random(n * 100 + k)
    for _ in range(300):
        s = rng.randrange(0, code.d)
        e_max = (code.d - 1 - s) // 2
        erased = rng.sample(range(n), s)
        c = code.encode([rng.randrange(f.q) for _ in range(k)])
        r = [x ^ y for x, y in zip(c, random_error(rng, n, f.q, rng.randint(0, e_max), erased))]
        for p in erased:
            r[p] = rng.randrange(f.q)
        out = code.decode(r, erased)
        assert out.ok and out.codeword == c
        assert code.is_member(out.codeword)
        assert [x ^ y for x, y in zip(out.codeword, out.error_vector)] == r


def test_membership(gf16):
    code = rs_new(gf16, 15, 9)
    c = code.encode([3] * 9)
    assert code.is_member(c)
    c[4] ^= 1
    assert not code.is_member(c)
    assert not code.is_member(c[:14])
    assert code.message_of(code.encode(list(range(9)))) == list(range(9))
