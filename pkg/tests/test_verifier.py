import pytest
from hypothesis import given
from hypothesis import strategies as st

from dbextend.verifier import verify_extension, verify_order, verify_subsequence, verify_window
from oracles import is_circular_subsequence_dp, max_circular_run_without

V = (1, 1, 0, 0, 0, 1, 0, 1)
REF_W = tuple(int(c) for c in "122212111002202000120102101")


def digits(s):
    return tuple(int(c) for c in s)


def test_subsequence_examples():
    assert verify_subsequence(digits("123"), digits("123456"))
    assert verify_subsequence(digits("246"), digits("123456"))
    assert verify_subsequence(digits("5612"), digits("123456"))
    assert not verify_subsequence(digits("132"), digits("123456"))
    assert is_circular_subsequence_dp(digits("5612"), digits("123456"))
    assert not is_circular_subsequence_dp(digits("132"), digits("123456"))


def test_subsequence_witness():
    chk = verify_subsequence(digits("5612"), digits("123456"))
    offset, pos = chk.witness
    w = digits("123456")
    assert [w[(offset + p) % 6] for p in pos] == [5, 6, 1, 2]
    assert pos == sorted(pos) and pos[-1] < 6


def test_subsequence_uses_valid_witness_and_ignores_bad_one():
    w = digits("0102")
    assert verify_subsequence(digits("12"), w, witness=[1, 3]).witness == (0, [1, 3])
    assert verify_subsequence(digits("12"), w, witness=[3, 1])  # falls back to search


words3 = st.lists(st.integers(0, 2), max_size=7).map(tuple)


@given(words3, st.lists(st.integers(0, 2), min_size=1, max_size=9).map(tuple))
def test_subsequence_matches_dp(v, w):
    assert bool(verify_subsequence(v, w)) == is_circular_subsequence_dp(v, w)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=6).map(tuple),
       st.lists(st.integers(0, 2), min_size=1, max_size=10).map(tuple),
       st.integers(0, 9), st.integers(0, 9))
def test_subsequence_rotation_invariant(v, w, i, j):
    i %= len(v)
    j %= len(w)
    a = bool(verify_subsequence(v, w))
    assert bool(verify_subsequence(v[i:] + v[:i], w[j:] + w[:j])) == a


def test_window_examples():
    assert verify_window(REF_W, 2, 6)
    chk = verify_window(REF_W, 2, 5)
    assert not chk and chk.witness == 6
    assert max_circular_run_without(REF_W, 2) == 5
    chk = verify_window((0, 0, 0), 2, 2)
    assert not chk and chk.witness == 0
    with pytest.raises(ValueError):
        verify_window((0, 2), 2, 3)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=30).map(tuple), st.integers(1, 30))
def test_window_matches_run_length(w, L):
    L = min(L, len(w))
    chk = verify_window(w, 2, L)
    assert bool(chk) == (max_circular_run_without(w, 2) <= L - 1)
    if not chk:
        o = chk.witness
        assert all(w[(o + t) % len(w)] != 2 for t in range(L))
        for earlier in range(o):
            assert any(w[(earlier + t) % len(w)] == 2 for t in range(L))


def test_extension_examples():
    rep = verify_extension(V, REF_W, 2, 3)
    assert rep.passed and rep.window_bound == 6
    rep = verify_extension(V, V, 2, 3)
    assert not rep.passed and not rep.de_bruijn
    assert verify_order(digits("0011"), 2, 2)
