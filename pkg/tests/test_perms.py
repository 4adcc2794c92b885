import itertools
import random

import pytest

from braidnf.perms import (
    PairSet,
    act_on_pairs,
    adjacent_transposition,
    all_permutations,
    compose,
    compose_via_inversions,
    flip,
    full_bits,
    identity,
    inverse,
    inversion_set,
    is_inversion_set,
    is_permutation,
    length,
    omega,
    pair_count,
    permutation_from_inversions,
)

# A six-strand permutation used across several fixed-value tests; its
# inversion set, complement and star were checked by hand and against the
# enumeration oracle.
PI6 = (4, 2, 6, 1, 5, 3)
PI6_INVERSIONS = {(1, 2), (1, 4), (1, 6), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)}


def test_is_permutation():
    assert is_permutation(())
    assert is_permutation((1,))
    assert is_permutation((2, 1, 3))
    assert not is_permutation((1, 1, 3))
    assert not is_permutation((0, 1))
    assert not is_permutation((2, 3))


def test_identity_and_omega():
    assert identity(3) == (1, 2, 3)
    assert identity(1) == (1,)
    assert omega(6) == (6, 5, 4, 3, 2, 1)
    assert omega(2) == (2, 1)
    assert compose(omega(5), omega(5)) == identity(5)
    assert len(inversion_set(identity(6))) == 0
    with pytest.raises(ValueError):
        identity(0)


def test_adjacent_transposition():
    assert adjacent_transposition(3, 1) == (2, 1, 3)
    assert adjacent_transposition(3, 2) == (1, 3, 2)
    assert inversion_set(adjacent_transposition(3, 1)).pairs() == ((1, 2),)
    with pytest.raises(ValueError):
        adjacent_transposition(3, 3)
    with pytest.raises(ValueError):
        adjacent_transposition(3, 0)


def test_compose_left_factor_first():
    a = (3, 1, 7, 8, 4, 5, 2, 6)
    x = (2, 7, 1, 3, 4, 8, 5, 6)
    assert compose(a, x) == (1, 2, 5, 6, 3, 4, 7, 8)
    s1, s2 = adjacent_transposition(3, 1), adjacent_transposition(3, 2)
    assert compose(s1, s2) == (3, 1, 2)
    assert compose(a, identity(8)) == a
    with pytest.raises(ValueError):
        compose(s1, identity(4))


def test_inverse():
    assert inverse((3, 1, 7, 8, 4, 5, 2, 6)) == (2, 7, 1, 5, 6, 8, 3, 4)
    assert inverse((2, 7, 1, 3, 4, 8, 5, 6)) == (3, 1, 4, 5, 7, 8, 2, 6)
    assert inverse(identity(5)) == identity(5)
    for p in all_permutations(5):
        assert compose(p, inverse(p)) == identity(5)


def test_flip():
    assert flip(adjacent_transposition(3, 1)) == adjacent_transposition(3, 2)
    assert flip(omega(4)) == omega(4)
    for p in all_permutations(4):
        assert flip(flip(p)) == p
        assert flip(p) == compose(compose(omega(4), p), omega(4))
        assert len(inversion_set(flip(p))) == len(inversion_set(p))


def test_pair_set_basics():
    s = PairSet.from_pairs(4, [(1, 2), (2, 4)])
    assert (1, 2) in s and (2, 4) in s and (1, 3) not in s
    assert len(s) == 2
    assert s.pairs() == ((1, 2), (2, 4))
    assert (s | PairSet.from_pairs(4, [(3, 4)])).pairs() == ((1, 2), (2, 4), (3, 4))
    assert (s & PairSet.from_pairs(4, [(2, 4)])).pairs() == ((2, 4),)
    assert (s ^ s).bits == 0
    assert (s - s).bits == 0
    assert s.issubset(PairSet.full(4))
    with pytest.raises(ValueError):
        PairSet.from_pairs(3, [(2, 2)])
    with pytest.raises(ValueError):
        PairSet.from_pairs(3, [(1, 4)])
    with pytest.raises(ValueError):
        s & PairSet.empty(5)


def test_inversion_set_values():
    assert set(inversion_set(PI6)) == PI6_INVERSIONS
    assert inversion_set(identity(5)).bits == 0
    assert len(inversion_set(omega(4))) == 6
    assert inversion_set(omega(4)).bits == full_bits(4)
    for n in range(1, 7):
        assert len(inversion_set(omega(n))) == n * (n - 1) // 2


def test_act_on_pairs():
    r = inversion_set(PI6)
    assert set(act_on_pairs(PI6, r)) == PI6_INVERSIONS  # self-image for this one
    assert act_on_pairs(identity(6), r).bits == r.bits
    assert act_on_pairs(omega(3), PairSet.from_pairs(3, [(1, 2)])).pairs() == ((2, 3),)
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 7)
        p = tuple(rng.sample(range(1, n + 1), n))
        bits = rng.getrandbits(pair_count(n))
        s = PairSet(n, bits)
        image = act_on_pairs(p, s)
        assert len(image) == len(s)
        assert act_on_pairs(inverse(p), image).bits == s.bits
    with pytest.raises(ValueError):
        act_on_pairs(identity(4), PairSet.empty(5))


def test_is_inversion_set_values():
    bad = PairSet.from_pairs(6, [(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5)])
    assert not is_inversion_set(bad)  # betweenness fails at (1, 6)
    assert is_inversion_set(PairSet.empty(4))
    assert not is_inversion_set(PairSet.from_pairs(3, [(1, 2), (2, 3)]))  # needs (1, 3)
    assert is_inversion_set(PairSet.full(5))


def test_is_inversion_set_matches_enumeration_small():
    # all subsets at n <= 4 against the set of realised inversion sets
    for n in (2, 3, 4):
        realised = {inversion_set(p).bits for p in all_permutations(n)}
        for bits in range(1 << pair_count(n)):
            assert is_inversion_set(PairSet(n, bits)) == (bits in realised)


def test_permutation_from_inversions_values():
    s = PairSet.from_pairs(
        8, [(1, 3), (2, 3), (2, 4), (2, 5), (2, 7), (2, 8), (6, 7), (6, 8)]
    )
    assert permutation_from_inversions(s) == (2, 7, 1, 3, 4, 8, 5, 6)
    assert permutation_from_inversions(PairSet.empty(5)) == identity(5)
    assert permutation_from_inversions(PairSet.from_pairs(3, [(1, 2)])) == (2, 1, 3)
    with pytest.raises(ValueError):
        permutation_from_inversions(PairSet.from_pairs(3, [(1, 2), (2, 3)]))


def test_permutation_from_inversions_roundtrip():
    for n in range(1, 6):
        for p in all_permutations(n):
            assert permutation_from_inversions(inversion_set(p)) == p


def test_compose_via_inversions():
    s1, s2 = adjacent_transposition(3, 1), adjacent_transposition(3, 2)
    got = compose_via_inversions(inversion_set(s1), s1, inversion_set(s2))
    assert got.pairs() == ((1, 2), (1, 3))
    # inverse pairs cancel; identity on the left passes the right through
    for p in all_permutations(4):
        r = inversion_set(p)
        assert compose_via_inversions(r, p, inversion_set(inverse(p))).bits == 0
        assert compose_via_inversions(inversion_set(identity(4)), identity(4), r).bits == r.bits


def test_compose_via_inversions_exhaustive():
    for n in (4, 5):
        perms = list(all_permutations(n))
        inv = {p: inversion_set(p) for p in perms}
        for p, q in itertools.product(perms, perms):
            got = compose_via_inversions(inv[p], p, inv[q])
            assert got.bits == inv[compose(p, q)].bits


def test_length():
    assert length(identity(6)) == 0
    assert length(omega(6)) == 15
    for p in all_permutations(5):
        assert length(p) == len(inversion_set(p))
