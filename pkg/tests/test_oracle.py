import itertools
import json
import random

import pytest

from braidnf.lattice import InversionSet, complement
from braidnf.normalform import PositiveWord, gs_rewrite_to_fixpoint, rewrite_pair_at
from braidnf.oracle import (
    VerificationReport,
    brute_meet,
    brute_validity,
    conserves_crossings,
    strand_crossings,
    verify_confluence,
    verify_gsb,
    verify_meet,
    verify_stop,
    verify_strand_lemma,
    verify_validity,
)
from braidnf.perms import PairSet, all_permutations, compose, inverse, omega
from braidnf.simple import SimpleBraid, identity_braid, omega_braid


def inv(p):
    return InversionSet.from_permutation(p)


def test_brute_meet_values():
    a, b = (3, 5, 4, 2, 6, 1), (5, 3, 6, 1, 4, 2)
    got = brute_meet(inv(inverse(a)), inv(compose(b, omega(6))))
    assert got.listing() == ((1, 3), (2, 3), (2, 5), (4, 5))
    r = inv((4, 2, 6, 1, 5, 3))
    assert brute_meet(r, r).bits == r.bits
    gap = brute_meet(inv(inverse((3, 5, 4, 2, 6, 1))), complement(inv((2, 1, 5, 6, 3, 4))))
    assert (2, 3) in gap and len(gap) > 0
    with pytest.raises(ValueError):
        big = inv(tuple(range(1, 9)))
        brute_meet(big, big)


def test_brute_validity():
    assert brute_validity(PairSet.empty(3))
    assert not brute_validity(PairSet.from_pairs(3, [(1, 2), (2, 3)]))
    assert brute_validity(PairSet.full(4))


# Three six-strand factors whose per-strand-pair crossing log was read off
# a hand-drawn diagram; the last entry of the third factor is pinned by
# bijectivity.
W3_A = (5, 3, 6, 1, 2, 4)
W3_B = (3, 4, 5, 1, 2, 6)
W3_C = (4, 5, 1, 6, 2, 3)


def test_strand_crossings_fixed_word():
    word = PositiveWord(6, (SimpleBraid(W3_A), SimpleBraid(W3_B), SimpleBraid(W3_C)))
    assert strand_crossings(word, 1, 2) == (True, True, True)
    assert strand_crossings(word, 1, 6) == (True, False, False)
    with pytest.raises(ValueError):
        strand_crossings(word, 2, 2)
    with pytest.raises(ValueError):
        strand_crossings(word, 0, 3)


def test_strand_crossings_trivial_factors():
    full = PositiveWord(4, (omega_braid(4),))
    empty = PositiveWord(4, (identity_braid(4),))
    for s, t in itertools.combinations(range(1, 5), 2):
        assert strand_crossings(full, s, t) == (True,)
        assert strand_crossings(empty, s, t) == (False,)


def test_strand_crossing_totals_invariant_under_rewrites():
    rng = random.Random(67)
    for _ in range(100):
        n = rng.randint(2, 6)
        letters = tuple(
            SimpleBraid(tuple(rng.sample(range(1, n + 1), n)))
            for _ in range(rng.randint(2, 6))
        )
        w = PositiveWord(n, letters)
        i = rng.randrange(len(letters) - 1)
        after = rewrite_pair_at(w, i)
        for s, t in itertools.combinations(range(1, n + 1), 2):
            assert sum(strand_crossings(w, s, t)) == sum(strand_crossings(after, s, t))


def test_conserves_crossings():
    s1 = (2, 1, 3)
    ident = (1, 2, 3)
    assert conserves_crossings(s1, ident, ident, s1)
    # cancelling a double crossing changes the count and must be rejected
    assert not conserves_crossings(s1, s1, ident, ident)
    # different products are always rejected
    assert not conserves_crossings(s1, ident, ident, ident)


def test_verify_strand_lemma():
    for n in (2, 3):
        report = verify_strand_lemma(n)
        assert report.passed, report.failures[:3]
    with pytest.raises(ValueError):
        verify_strand_lemma(5)


def test_verify_gsb_and_stop_small():
    for n in (2, 3):
        assert verify_gsb(n).passed
        assert verify_stop(n).passed
    sampled = verify_gsb(5, samples=300, seed=1)
    assert sampled.passed
    assert verify_stop(5, samples=300, seed=1).passed


def test_verify_confluence_small():
    report = verify_confluence(3, length=10, samples=300, seed=42)
    assert report.passed, report.failures[:3]
    assert report.cases == 300
    with pytest.raises(ValueError):
        verify_confluence(7)


def test_three_letter_words_close_for_all_s4_triples():
    # every way of resolving the overlapping pair in a three-letter word
    # ends at the same normal form
    braids = [SimpleBraid(p) for p in all_permutations(4)]
    for a, b, c in itertools.product(braids, braids, braids):
        w = PositiveWord(4, (a, b, c))
        assert gs_rewrite_to_fixpoint(w, "leftmost") == gs_rewrite_to_fixpoint(w, "rightmost")


def test_verify_meet_exhaustive_small():
    report = verify_meet(4)
    assert report.passed
    assert report.cases == 24 * 24
    sampled = verify_meet(6, samples=500, seed=9)
    assert sampled.passed
    with pytest.raises(ValueError):
        verify_meet(8)
    with pytest.raises(ValueError):
        verify_meet(6)  # needs samples above the exhaustive bound


def test_verify_validity():
    for n in (3, 4):
        report = verify_validity(n)
        assert report.passed
        assert report.cases == 1 << (n * (n - 1) // 2)
    with pytest.raises(ValueError):
        verify_validity(7)


def test_report_serialisation():
    report = VerificationReport("demo", 3, 10, [["item", (1, 2, 3)]])
    payload = json.loads(report.to_json())
    assert payload["suite"] == "demo"
    assert payload["n"] == 3
    assert payload["cases"] == 10
    assert payload["failure_count"] == 1
    assert not report.passed
    assert VerificationReport("demo", 3, 10, []).passed
