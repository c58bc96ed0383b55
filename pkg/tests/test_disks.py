"""Removable pairs: scan, constructive finders, transfer, unbraiding."""

import json

import pytest

from garside.contexts import braid_context, dihedral_context
from garside.disks import (
    NO_PAIR_TRIVIAL_B4,
    RemovablePair,
    delete_pair,
    find_pair_dihedral,
    find_pair_simple_fraction,
    find_removable_pairs,
    fraction_word,
    is_removable_pair,
    pair_json,
    transfer_pair,
    unbraid,
)
from garside.elements import is_trivial
from garside.reversing import random_trivial_word
from garside.words import format_word, parse_word

B3 = braid_context(3)
B4 = braid_context(4)
D2 = dihedral_context(2)
D4 = dihedral_context(4)


def indices(pairs):
    return [(p.i, p.j) for p in pairs]


# -- the quadratic scan


def test_scan_pins():
    pairs = find_removable_pairs("aA", B3)
    assert indices(pairs) == [(0, 1)]
    assert pairs[0] == RemovablePair(i=0, j=1, sigma=1, tau=1, e=1, verified=True)
    assert indices(find_removable_pairs("ABAbab", B3)) == [(0, 3), (2, 5)]
    assert find_removable_pairs("ab", B3) == []
    assert find_removable_pairs("", B3) == []
    assert indices(find_removable_pairs("ABAbab", B3, first_only=True)) == [(0, 3)]


def test_scan_matches_definition():
    w = parse_word("ABAbab")
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            expected = (i, j) in {(0, 3), (2, 5)}
            assert is_removable_pair(w, i, j, B3) == expected


def test_delete_pair():
    assert format_word(delete_pair("abcd", 1, 2)) == "ad"
    assert format_word(delete_pair("aA", 0, 1)) == ""
    with pytest.raises(IndexError):
        delete_pair("abcd", 2, 2)
    with pytest.raises(IndexError):
        delete_pair("abcd", -1, 2)
    with pytest.raises(IndexError):
        delete_pair("abcd", 1, 4)


def test_is_removable_pair_contract():
    # same sign is a plain False, not an error
    assert is_removable_pair("aa", 0, 1, B3) is False
    assert is_removable_pair("aA", 0, 1, B3) is True
    # opposite signs but wrong element
    assert is_removable_pair("aB", 0, 1, B3) is False
    with pytest.raises(IndexError):
        is_removable_pair("aA", 0, 2, B3)
    with pytest.raises(IndexError):
        is_removable_pair("aA", 1, 0, B3)


def test_pair_json():
    pair = find_removable_pairs("ABAbab", B3)[0]
    rec = json.loads(pair_json("ABAbab", pair))
    assert rec == {
        "word": "ABAbab",
        "i": 0,
        "j": 3,
        "sigma": "a",
        "tau": "b",
        "e": -1,
        "verified": True,
    }


# -- unbraid


def test_unbraid_success():
    res = unbraid("ABAbab", B3)
    assert res.success
    assert res.residual == ()
    assert res.nsteps == 3
    assert res.steps[0][0] == parse_word("ABAbab")
    assert (res.steps[0][1].i, res.steps[0][1].j) == (0, 3)
    # every recorded intermediate word is still trivial
    for w, _ in res.steps:
        assert is_trivial(w, B3)


def test_unbraid_strategies_differ():
    # (0, 3) comes first lexicographically, (1, 2) has the smaller gap
    left = unbraid("abBA", B3, strategy="leftmost")
    inner = unbraid("abBA", B3, strategy="innermost")
    assert (left.steps[0][1].i, left.steps[0][1].j) == (0, 3)
    assert (inner.steps[0][1].i, inner.steps[0][1].j) == (1, 2)
    assert left.success and inner.success
    assert left.nsteps == inner.nsteps == 2
    with pytest.raises(ValueError):
        unbraid("aA", B3, strategy="outermost")


def test_unbraid_nontrivial_word_stalls():
    res = unbraid("ab", B3)
    assert not res.success
    assert res.nsteps == 0
    assert res.residual == parse_word("ab")


def test_unbraid_witness_is_stuck():
    res = unbraid(NO_PAIR_TRIVIAL_B4, B4)
    assert not res.success
    assert res.nsteps == 0
    assert res.residual == parse_word(NO_PAIR_TRIVIAL_B4)


def test_no_pair_witness_shape():
    w = parse_word(NO_PAIR_TRIVIAL_B4)
    assert len(w) == 34
    assert is_trivial(w, B4)
    assert find_removable_pairs(w, B4) == []


# -- transfer across a cyclic conjugation


def test_transfer_inside_v():
    # w = uv with u = "aA", v = "bB"; the pair sits inside v
    conj_pair = find_removable_pairs("bBaA", B3)[0]
    assert (conj_pair.i, conj_pair.j) == (0, 1)
    out = transfer_pair(2, "aAbB", conj_pair, B3)
    assert (out.i, out.j) == (2, 3)
    assert out.verified


def test_transfer_inside_u():
    conj_pair = RemovablePair(i=2, j=3, sigma=1, tau=1, e=1)
    assert is_removable_pair("bBaA", 2, 3, B3)
    out = transfer_pair(2, "aAbB", conj_pair, B3)
    assert (out.i, out.j) == (0, 1)


def test_transfer_straddle():
    # conjugating "bABa" by its length-2 prefix gives "BabA", whose pair
    # (0, 2) straddles the seam; going back swaps the endpoint roles
    w = "bABa"
    conj_pair = find_removable_pairs("BabA", D2)[0]
    assert (conj_pair.i, conj_pair.j) == (0, 2)
    assert conj_pair.e == -1
    out = transfer_pair(2, w, conj_pair, D2)
    assert (out.i, out.j) == (0, 2)
    assert (out.sigma, out.tau, out.e) == (2, 2, 1)
    assert is_removable_pair(w, out.i, out.j, D2)


def test_transfer_rejects_bad_input():
    with pytest.raises(IndexError):
        transfer_pair(5, "aAbB", RemovablePair(0, 1, 1, 1, 1), B3)
    # (0, 2) is not removable in the conjugate "bBaA"
    with pytest.raises(ValueError):
        transfer_pair(2, "aAbB", RemovablePair(0, 2, 2, 1, 1), B3)


# -- the two-atom constructive finder


def test_dihedral_finder_adjacent():
    pair = find_pair_dihedral("aA", D4)
    assert (pair.i, pair.j) == (0, 1)
    pair = find_pair_dihedral("AabB", D4)
    assert (pair.i, pair.j, pair.e) == (0, 1, -1)


def test_dihedral_finder_wraparound():
    # no adjacent inverse pair inside, but the ends close one up
    for w, ctx in (("aabABA", D2), ("aabaBABA", B3)):
        assert is_trivial(w, ctx)
        pair = find_pair_dihedral(w, ctx)
        assert (pair.i, pair.j) == (0, len(w) - 1)
        assert is_removable_pair(w, pair.i, pair.j, ctx)


def test_dihedral_finder_needs_two_atoms():
    with pytest.raises(ValueError, match="two-atom"):
        find_pair_dihedral("aA", B4)


def test_dihedral_finder_rejects_bad_words():
    with pytest.raises(ValueError, match="empty"):
        find_pair_dihedral("", D4)
    with pytest.raises(ValueError, match="not trivial"):
        find_pair_dihedral("ab", D4)


def test_dihedral_finder_randomized():
    """The finder always produces a verified pair on random trivial words."""
    for m in (2, 3, 4, 5):
        ctx = dihedral_context(m)
        for seed in range(25):
            w = random_trivial_word(ctx, ops=8, rng_seed=seed)
            if not w:
                continue
            pair = find_pair_dihedral(w, ctx)
            assert 0 <= pair.i < pair.j < len(w)
            assert pair.verified
            assert is_removable_pair(w, pair.i, pair.j, ctx)
            assert is_trivial(delete_pair(w, pair.i, pair.j), ctx)


def test_dihedral_finder_on_braid3():
    for seed in range(15):
        w = random_trivial_word(B3, ops=10, rng_seed=seed)
        if not w:
            continue
        pair = find_pair_dihedral(w, B3)
        assert is_removable_pair(w, pair.i, pair.j, B3)


# -- the simple-fraction finder


def test_fraction_word():
    assert fraction_word("ab", "ba") == parse_word("BAba")
    assert fraction_word("a", "a") == parse_word("Aa")


def test_simple_fraction_pins():
    pair = find_pair_simple_fraction("aba", "bab", B3)
    assert (pair.i, pair.j) == (2, 5)
    assert fraction_word("aba", "bab") == parse_word("ABAbab")

    pair = find_pair_simple_fraction("a", "a", B3)
    assert (pair.i, pair.j) == (0, 1)

    pair = find_pair_simple_fraction("ab", "ab", B4)
    assert (pair.i, pair.j) == (1, 2)
    assert fraction_word("ab", "ab") == parse_word("BAab")


def test_simple_fraction_exhaustive_small():
    """Every equal pair of simple spellings up to length 3 in braid:3."""
    import itertools

    from garside.elements import normalize

    spellings = {}
    for n in range(1, 4):
        for w in itertools.product("ab", repeat=n):
            s = "".join(w)
            el = normalize(s, B3)
            if el.canonical_length <= 1:
                spellings.setdefault(el, []).append(s)
    checked = 0
    for group in spellings.values():
        for u, v in itertools.product(group, repeat=2):
            p = find_pair_simple_fraction(u, v, B3)
            frac = fraction_word(u, v)
            assert is_removable_pair(frac, p.i, p.j, B3)
            assert p.i == len(u) - 1
            checked += 1
    assert checked >= 8


def test_simple_fraction_contract():
    with pytest.raises(ValueError, match="nonempty"):
        find_pair_simple_fraction("", "a", B3)
    with pytest.raises(ValueError, match="positive"):
        find_pair_simple_fraction("Ab", "ab", B3)
    with pytest.raises(ValueError, match="simple"):
        find_pair_simple_fraction("aa", "aa", B3)
    with pytest.raises(ValueError, match="different elements"):
        find_pair_simple_fraction("a", "b", B3)
