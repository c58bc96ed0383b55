"""Subword reversing, seed words, the search, and random trivial words."""

import random
from pathlib import Path

import pytest

from garside.contexts import braid_context, dihedral_context
from garside.disks import NO_PAIR_TRIVIAL_B4, find_removable_pairs
from garside.elements import is_trivial, lcm, normalize
from garside.reversing import (
    SEARCH_GUARD,
    random_trivial_word,
    reverse,
    search_counterexamples,
    seed_word,
)
from garside.words import format_word, parse_word

B3 = braid_context(3)
B4 = braid_context(4)

GOLDEN = Path(__file__).parent / "golden"


# -- reversing


def test_reverse_pins():
    r = reverse("a", "b", B3)
    assert format_word(r.u_prime) == "ab"
    assert format_word(r.v_prime) == "ba"
    assert str(r.lcm) == "D"

    r = reverse("a", "a", B3)
    assert r.u_prime == ()
    assert r.v_prime == ()
    assert r.lcm == normalize("a", B3)

    # commuting atoms reverse to a plain swap
    r = reverse("a", "c", B4)
    assert format_word(r.u_prime) == "a"
    assert format_word(r.v_prime) == "c"


def test_reverse_closes_the_square():
    """u.v' and v.u' both spell lcm(u, v)."""
    rng = random.Random(5)
    for ctx in (B3, B4):
        for _ in range(40):
            u = "".join(rng.choice(ctx.atom_names) for _ in range(rng.randrange(1, 6)))
            v = "".join(rng.choice(ctx.atom_names) for _ in range(rng.randrange(1, 6)))
            r = reverse(u, v, ctx)
            left = normalize(parse_word(u) + r.v_prime, ctx)
            right = normalize(parse_word(v) + r.u_prime, ctx)
            assert left == right == r.lcm
            assert r.lcm == lcm(normalize(u, ctx), normalize(v, ctx), side="right")


def test_reverse_is_picker_independent():
    rng = random.Random(11)
    for _ in range(30):
        u = "".join(rng.choice("ab") for _ in range(rng.randrange(1, 6)))
        v = "".join(rng.choice("ab") for _ in range(rng.randrange(1, 6)))
        base = reverse(u, v, B3)
        for trial in range(4):
            picker = random.Random(1009 * trial + len(u) + 31 * len(v))
            out = reverse(u, v, B3, pick=picker.choice)
            assert out == base


def test_reverse_contract():
    with pytest.raises(ValueError, match="positive"):
        reverse("A", "b", B3)
    with pytest.raises(ValueError, match="out of range"):
        reverse(((3, 1),), "a", B3)
    with pytest.raises(ValueError, match="not a reversible position"):
        reverse("a", "b", B3, pick=lambda spots: -7)
    with pytest.raises(RuntimeError, match="did not terminate"):
        reverse("a", "b", B3, max_steps=0)


# -- seed words


def test_seed_word_pins():
    assert format_word(seed_word("a", "b", B3)) == "ABAbab"
    assert format_word(seed_word("aabbb", "ccbbb", B4)) == NO_PAIR_TRIVIAL_B4
    assert seed_word("aabbb", "ccbbb", B4) == parse_word(NO_PAIR_TRIVIAL_B4)


def test_seed_words_are_trivial_with_seam_reduction_iff_same_head():
    """Seed words are trivial, and the only possible free reduction sits at
    the u^-1 v seam, exactly when u and v begin with the same atom."""
    rng = random.Random(23)
    for ctx in (B3, B4):
        for _ in range(30):
            u = "".join(rng.choice(ctx.atom_names) for _ in range(rng.randrange(1, 5)))
            v = "".join(rng.choice(ctx.atom_names) for _ in range(rng.randrange(1, 5)))
            w = seed_word(u, v, ctx)
            assert is_trivial(w, ctx)
            reductions = [
                k
                for k in range(len(w) - 1)
                if w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]
            ]
            if u[0] == v[0]:
                seam = len(w) - len(reverse(u, v, ctx).u_prime) - len(v) - 1
                assert reductions == [seam]
            else:
                assert reductions == []


# -- the search


def test_search_small_lengths():
    for length, expected in ((1, 3), (2, 36), (3, 351)):
        report = search_counterexamples(4, length)
        assert report.pairs_examined == expected
        assert report.counterexamples == ()
        assert report.strands == 4
        assert report.length == length
        assert report.elapsed >= 0


def test_search_jobs_do_not_change_the_report():
    serial = search_counterexamples(4, 2)
    forked = search_counterexamples(4, 2, jobs=2)
    assert serial.canonical_json() == forked.canonical_json()
    wide = search_counterexamples(4, 1, jobs=8)
    assert wide.canonical_json() == search_counterexamples(4, 1).canonical_json()


def test_search_dedupe_counts():
    # 36 pairs fall into 20 mirror orbits: 4 are mirror-fixed, 32 pair up
    report = search_counterexamples(4, 2, dedupe_symmetry=True)
    assert report.pairs_examined == 20
    assert report.counterexamples == ()
    both = search_counterexamples(4, 2, dedupe_symmetry=True, jobs=2)
    assert both.canonical_json() == report.canonical_json()


def test_search_guard():
    with pytest.raises(ValueError, match="force=True"):
        search_counterexamples(4, 9)
    assert 3**9 > SEARCH_GUARD


def test_search_validation():
    with pytest.raises(ValueError, match="at least 3 strands"):
        search_counterexamples(2, 3)
    with pytest.raises(ValueError, match="at least 1"):
        search_counterexamples(4, 0)


def test_canonical_json_shape():
    report = search_counterexamples(4, 1)
    assert (
        report.canonical_json()
        == '{"strands": 4, "length": 1, "pairs_examined": 3, '
        '"dedupe_symmetry": false, "counterexamples": []}'
    )


# -- random trivial words


def test_random_trivial_word_golden():
    w = random_trivial_word(dihedral_context(3), ops=20, rng_seed=42)
    expected = (GOLDEN / "random_trivial_i2_3_ops20_seed42.txt").read_text().strip()
    assert format_word(w) == expected


def test_random_trivial_word_properties():
    for ctx in (B3, B4, dihedral_context(4)):
        for seed in range(20):
            w = random_trivial_word(ctx, ops=9, rng_seed=seed)
            assert is_trivial(w, ctx)
            assert len(w) <= 18
            assert w == random_trivial_word(ctx, ops=9, rng_seed=seed)
    assert random_trivial_word(B3, ops=0) == ()
    with pytest.raises(ValueError):
        random_trivial_word(B3, ops=-1)
