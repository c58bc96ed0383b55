"""Removable letter pairs and iterated pair deletion.

Positions (i, j) in a signed word form a removable pair when the two
letters carry opposite exponents and deleting both leaves a word for the
same group element.  With P_k the element of the length-k prefix this is
the cached-prefix test P_i^-1 P_{j+1} = P_{i+1}^-1 P_j, which needs no
assumption on the whole word.

Besides the quadratic scan over all pairs, this module has two
constructive finders (a cyclic-conjugation argument for two-atom contexts
and a prefix-division argument for fractions of simple words), the index
transfer that moves a pair across a cyclic conjugation, and ``unbraid``,
which deletes pairs until none is left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .contexts import GarsideContext
from .elements import divide, g_mul, group_element, is_trivial, normalize, simple
from .valuation import valuation_sequence
from .words import (
    Letter,
    Word,
    cyclic_shift,
    flip,
    format_word,
    parse_word,
    signed_letters,
    word,
)

Wordish = Union[str, Sequence[Letter]]


def _as_word(w: Wordish) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    return word(w)


@dataclass(frozen=True)
class RemovablePair:
    """A deletable pair of letters: w[i] = sigma^e and w[j] = tau^-e.

    ``verified`` is set only after an equivalence check has confirmed that
    deleting both letters preserves the element.
    """

    i: int
    j: int
    sigma: int
    tau: int
    e: int
    verified: bool = False


def _pair_at(w: Word, i: int, j: int, verified: bool) -> RemovablePair:
    return RemovablePair(
        i=i, j=j, sigma=w[i][0], tau=w[j][0], e=w[i][1], verified=verified
    )


def pair_json(w: Wordish, pair: RemovablePair) -> str:
    """One JSON line per pair report: {word, i, j, sigma, tau, e, verified}."""
    w = _as_word(w)
    return json.dumps(
        {
            "word": format_word(w),
            "i": pair.i,
            "j": pair.j,
            "sigma": format_word(((pair.sigma, 1),)),
            "tau": format_word(((pair.tau, 1),)),
            "e": pair.e,
            "verified": pair.verified,
        }
    )


def delete_pair(w: Wordish, i: int, j: int) -> Word:
    """The word minus the letters at i and j (remaining order unchanged).

    >>> format_word(delete_pair("abcd", 1, 2))
    'ad'
    """
    w = _as_word(w)
    if not 0 <= i < j < len(w):
        raise IndexError(f"pair ({i}, {j}) out of range for length {len(w)}")
    return w[:i] + w[i + 1 : j] + w[j + 1 :]


def is_removable_pair(w: Wordish, i: int, j: int, ctx: GarsideContext) -> bool:
    """Whether deleting w[i] and w[j] preserves the group element.

    False (not an error) when the exponents are not opposite.  The check
    compares element(w[i..j]) against element(w[i+1..j-1]).
    """
    w = _as_word(w)
    if not 0 <= i < j < len(w):
        raise IndexError(f"pair ({i}, {j}) out of range for length {len(w)}")
    if w[i][1] != -w[j][1]:
        return False
    eng = ctx.engine
    letters = signed_letters(w)
    return eng.from_letters(letters[i : j + 1]) == eng.from_letters(
        letters[i + 1 : j]
    )


def find_removable_pairs(
    w: Wordish, ctx: GarsideContext, first_only: bool = False
) -> list[RemovablePair]:
    """Every removable pair of w in lexicographic (i, j) order.

    One pass builds the prefix elements; each candidate pair then costs two
    single-letter multiplications.  ``first_only`` stops at the first hit,
    which is what the counterexample search wants.
    """
    w = _as_word(w)
    hits = ctx.engine.pair_scan(signed_letters(w), first_only=first_only)
    return [_pair_at(w, i, j, True) for i, j in hits]


@dataclass(frozen=True)
class UnbraidResult:
    success: bool
    steps: tuple[tuple[Word, RemovablePair], ...]
    residual: Word

    @property
    def nsteps(self) -> int:
        return len(self.steps)


def unbraid(w: Wordish, ctx: GarsideContext, strategy: str = "leftmost") -> UnbraidResult:
    """Delete removable pairs until none remains.

    ``leftmost`` takes the lexicographically first pair each round,
    ``innermost`` the one with the smallest gap j - i (ties leftmost).
    Success means the residual is empty; each deletion preserves the
    element, so every intermediate word stays equivalent to w.
    """
    if strategy not in ("leftmost", "innermost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cur = _as_word(w)
    steps: list[tuple[Word, RemovablePair]] = []
    while True:
        pairs = find_removable_pairs(cur, ctx, first_only=strategy == "leftmost")
        if not pairs:
            break
        if strategy == "leftmost":
            pick = pairs[0]
        else:
            pick = min(pairs, key=lambda p: (p.j - p.i, p.i))
        steps.append((cur, pick))
        cur = delete_pair(cur, pick.i, pick.j)
    return UnbraidResult(success=not cur, steps=tuple(steps), residual=cur)


def transfer_pair(
    u_len: int, w: Wordish, pair: RemovablePair, ctx: GarsideContext
) -> RemovablePair:
    """Map a pair removable in the cyclic conjugate vu back into w = uv.

    Pairs lying inside v or inside u keep their interior letter for letter
    and map directly.  A straddling pair (endpoint in v, endpoint in u)
    comes back with the endpoints swapped around the seam: the letter
    inside u becomes the opening endpoint, the one inside v the closing
    endpoint, with the exponent convention flipped accordingly.
    """
    w = _as_word(w)
    n = len(w)
    if not 0 <= u_len <= n:
        raise IndexError(f"split point {u_len} out of range for length {n}")
    conj = w[u_len:] + w[:u_len]
    if not is_removable_pair(conj, pair.i, pair.j, ctx):
        raise ValueError(f"pair ({pair.i}, {pair.j}) is not removable in the conjugate")
    v_len = n - u_len
    if pair.j < v_len:
        i, j = pair.i + u_len, pair.j + u_len
    elif pair.i >= v_len:
        i, j = pair.i + u_len - n, pair.j + u_len - n
    else:
        i, j = pair.j + u_len - n, pair.i + u_len
    out = _pair_at(w, i, j, False)
    if not is_removable_pair(w, i, j, ctx):
        raise RuntimeError(
            f"transferred pair ({i}, {j}) failed to verify; "
            "the conjugation argument needs the word to represent a conjugacy-"
            "stable element (a trivial word always qualifies)"
        )
    return _pair_at(w, i, j, True)


def _two_atom_elements(ctx: GarsideContext):
    e = group_element((), ctx)
    by_letter = {}
    for a in (1, 2):
        by_letter[(a, 1)] = group_element(((a, 1),), ctx)
        by_letter[(a, -1)] = group_element(((a, -1),), ctx)
    return e, by_letter


def find_pair_dihedral(w: Wordish, ctx: GarsideContext) -> RemovablePair:
    """A removable pair of a nonempty trivial word over two atoms.

    Constructive: (1) an adjacent inverse pair on the same atom, linear or
    wrapping around the end, is returned at once.  (2) Otherwise some
    cyclically adjacent sign change runs negative-then-positive on distinct
    atoms (a trivial word carries both signs); atom-swap it to the shape
    atom1^-1 atom2 and conjugate it to the front.  (3) Walking the prefixes
    after the leading inverse letter, the valuations start in the
    second-atom-ahead region and end in the first-atom-ahead region, so
    some strictly interior prefix hits the diagonal (a Delta power); take
    the first.  (4) Of the two candidate pairs closing at that letter,
    opening either at the inverse letter or at the positive letter after
    it, the sign-compatible one verifies.  (5) The pair is conjugated back
    and re-checked on w itself.
    """
    w = _as_word(w)
    t = ctx.tables
    if t.natoms != 2:
        raise ValueError(
            f"context {ctx.key} has {t.natoms} atoms; this finder needs a "
            "two-atom context (a dihedral one, or braid:3)"
        )
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no removable pair")
    if not is_trivial(w, ctx):
        raise ValueError("word is not trivial; no pair is guaranteed")

    for k in range(n - 1):
        if w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]:
            return _pair_at(w, k, k + 1, True)
    if n >= 2 and w[n - 1][0] == w[0][0] and w[n - 1][1] == -w[0][1]:
        assert is_removable_pair(w, 0, n - 1, ctx)
        return _pair_at(w, 0, n - 1, True)

    start = next(
        (k for k in range(n) if w[k][1] < 0 < w[(k + 1) % n][1]),
        None,
    )
    assert start is not None, "a trivial nonempty word has letters of both signs"

    flipped = w[start][0] == 2
    base = flip(w, 2)[0] if flipped else w
    h, shift_map = cyclic_shift(base, start)
    assert h[0] == (1, -1) and h[1][1] == 1 and h[1][0] == 2

    e, by_letter = _two_atom_elements(ctx)
    q = e
    hit = None
    for r in range(1, n - 1):
        q = g_mul(q, by_letter[h[r]])
        if r >= 2:
            vs = valuation_sequence(q)
            if vs[0] == vs[1]:
                hit = r
                break
    assert hit is not None, (
        "prefixes run from the second-atom region to the first-atom region, "
        "which the diagonal separates"
    )
    assert q.body == (), "a diagonal element of a two-atom context is a Delta power"

    candidates = [(0, hit), (1, hit)]
    good = [
        (i, j) for i, j in candidates if is_removable_pair(h, i, j, ctx)
    ]
    assert good, "one of the two candidate pairs must verify"
    pair_h = _pair_at(h, good[0][0], good[0][1], True)

    pair_base = transfer_pair(start, base, pair_h, ctx)
    out = _pair_at(w, pair_base.i, pair_base.j, False)
    assert is_removable_pair(w, out.i, out.j, ctx)
    return _pair_at(w, out.i, out.j, True)


def find_pair_simple_fraction(
    u: Wordish, v: Wordish, ctx: GarsideContext
) -> RemovablePair:
    """A removable pair of u^-1 v for equivalent positive simple words u, v.

    With sigma the first letter of u, the shortest prefix of v that sigma
    left-divides ends at the closing letter; the opening letter is the
    sigma^-1 closing u^-1.  The exchange property of simples guarantees the
    pair, and the result is re-verified before returning.
    """
    u, v = _as_word(u), _as_word(v)
    if not u or not v:
        raise ValueError("both fraction halves must be nonempty")
    if any(e != 1 for _, e in u) or any(e != 1 for _, e in v):
        raise ValueError("both fraction halves must be positive words")
    eng = ctx.engine
    for name, part in (("u", u), ("v", v)):
        d, fs = eng.from_letters(signed_letters(part))
        if not ((d == 0 and len(fs) == 1) or (d == 1 and not fs)):
            raise ValueError(f"{name} must spell a simple element")
    if eng.from_letters(signed_letters(u)) != eng.from_letters(signed_letters(v)):
        raise ValueError("fraction halves spell different elements")

    sigma = simple(ctx, ctx.tables.atom_simple[u[0][0] - 1])
    k = None
    for m in range(1, len(v) + 1):
        if divide(normalize(v[:m], ctx), sigma, "left") is not None:
            k = m
            break
    assert k is not None, "sigma divides element(v) = element(u)"

    frac = tuple((a, -e) for a, e in reversed(u)) + v
    i, j = len(u) - 1, len(u) + k - 1
    assert is_removable_pair(frac, i, j, ctx)
    return _pair_at(frac, i, j, True)


def fraction_word(u: Wordish, v: Wordish) -> Word:
    """The word u^-1 v that find_pair_simple_fraction indexes into."""
    u, v = _as_word(u), _as_word(v)
    return tuple((a, -e) for a, e in reversed(u)) + v


# A 34-letter word that is trivial in braid:4 yet contains no removable
# pair; it is seed_word("aabbb", "ccbbb") from the reversing module, the
# unique hit (up to symmetry) of the exhaustive search over simple pairs
# of length 5.
NO_PAIR_TRIVIAL_B4 = "ABBCABBACBBCBBBAAccbbbabbacbbcabbc"
