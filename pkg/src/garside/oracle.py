"""Word-problem oracle by exhaustive relation rewriting.

This is the independent check against the greedy normal-form kernels: it
never renormalizes factor pairs.  Positive words are compared by computing
the full rewriting closure of one side over the context's defining relations
and testing membership of the other; mixed words are first cleared to the
shape Delta^-k . positive by replacing each inverse letter with its
complement toward Delta.

Words here are plain strings over positional letters ('a' is atom 0 and so
on), independent of how a context displays its atoms.  Closures are exact:
in an atomic monoid every equivalence class is finite, so the breadth-first
expansion terminates; a state cap guards against malformed presentations.
"""

from __future__ import annotations

from typing import Sequence

from .tables import ContextTables


def atom_char(a: int) -> str:
    return chr(97 + a)


def word_str(t: ContextTables, s: int) -> str:
    return "".join(atom_char(a) for a in t.word[s])


def rewrite_closure(
    word: str,
    relations: Sequence[tuple[str, str]],
    max_states: int = 1_000_000,
    max_len: int | None = None,
) -> frozenset[str]:
    """Every positive word obtainable from ``word`` by applying relations.

    Relations are applied in both directions at every position, so the result
    is the whole equivalence class of ``word`` (intersected with the length
    cap when one is given).

    >>> sorted(rewrite_closure('aba', [('aba', 'bab')]))
    ['aba', 'bab']
    >>> sorted(rewrite_closure('bb', [('aba', 'bb')]))
    ['aba', 'bb']
    """
    rules = []
    for left, right in relations:
        rules.append((left, right))
        if right != left:
            rules.append((right, left))
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for left, right in rules:
            start = w.find(left)
            while start >= 0:
                nw = w[:start] + right + w[start + len(left):]
                if nw not in seen and (max_len is None or len(nw) <= max_len):
                    if len(seen) >= max_states:
                        raise RuntimeError(
                            "rewriting closure exceeded the state cap; "
                            "presentation may not be atomic"
                        )
                    seen.add(nw)
                    stack.append(nw)
                start = w.find(left, start + 1)
    return frozenset(seen)


def class_key(closure: frozenset[str]) -> tuple[int, str]:
    """Canonical label for an equivalence class: its shortlex-least word."""
    return min((len(w), w) for w in closure)


def atom_lcm_relations(t: ContextTables) -> list[tuple[str, str]]:
    """Defining relations read off the simple tables.

    For each atom pair the right lcm z is the norm-least simple both atoms
    left-divide; the relation equates the two complement routes into z.
    A Garside monoid is presented by these.
    """
    ns = t.nsimples
    rels = []
    for a in range(t.natoms):
        for b in range(a + 1, t.natoms):
            both = (1 << a) | (1 << b)
            cands = [s for s in range(ns) if t.ldesc[s] & both == both]
            least = min(t.norm[s] for s in cands)
            zs = [s for s in cands if t.norm[s] == least]
            assert len(zs) == 1, "atom pair with ambiguous least common multiple"
            z = zs[0]
            ua = t.lquot[a * ns + z]
            ub = t.lquot[b * ns + z]
            rels.append((atom_char(a) + word_str(t, ua), atom_char(b) + word_str(t, ub)))
    return rels


def _phi_inv_atom_map(t: ContextTables) -> list[int]:
    out = []
    for a in range(t.natoms):
        img = t.phi_inv[t.atom_simple[a]]
        w = t.word[img]
        assert len(w) == 1, "twist automorphism must permute the atoms"
        out.append(w[0])
    return out


def clear_negatives(t: ContextTables, letters: Sequence[int]) -> tuple[int, str]:
    """Rewrite a signed word as Delta^-k . (positive word), k >= 0.

    Each inverse letter s^-1 equals (s\\Delta) . Delta^-1; pushing the Delta
    inverse to the front twists the accumulated positive prefix atomwise.
    """
    phi_inv = _phi_inv_atom_map(t)
    ns = t.nsimples
    k = 0
    P: list[int] = []
    for x in letters:
        a = abs(x) - 1
        if not 0 <= a < t.natoms:
            raise ValueError(f"letter {x} out of range")
        if x > 0:
            P.append(a)
        else:
            s = t.atom_simple[a]
            P.extend(t.word[t.compl_r[s]])
            P = [phi_inv[c] for c in P]
            k += 1
    return k, "".join(atom_char(c) for c in P)


def oracle_equivalent(
    t: ContextTables,
    u: Sequence[int],
    v: Sequence[int],
    max_states: int = 1_000_000,
) -> bool:
    """Whether two signed words represent the same group element.

    Decided without the greedy machinery: clear negatives on both sides, pad
    the smaller Delta power, then compare positive words by rewriting
    closure.  Exact (the monoid embeds in its group of fractions).
    """
    ku, wu = clear_negatives(t, u)
    kv, wv = clear_negatives(t, v)
    # Delta^-ku wu = Delta^-kv wv reduces by left cancellation to a positive
    # comparison once the smaller power is padded; with equal powers no
    # padding is needed at all.
    dword = word_str(t, t.nsimples - 1)
    if ku < kv:
        wu = dword * (kv - ku) + wu
    elif kv < ku:
        wv = dword * (ku - kv) + wv
    if wu == wv:
        return True
    rels = atom_lcm_relations(t)
    if all(len(l) == len(r) for l, r in rels) and len(wu) != len(wv):
        return False
    if len(wv) < len(wu):
        wu, wv = wv, wu
    return wv in rewrite_closure(wu, rels, max_states=max_states)


def oracle_trivial(t: ContextTables, letters: Sequence[int], max_states: int = 1_000_000) -> bool:
    return oracle_equivalent(t, letters, (), max_states=max_states)
