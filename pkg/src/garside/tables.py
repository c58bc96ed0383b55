"""Finite simple-element tables for Garside contexts.

Everything the normal-form kernels need about a context is flattened into a
:class:`ContextTables` bundle: atom-indexed product/quotient tables over the
simple elements, descent bitmasks, complements toward the Garside element, and
the twist automorphism phi.  Simples are identified by integer index with two
fixed conventions: index 0 is the identity and index ``nsimples - 1`` is the
Garside element Delta.

Builders for the two closed-form families live here (braid groups via
permutations, dihedral Artin groups via alternating words).  Table-file
contexts are reconstructed in :mod:`garside.contexts`.

Permutations are tuples in word notation with 0-based values;
``compose(u, v)[i] == u[v[i]]``, so appending an atom to the end of a positive
word is composition on the right with that atom's transposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

# ---------------------------------------------------------------------------
# permutation helpers (braid simples)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def longest_perm(n: int) -> tuple[int, ...]:
    """The order-reversing permutation, image of Delta.

    >>> longest_perm(3)
    (2, 1, 0)
    """
    return tuple(range(n - 1, -1, -1))


def compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Apply v first, then u.

    >>> compose((1, 0, 2), (0, 2, 1))
    (1, 2, 0)
    """
    return tuple(u[v[i]] for i in range(len(u)))


def inverse_perm(u: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x] = i
    return tuple(out)


def inv_count(u: Sequence[int]) -> int:
    """Number of inversions = Coxeter length = atom norm of the lift.

    >>> inv_count((2, 1, 0))
    3
    """
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def right_descent_mask(u: Sequence[int]) -> int:
    """Bitmask of atoms a (0-based) with u[a] > u[a+1]."""
    mask = 0
    for a in range(len(u) - 1):
        if u[a] > u[a + 1]:
            mask |= 1 << a
    return mask


def shortlex_word(u: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for u (0-based atoms).

    >>> shortlex_word((2, 1, 0))
    (0, 1, 0)
    """
    cur = tuple(u)
    n = len(cur)
    out = []
    inv = inverse_perm(cur)
    while True:
        for a in range(n - 1):
            if inv[a] > inv[a + 1]:
                break
        else:
            return tuple(out)
        out.append(a)
        # strip the left descent: cur <- t_a . cur, tracked on the inverse
        inv = list(inv)
        inv[a], inv[a + 1] = inv[a + 1], inv[a]
        inv = tuple(inv)


# ---------------------------------------------------------------------------
# the table bundle


@dataclass(frozen=True)
class ContextTables:
    """Flat integer tables over the simples of one Garside context.

    Layout conventions: simple index 0 is the identity, index nsimples-1 is
    Delta.  Flat 2d tables are row-major: ``lmul[a * nsimples + s]`` is the
    index of (atom a) * s when that product is simple, else -1, and
    ``rmul[s * natoms + a]`` likewise for s * (atom a).  ``lquot`` / ``rquot``
    are the exact quotients defined where the descent bit is set.
    ``ldesc[s]`` / ``rdesc[s]`` are atom bitmasks of left / right divisors.
    ``compl_r[s]`` is s\\Delta (s * compl_r[s] = Delta) and ``compl_l[s]`` the
    mirror (compl_l[s] * s = Delta).  ``phi_pows`` holds phi^k for
    k = 0..phi_order-1, each a full permutation of the simples.
    """

    natoms: int
    nsimples: int
    norm: tuple[int, ...]
    word: tuple[tuple[int, ...], ...]
    atom_simple: tuple[int, ...]
    ldesc: tuple[int, ...]
    rdesc: tuple[int, ...]
    lmul: tuple[int, ...]
    rmul: tuple[int, ...]
    lquot: tuple[int, ...]
    rquot: tuple[int, ...]
    compl_r: tuple[int, ...]
    compl_l: tuple[int, ...]
    phi: tuple[int, ...]
    phi_inv: tuple[int, ...]
    phi_order: int
    phi_pows: tuple[tuple[int, ...], ...]
    renorm_x: Optional[tuple[int, ...]] = None
    renorm_y: Optional[tuple[int, ...]] = None

    @property
    def identity(self) -> int:
        return 0

    @property
    def delta(self) -> int:
        return self.nsimples - 1


def renorm_pair(t: ContextTables, x: int, y: int) -> tuple[int, int]:
    """Left-greedy renormalization of a pair of simples.

    Transfers atoms from the left of y onto the right of x while the product
    stays simple; the fixed point is (head(x*y), remainder).  Termination:
    every transfer strictly increases norm(x) <= norm(Delta).
    """
    natoms = t.natoms
    nsimples = t.nsimples
    while True:
        mask = t.ldesc[y]
        moved = False
        a = 0
        while mask:
            if mask & 1:
                nx = t.rmul[x * natoms + a]
                if nx >= 0:
                    x = nx
                    y = t.lquot[a * nsimples + y]
                    moved = True
                    break
            mask >>= 1
            a += 1
        if not moved:
            return x, y


def atom_complement_words(t: ContextTables) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Words a\\b for all atom pairs: a . (a\\b) = right-lcm(a, b).

    The right lcm of two atoms is the norm-least simple both left-divide;
    the complement is read off the left-quotient table.  Seed data for
    word reversing.
    """
    ns = t.nsimples
    rows = []
    for a in range(t.natoms):
        row = []
        for b in range(t.natoms):
            if a == b:
                row.append(())
                continue
            both = (1 << a) | (1 << b)
            cands = [s for s in range(ns) if t.ldesc[s] & both == both]
            least = min(t.norm[s] for s in cands)
            zs = [s for s in cands if t.norm[s] == least]
            assert len(zs) == 1, "atom pair with ambiguous right lcm"
            row.append(t.word[t.lquot[a * ns + zs[0]]])
        rows.append(tuple(row))
    return tuple(rows)


RENORM_TABLE_MAX = 1024


def with_renorm_table(t: ContextTables, cap: int = RENORM_TABLE_MAX) -> ContextTables:
    """Attach the precomputed pairwise renormalization table when affordable.

    The pairwise table is nsimples^2 entries; past the cap (braid groups on 7
    or 8 strands) the kernels fall back to the atom-transfer loop.
    """
    n = t.nsimples
    if n > cap or t.renorm_x is not None:
        return t
    rx = []
    ry = []
    for x in range(n):
        for y in range(n):
            a, b = renorm_pair(t, x, y)
            rx.append(a)
            ry.append(b)
    return ContextTables(
        **{
            **{f: getattr(t, f) for f in t.__dataclass_fields__},
            "renorm_x": tuple(rx),
            "renorm_y": tuple(ry),
        }
    )


def mirror_tables(t: ContextTables) -> ContextTables:
    """The reversed-multiplication view of the same monoid.

    Right-sided operations (right head, right division, right gcd, left lcm)
    are left-sided operations of the mirror.  Simple indices are unchanged;
    products swap sides, descents and complements swap roles, and phi becomes
    its inverse.  Display words are reversed.
    """
    na, ns = t.natoms, t.nsimples
    lmul = [-1] * (na * ns)
    lquot = [-1] * (na * ns)
    rmul = [-1] * (ns * na)
    rquot = [-1] * (ns * na)
    for a in range(na):
        for s in range(ns):
            lmul[a * ns + s] = t.rmul[s * na + a]
            lquot[a * ns + s] = t.rquot[s * na + a]
            rmul[s * na + a] = t.lmul[a * ns + s]
            rquot[s * na + a] = t.lquot[a * ns + s]
    order = t.phi_order
    pows = tuple(t.phi_pows[(-k) % order] for k in range(order))
    mirrored = ContextTables(
        natoms=na,
        nsimples=ns,
        norm=t.norm,
        word=tuple(tuple(reversed(w)) for w in t.word),
        atom_simple=t.atom_simple,
        ldesc=t.rdesc,
        rdesc=t.ldesc,
        lmul=tuple(lmul),
        rmul=tuple(rmul),
        lquot=tuple(lquot),
        rquot=tuple(rquot),
        compl_r=t.compl_l,
        compl_l=t.compl_r,
        phi=t.phi_inv,
        phi_inv=t.phi,
        phi_order=order,
        phi_pows=pows,
    )
    return with_renorm_table(mirrored) if t.renorm_x is not None else mirrored


def _finish(
    natoms: int,
    norm: list[int],
    word: list[tuple[int, ...]],
    atom_simple: list[int],
    ldesc: list[int],
    rdesc: list[int],
    lmul: list[int],
    rmul: list[int],
    lquot: list[int],
    rquot: list[int],
    compl_r: list[int],
    compl_l: list[int],
    phi: list[int],
) -> ContextTables:
    nsimples = len(norm)
    ident = tuple(range(nsimples))
    phi_t = tuple(phi)
    pows = [ident]
    cur = phi_t
    while cur != ident:
        pows.append(cur)
        cur = tuple(phi_t[s] for s in cur)
        if len(pows) > 2 * nsimples:
            raise AssertionError("phi does not have finite small order; tables corrupt")
    phi_inv = tuple(pows[-1][s] for s in range(nsimples)) if len(pows) > 1 else ident
    t = ContextTables(
        natoms=natoms,
        nsimples=nsimples,
        norm=tuple(norm),
        word=tuple(word),
        atom_simple=tuple(atom_simple),
        ldesc=tuple(ldesc),
        rdesc=tuple(rdesc),
        lmul=tuple(lmul),
        rmul=tuple(rmul),
        lquot=tuple(lquot),
        rquot=tuple(rquot),
        compl_r=tuple(compl_r),
        compl_l=tuple(compl_l),
        phi=phi_t,
        phi_inv=phi_inv,
        phi_order=len(pows),
        phi_pows=tuple(pows),
    )
    _validate(t)
    return with_renorm_table(t)


def _validate(t: ContextTables) -> None:
    """Structural sanity shared by all builders; cheap even at n = 8."""
    ns, na = t.nsimples, t.natoms
    assert t.norm[0] == 0 and len(t.word[0]) == 0, "index 0 must be the identity"
    delta = t.delta
    assert t.ldesc[delta] == (1 << na) - 1, "every atom must left-divide Delta"
    assert t.rdesc[delta] == (1 << na) - 1, "every atom must right-divide Delta"
    assert sorted(t.phi) == list(range(ns)), "phi must permute the simples"
    assert t.phi[delta] == delta and t.phi[0] == 0
    for s in range(ns):
        r = t.compl_r[s]
        assert t.norm[s] + t.norm[r] == t.norm[delta]
        assert t.compl_l[r] == s, "compl_l must invert compl_r"
        # phi(z) = (z \ Delta) \ Delta
        assert t.phi[s] == t.compl_r[t.compl_r[s]]
    for a in range(na):
        s = t.atom_simple[a]
        assert t.norm[s] == 1 and t.word[s] == (a,)


# ---------------------------------------------------------------------------
# braid tables: simples are the n! permutations


def braid_tables(n: int) -> ContextTables:
    """Tables for the braid group on n strands (2 <= n <= 8).

    Simples are permutation lifts; division is inversion-count arithmetic
    (a left-divides c iff inv(a) + inv(a^-1 c) = inv(c), which the descent
    masks encode atomwise).
    """
    if not 2 <= n <= 8:
        raise ValueError("braid table precomputation supports 2 <= n <= 8")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    natoms = n - 1
    nsimples = len(perms)
    w0 = longest_perm(n)
    trans = []
    for a in range(natoms):
        p = list(range(n))
        p[a], p[a + 1] = p[a + 1], p[a]
        trans.append(tuple(p))

    norm = []
    word = []
    ldesc = []
    rdesc = []
    compl_r = []
    compl_l = []
    phi = []
    lmul = [-1] * (natoms * nsimples)
    lquot = [-1] * (natoms * nsimples)
    rmul = [-1] * (nsimples * natoms)
    rquot = [-1] * (nsimples * natoms)

    for s, p in enumerate(perms):
        pinv = inverse_perm(p)
        norm.append(inv_count(p))
        word.append(shortlex_word(p))
        rmask = right_descent_mask(p)
        lmask = right_descent_mask(pinv)
        rdesc.append(rmask)
        ldesc.append(lmask)
        compl_r.append(index[compose(pinv, w0)])
        compl_l.append(index[compose(w0, pinv)])
        phi.append(index[compose(w0, compose(p, w0))])
        for a in range(natoms):
            left = index[compose(trans[a], p)]
            right = index[compose(p, trans[a])]
            if lmask >> a & 1:
                lquot[a * nsimples + s] = left
            else:
                lmul[a * nsimples + s] = left
            if rmask >> a & 1:
                rquot[s * natoms + a] = right
            else:
                rmul[s * natoms + a] = right

    atom_simple = [index[trans[a]] for a in range(natoms)]
    return _finish(
        natoms, norm, word, atom_simple, ldesc, rdesc,
        lmul, rmul, lquot, rquot, compl_r, compl_l, phi,
    )


# ---------------------------------------------------------------------------
# dihedral tables: simples are the 2m alternating subwords of Delta


def dihedral_tables(m: int) -> ContextTables:
    """Tables for the dihedral Artin group I2(m), m >= 2.

    A proper simple is determined by its first atom and its length k
    (1 <= k <= m-1); Delta is the alternating word of length m written from
    either atom.  All products and quotients have closed forms on those
    (first atom, length) pairs.
    """
    if m < 2:
        raise ValueError("dihedral parameter must be >= 2")
    natoms = 2
    nsimples = 2 * m
    delta = nsimples - 1

    def idx(f: int, k: int) -> int:
        if k == 0:
            return 0
        if k == m:
            return delta
        return 1 + 2 * (k - 1) + f

    def alt_word(f: int, k: int) -> tuple[int, ...]:
        return tuple((f + i) % 2 for i in range(k))

    def last(f: int, k: int) -> int:
        return f if k % 2 == 1 else 1 - f

    keys: list[tuple[int, int]] = [(0, 0)]
    for k in range(1, m):
        keys.append((0, k))
        keys.append((1, k))
    keys.append((0, m))

    norm = []
    word = []
    ldesc = []
    rdesc = []
    compl_r = []
    compl_l = []
    lmul = [-1] * (natoms * nsimples)
    lquot = [-1] * (natoms * nsimples)
    rmul = [-1] * (nsimples * natoms)
    rquot = [-1] * (nsimples * natoms)

    for s, (f, k) in enumerate(keys):
        norm.append(k)
        word.append(alt_word(f, k))
        if k == 0:
            ldesc.append(0)
            rdesc.append(0)
            compl_r.append(delta)
            compl_l.append(delta)
        elif k == m:
            ldesc.append(0b11)
            rdesc.append(0b11)
            compl_r.append(0)
            compl_l.append(0)
        else:
            ldesc.append(1 << f)
            rdesc.append(1 << last(f, k))
            nxt = f if k % 2 == 0 else 1 - f
            compl_r.append(idx(nxt, m - k))
            j = m - k
            compl_l.append(idx(1 - f if j % 2 == 1 else f, j))
        for a in range(natoms):
            if k == 0:
                lmul[a * nsimples + s] = idx(a, 1)
                rmul[s * natoms + a] = idx(a, 1)
            elif k == m:
                lquot[a * nsimples + s] = idx(1 - a, m - 1)
                x = a if m % 2 == 1 else 1 - a
                rquot[s * natoms + a] = idx(x, m - 1)
            else:
                if a == f:
                    lquot[a * nsimples + s] = idx(1 - f, k - 1)
                else:
                    lmul[a * nsimples + s] = idx(a, k + 1)
                if a == last(f, k):
                    rquot[s * natoms + a] = idx(f, k - 1)
                else:
                    rmul[s * natoms + a] = idx(f, k + 1)

    phi = [compl_r[compl_r[s]] for s in range(nsimples)]
    atom_simple = [idx(a, 1) for a in range(natoms)]
    return _finish(
        natoms, norm, word, atom_simple, ldesc, rdesc,
        lmul, rmul, lquot, rquot, compl_r, compl_l, phi,
    )
