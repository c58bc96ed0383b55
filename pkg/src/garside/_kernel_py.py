"""Pure-Python normal-form engine.

Elements are kept in left canonical form ``(dpow, factors)``: a power of the
Garside element Delta followed by a left-greedy sequence of proper simples
(no identity, no Delta), with the Delta power maximal.  Equality of canonical
forms is equality of group elements, so all higher-level comparisons reduce
to tuple comparison.

The compiled extension in ``_kernel.pyx`` mirrors this class method for
method; keep the two in sync.  This one is the reference.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .tables import ContextTables

NF = tuple[int, tuple[int, ...]]


class Engine:
    """Normal-form arithmetic over one context's simple tables."""

    backend = "python"

    def __init__(self, tables: ContextTables):
        self.tables = tables
        self._ns = tables.nsimples
        self._na = tables.natoms
        self._delta = tables.nsimples - 1
        self._ldesc = tables.ldesc
        self._rmul = tables.rmul
        self._lquot = tables.lquot
        self._compl_l = tables.compl_l
        self._atom_simple = tables.atom_simple
        self._phi_pows = tables.phi_pows
        self._order = tables.phi_order
        self._renorm_x = tables.renorm_x
        self._renorm_y = tables.renorm_y

    # -- primitive: left-greedy renormalization of one adjacent pair

    def _renorm(self, x: int, y: int) -> tuple[int, int]:
        rx = self._renorm_x
        if rx is not None:
            i = x * self._ns + y
            return rx[i], self._renorm_y[i]
        na = self._na
        ns = self._ns
        while True:
            mask = self._ldesc[y]
            a = 0
            moved = False
            while mask:
                if mask & 1:
                    nx = self._rmul[x * na + a]
                    if nx >= 0:
                        x = nx
                        y = self._lquot[a * ns + y]
                        moved = True
                        break
                mask >>= 1
                a += 1
            if not moved:
                return x, y

    def _sweep(self, fs: list[int]) -> None:
        """Renormalize adjacent pairs until every pair is left-greedy.

        Local greediness of all adjacent pairs is equivalent to global
        left-greediness, so the fixpoint is the normal form.  Each transfer
        moves weight strictly leftward, which bounds the sweep count.
        """
        changed = True
        while changed:
            changed = False
            i = 0
            while i + 1 < len(fs):
                x, y = self._renorm(fs[i], fs[i + 1])
                if x != fs[i]:
                    changed = True
                    fs[i] = x
                    if y == 0:
                        del fs[i + 1]
                        continue
                    fs[i + 1] = y
                i += 1

    def normalize(self, factors: Iterable[int]) -> NF:
        """Canonical form of a product of simples (Delta and 1 allowed)."""
        fs = [f for f in factors if f != 0]
        self._sweep(fs)
        d = 0
        while fs and fs[0] == self._delta:
            d += 1
            fs.pop(0)
        return d, tuple(fs)

    def phi_shift(self, factors: Sequence[int], k: int) -> tuple[int, ...]:
        """Apply the Delta-conjugation automorphism phi^k factorwise."""
        row = self._phi_pows[k % self._order]
        return tuple(row[f] for f in factors)

    def mul(self, da: int, fa: Sequence[int], db: int, fb: Sequence[int]) -> NF:
        """Product of two canonical forms.

        Delta^da a . Delta^db b = Delta^(da+db) . phi^db(a) . b, then comb.
        """
        fs = list(self.phi_shift(fa, db)) + list(fb)
        d, out = self.normalize(fs)
        return da + db + d, out

    def inv(self, d: int, fs: Sequence[int]) -> NF:
        """Inverse of a canonical form.

        Each simple inverts as x^-1 = Delta^-1 . compl_l(x); collecting the
        Delta powers to the front twists the complement of factor i (0-based)
        by phi^-(i+d) and reverses the order.
        """
        l = len(fs)
        raw = [
            self._phi_pows[(-(i + d)) % self._order][self._compl_l[fs[i]]]
            for i in range(l - 1, -1, -1)
        ]
        dd, out = self.normalize(raw)
        return -l - d + dd, out

    # -- letters: signed atoms, +(a+1) / -(a+1) for 0-based atom a

    def letter_nf(self, letter: int) -> NF:
        a = abs(letter) - 1
        if not 0 <= a < self._na:
            raise ValueError(f"letter {letter!r} out of range for {self._na} atoms")
        s = self._atom_simple[a]
        if letter > 0:
            return 0, (s,)
        c = self._compl_l[s]
        return -1, (c,) if c != 0 else ()

    def append_letter(self, d: int, fs: Sequence[int], letter: int) -> NF:
        """Canonical form of (Delta^d fs) . letter."""
        dl, fl = self.letter_nf(letter)
        if dl == 0:
            work = list(fs) + list(fl)
            d2, out = self.normalize(work)
            return d + d2, out
        work = [self._phi_pows[dl % self._order][f] for f in fs]
        work.extend(fl)
        d2, out = self.normalize(work)
        return d + dl + d2, out

    def from_letters(self, letters: Sequence[int]) -> NF:
        d, fs = 0, ()
        for x in letters:
            d, fs = self.append_letter(d, fs, x)
        return d, fs

    def prefix_states(self, letters: Sequence[int]) -> list[NF]:
        """Canonical forms of all prefixes, identity first."""
        d, fs = 0, ()
        out = [(0, ())]
        for x in letters:
            d, fs = self.append_letter(d, fs, x)
            out.append((d, fs))
        return out

    # -- removable-pair scan

    def pair_scan(
        self, letters: Sequence[int], first_only: bool = False
    ) -> list[tuple[int, int]]:
        """All index pairs (i, j), i < j, whose two letters can be deleted
        without changing the group element.

        With P_k the prefix element, (i, j) qualifies exactly when
        P_i^-1 P_{j+1} = P_{i+1}^-1 P_j: the deleted word then represents the
        same element as the original.  The scan fixes i and walks j upward,
        maintaining B = P_{i+1}^-1 P_j and C = letter_i . B incrementally so
        each step is two single-letter multiplications; the test compares
        C . letter_j against B.
        """
        n = len(letters)
        out: list[tuple[int, int]] = []
        for i in range(n - 1):
            li = letters[i]
            b: NF = (0, ())
            c: NF = self.letter_nf(li)
            for j in range(i + 1, n):
                lj = letters[j]
                a = self.append_letter(c[0], c[1], lj)
                if (li > 0) != (lj > 0) and a == b:
                    out.append((i, j))
                    if first_only:
                        return out
                b = self.append_letter(b[0], b[1], lj)
                c = a
        return out
