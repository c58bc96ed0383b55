"""Garside contexts: the group, its tables, and an engine, under one key.

A context is built from a spec string:

    braid:N      braid group on N strands, 2 <= N <= 8
    dihedral:M   dihedral Artin group with relation length M >= 2
    table:REF    table-presented context; REF is a file path or the name of
                 a bundled table file (e.g. ``exotic-aba-bb``)

Contexts are immutable once constructed and cached per spec string, so they
are safe to share across threads and cheap to rebuild inside worker
processes.

Table file grammar (versioned by example in the bundled data): a line-based
text format with ``#`` comments and four sections introduced by headers in
brackets.

    [atoms]            one line of space-separated atom names; names are
                       distinct single lowercase letters
    [simples]          one positive word per line in compact syntax over the
                       atom names; ``1`` denotes the identity; index 0 must
                       be the identity and the last entry the Garside element
    [left_complement]  one row per simple, each row listing for every j the
                       index u with u . s_i = left-lcm(s_i, s_j)
    [phi]              one line: the image indices of the twist automorphism

The loader trusts nothing: it rebuilds the monoid by rewriting closure from
the relations encoded in the atom rows of ``left_complement``, recomputes
every table from scratch, and cross-checks the full matrix and ``phi``
against the file.  It is exponential in the word lengths involved and meant
for small exotic presentations; the generic families have direct builders.
"""

from __future__ import annotations

import functools
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import oracle as _oracle
from .kernel import Engine
from .tables import (
    ContextTables,
    atom_complement_words,
    braid_tables,
    dihedral_tables,
    mirror_tables,
    with_renorm_table,
)
from .words import Word, format_word, parse_word, signed_letters

ATOM_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class GarsideContext:
    """One group with its simple tables and normal-form engine."""

    def __init__(self, key: str, kind: str, tables: ContextTables):
        self.key = key
        self.kind = kind
        self.tables = tables
        self.natoms = tables.natoms
        self.atom_names = ATOM_LETTERS[: tables.natoms]
        self.engine = Engine(tables)

    def __repr__(self) -> str:
        return f"GarsideContext({self.key!r})"

    @functools.cached_property
    def mirror_tables(self) -> ContextTables:
        return mirror_tables(self.tables)

    @functools.cached_property
    def mirror_engine(self):
        return Engine(self.mirror_tables)

    @functools.cached_property
    def relations(self) -> tuple[tuple[str, str], ...]:
        return tuple(_oracle.atom_lcm_relations(self.tables))

    @functools.cached_property
    def atom_complements(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return atom_complement_words(self.tables)

    @functools.cached_property
    def mirror_atom_complements(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return atom_complement_words(self.mirror_tables)

    @property
    def strands(self) -> int:
        if self.kind != "braid":
            raise ValueError("strand count only makes sense for braid contexts")
        return self.natoms + 1

    @property
    def delta(self) -> int:
        return self.tables.delta

    @functools.cached_property
    def phi_atom(self) -> tuple[int, ...]:
        """phi restricted to atoms, as 0-based atom indices."""
        out = []
        for a in range(self.natoms):
            w = self.tables.word[self.tables.phi[self.tables.atom_simple[a]]]
            assert len(w) == 1
            out.append(w[0])
        return tuple(out)

    @functools.cached_property
    def coxeter_exponents(self) -> Optional[dict[tuple[int, int], int]]:
        """m_ab per unordered atom pair, for the Artin-presented kinds."""
        if self.kind == "braid":
            return {
                (a, b): 3 if b == a + 1 else 2
                for a in range(self.natoms)
                for b in range(a + 1, self.natoms)
            }
        if self.kind == "dihedral":
            return {(0, 1): self.tables.norm[self.tables.delta]}
        return None

    # -- word plumbing

    def parse(self, text: str, numeric: bool = False) -> Word:
        w = parse_word(text, numeric=numeric)
        for atom, _ in w:
            if atom > self.natoms:
                raise ValueError(
                    f"atom {atom} out of range for context {self.key} "
                    f"({self.natoms} atoms)"
                )
        return w

    def format(self, w: Word, numeric: bool = False) -> str:
        return format_word(w, numeric=numeric)

    def letters(self, w: Word) -> list[int]:
        return signed_letters(w)

    def simple_str(self, s: int, expand_delta: bool = False) -> str:
        if s == 0:
            return "1"
        if s == self.tables.delta and not expand_delta:
            return "D"
        return "".join(self.atom_names[a] for a in self.tables.word[s])

    def nf_str(self, nf: tuple[int, Sequence[int]]) -> str:
        """Render a canonical form, e.g. ``D^-1 . ab . b`` or ``e``."""
        d, fs = nf
        parts = []
        if d == 1:
            parts.append("D")
        elif d != 0:
            parts.append(f"D^{d}")
        parts.extend(self.simple_str(f) for f in fs)
        return " . ".join(parts) if parts else "e"


def _parse_table_file(text: str, origin: str) -> dict:
    sections: dict[str, list[str]] = {}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current in sections:
                raise ValueError(f"{origin}:{lineno}: duplicate section [{current}]")
            sections[current] = []
            continue
        if current is None:
            raise ValueError(f"{origin}:{lineno}: content before any section header")
        sections[current].append(line)
    missing = {"atoms", "simples", "left_complement", "phi"} - set(sections)
    if missing:
        raise ValueError(f"{origin}: missing sections: {', '.join(sorted(missing))}")
    return sections


def load_table_context(ref: str) -> ContextTables:
    """Load, reconstruct, and validate a table-presented context."""
    path = Path(ref)
    if path.is_file():
        text = path.read_text()
        origin = str(path)
    else:
        name = ref if ref.endswith(".tables") else ref + ".tables"
        res = resources.files("garside.data").joinpath(name)
        if not res.is_file():
            raise FileNotFoundError(
                f"no table file at {ref!r} and no bundled table named {name!r}"
            )
        text = res.read_text()
        origin = f"bundled:{name}"
    sec = _parse_table_file(text, origin)

    atoms = sec["atoms"][0].split()
    if len(sec["atoms"]) != 1 or not atoms:
        raise ValueError(f"{origin}: [atoms] must be a single nonempty line")
    for a in atoms:
        if len(a) != 1 or a not in ATOM_LETTERS:
            raise ValueError(f"{origin}: atom name {a!r} must be one lowercase letter")
    if len(set(atoms)) != len(atoms):
        raise ValueError(f"{origin}: duplicate atom names")
    na = len(atoms)
    pos = {ch: i for i, ch in enumerate(atoms)}

    words: list[tuple[int, ...]] = []
    for w in sec["simples"]:
        if w == "1":
            words.append(())
            continue
        try:
            words.append(tuple(pos[ch] for ch in w))
        except KeyError as exc:
            raise ValueError(f"{origin}: simple {w!r} uses unknown atom {exc}") from None
    ns = len(words)
    if ns < 2 or words[0] != ():
        raise ValueError(f"{origin}: [simples] must start with the identity ('1')")
    if len(set(words)) != ns:
        raise ValueError(f"{origin}: duplicate simple words")

    lc_rows = [[int(x) for x in row.split()] for row in sec["left_complement"]]
    if len(lc_rows) != ns or any(len(r) != ns for r in lc_rows):
        raise ValueError(f"{origin}: [left_complement] must be a {ns}x{ns} matrix")
    phi_file = [int(x) for x in sec["phi"][0].split()]
    if len(sec["phi"]) != 1 or sorted(phi_file) != list(range(ns)):
        raise ValueError(f"{origin}: [phi] must be one permutation of 0..{ns - 1}")

    def err(msg: str) -> ValueError:
        return ValueError(f"{origin}: {msg}")

    for row in lc_rows:
        for x in row:
            if not 0 <= x < ns:
                raise err("left_complement entry out of range")

    # positional strings for the rewriting machinery
    wstr = ["".join(_oracle.atom_char(a) for a in w) for w in words]
    atom_idx = []
    for a in range(na):
        try:
            atom_idx.append(words.index((a,)))
        except ValueError:
            raise err(f"atom {atoms[a]!r} is not listed among the simples") from None

    # defining relations from the atom rows: u . s_a = v . s_b = left-lcm
    rels = []
    for a in range(na):
        for b in range(a + 1, na):
            ia, ib = atom_idx[a], atom_idx[b]
            left = wstr[lc_rows[ia][ib]] + wstr[ia]
            right = wstr[lc_rows[ib][ia]] + wstr[ib]
            if left != right:
                rels.append((left, right))

    closure_cache: dict[str, frozenset[str]] = {}

    def closure(w: str) -> frozenset[str]:
        got = closure_cache.get(w)
        if got is None:
            got = _oracle.rewrite_closure(w, rels, max_states=200_000)
            for member in got:
                closure_cache[member] = got
        return got

    keys = [_oracle.class_key(closure(w)) for w in wstr]
    if len(set(keys)) != ns:
        raise err("two listed simples are equal in the monoid")
    key_index = {k: i for i, k in enumerate(keys)}

    def elem(w: str) -> Optional[int]:
        """Simple index of a positive word, or None if not simple."""
        return key_index.get(_oracle.class_key(closure(w)))

    delta = ns - 1
    # completeness: left/right divisors of Delta are exactly the prefixes /
    # suffixes of the words in its class, and must all be listed simples
    dclass = closure(wstr[delta])
    ldiv: set[int] = set()
    rdiv: set[int] = set()
    for w in dclass:
        for cut in range(len(w) + 1):
            p = elem(w[:cut])
            s = elem(w[cut:])
            if p is None or s is None:
                raise err("a divisor of the last simple is not listed; "
                          "the simples do not form a Garside family")
            ldiv.add(p)
            rdiv.add(s)
    if ldiv != set(range(ns)) or rdiv != set(range(ns)):
        raise err("simples must be exactly the divisors of the last entry")

    norm = [max(len(x) for x in closure(w)) for w in wstr]
    if norm[delta] != max(norm):
        raise err("the last simple must have maximal norm")

    lmul = [-1] * (na * ns)
    lquot = [-1] * (na * ns)
    rmul = [-1] * (ns * na)
    rquot = [-1] * (ns * na)
    ldesc = [0] * ns
    rdesc = [0] * ns
    for s in range(ns):
        for a in range(na):
            m = elem(_oracle.atom_char(a) + wstr[s])
            if m is not None:
                lmul[a * ns + s] = m
            m = elem(wstr[s] + _oracle.atom_char(a))
            if m is not None:
                rmul[s * na + a] = m
            # quotients, with uniqueness as the cancellativity witness
            lq = [u for u in range(ns) if elem(_oracle.atom_char(a) + wstr[u]) == s]
            rq = [u for u in range(ns) if elem(wstr[u] + _oracle.atom_char(a)) == s]
            if len(lq) > 1 or len(rq) > 1:
                raise err("atom quotients are not unique; monoid not cancellative")
            if lq:
                lquot[a * ns + s] = lq[0]
                ldesc[s] |= 1 << a
            if rq:
                rquot[s * na + a] = rq[0]
                rdesc[s] |= 1 << a

    compl_r = []
    compl_l = []
    for s in range(ns):
        cr = [u for u in range(ns) if elem(wstr[s] + wstr[u]) == delta]
        cl = [u for u in range(ns) if elem(wstr[u] + wstr[s]) == delta]
        if len(cr) != 1 or len(cl) != 1:
            raise err("complement toward the last simple must exist uniquely")
        compl_r.append(cr[0])
        compl_l.append(cl[0])

    # recompute the full left-lcm matrix and compare with the file
    for i in range(ns):
        for j in range(ns):
            common = [
                z for z in range(ns)
                if any(elem(wstr[u] + wstr[i]) == z for u in range(ns))
                and any(elem(wstr[v] + wstr[j]) == z for v in range(ns))
            ]
            least = min(norm[z] for z in common)
            zs = [z for z in common if norm[z] == least]
            if len(zs) != 1:
                raise err(f"left lcm of simples {i},{j} is not unique")
            z = zs[0]
            for other in common:
                if not any(elem(wstr[w] + wstr[z]) == other for w in range(ns)):
                    raise err(f"least common left-multiple of {i},{j} does not "
                              "divide a common multiple; lattice property fails")
            u = [u for u in range(ns) if elem(wstr[u] + wstr[i]) == z]
            if len(u) != 1 or u[0] != lc_rows[i][j]:
                raise err(f"left_complement[{i}][{j}] disagrees with the "
                          "reconstructed monoid")

    phi = [compl_r[compl_r[s]] for s in range(ns)]
    if phi != phi_file:
        raise err("[phi] disagrees with the reconstructed twist automorphism")
    for a in range(na):
        if norm[phi[atom_idx[a]]] != 1:
            raise err("twist automorphism must permute the atoms")

    ident = tuple(range(ns))
    pows = [ident]
    cur = tuple(phi)
    while cur != ident:
        pows.append(cur)
        cur = tuple(phi[s] for s in cur)
        if len(pows) > 2 * ns:
            raise err("twist automorphism has absurd order")
    phi_inv = tuple(pows[-1][s] for s in range(ns)) if len(pows) > 1 else ident

    t = ContextTables(
        natoms=na,
        nsimples=ns,
        norm=tuple(norm),
        word=tuple(words),
        atom_simple=tuple(atom_idx),
        ldesc=tuple(ldesc),
        rdesc=tuple(rdesc),
        lmul=tuple(lmul),
        rmul=tuple(rmul),
        lquot=tuple(lquot),
        rquot=tuple(rquot),
        compl_r=tuple(compl_r),
        compl_l=tuple(compl_l),
        phi=tuple(phi),
        phi_inv=phi_inv,
        phi_order=len(pows),
        phi_pows=tuple(pows),
    )
    return with_renorm_table(t)


@functools.lru_cache(maxsize=None)
def build_context(spec: str) -> GarsideContext:
    """Context for a spec string like ``braid:4`` (cached)."""
    spec = spec.strip()
    kind, sep, arg = spec.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise ValueError(f"context spec {spec!r} must look like kind:parameter")
    arg = arg.strip()
    if kind == "braid":
        n = int(arg)
        return GarsideContext(f"braid:{n}", "braid", braid_tables(n))
    if kind == "dihedral":
        m = int(arg)
        return GarsideContext(f"dihedral:{m}", "dihedral", dihedral_tables(m))
    if kind == "table":
        return GarsideContext(spec, "table", load_table_context(arg))
    raise ValueError(f"unknown context kind {kind!r}")


def braid_context(n: int) -> GarsideContext:
    return build_context(f"braid:{n}")


def dihedral_context(m: int) -> GarsideContext:
    return build_context(f"dihedral:{m}")


def table_context(ref: str) -> GarsideContext:
    return build_context(f"table:{ref}")
