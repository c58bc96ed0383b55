"""Subword reversing, seed words, and the counterexample search.

Reversing rewrites every negative-then-positive letter adjacency
sigma^-1 tau into (sigma\\tau)(tau\\sigma)^-1, the two complements into the
atoms' right lcm.  Applied to u^-1 v for positive u, v it terminates in a
positive-negative split v' u'^-1 with u v' = v u' = lcm(u, v), and the
four pieces assemble into the seed word v'^-1 u^-1 v u', a trivial word
with no free reduction.  The search enumerates all unordered pairs of
distinct positive words of a fixed length and reports the seeds whose
seed word has no removable pair at all.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from .contexts import GarsideContext, build_context
from .elements import PositiveElement, normalize
from .words import Letter, Word, format_word, signed_letters, word

Wordish = Union[str, Sequence[Letter]]

SEARCH_GUARD = 10_000


def _as_pos_word(w: Wordish, ctx: GarsideContext, name: str) -> Word:
    w = ctx.parse(w) if isinstance(w, str) else word(w)
    for atom, exp in w:
        if exp != 1:
            raise ValueError(f"{name} must be a positive word")
        if atom > ctx.natoms:
            raise ValueError(f"atom {atom} out of range for {ctx.key}")
    return w


def _inv(w: Word) -> Word:
    return tuple((a, -e) for a, e in reversed(w))


@dataclass(frozen=True)
class ReversingResult:
    u_prime: Word
    v_prime: Word
    lcm: PositiveElement


def reverse(
    u: Wordish,
    v: Wordish,
    ctx: GarsideContext,
    pick: Optional[Callable[[Sequence[int]], int]] = None,
    max_steps: int = 1_000_000,
) -> ReversingResult:
    """Reverse u^-1 v into v' u'^-1 and return u', v' and the lcm element.

    ``pick`` chooses which negative-positive adjacency to rewrite next
    (given the candidate positions, return one); the default takes the
    leftmost.  The result does not depend on the choice, which the test
    suite exercises with randomized pickers.  Termination is guaranteed
    for the built-in spherical contexts; the step cap turns a hypothetical
    runaway on an unusual table context into an error.
    """
    u = _as_pos_word(u, ctx, "u")
    v = _as_pos_word(v, ctx, "v")
    comp = ctx.atom_complements
    w: list[Letter] = list(_inv(u)) + list(v)
    for _ in range(max_steps):
        spots = [p for p in range(len(w) - 1) if w[p][1] < 0 < w[p + 1][1]]
        if not spots:
            break
        p = spots[0] if pick is None else pick(spots)
        if p not in spots:
            raise ValueError(f"picker chose {p}, not a reversible position")
        sa, ta = w[p][0] - 1, w[p + 1][0] - 1
        repl = [(c + 1, 1) for c in comp[sa][ta]]
        repl += [(c + 1, -1) for c in reversed(comp[ta][sa])]
        w[p : p + 2] = repl
    else:
        raise RuntimeError(f"reversing did not terminate within {max_steps} steps")
    cut = next((k for k, (_, e) in enumerate(w) if e < 0), len(w))
    v_prime = tuple(w[:cut])
    u_prime = _inv(tuple(w[cut:]))
    return ReversingResult(
        u_prime=u_prime,
        v_prime=v_prime,
        lcm=normalize(u + v_prime, ctx),
    )


def seed_word(u: Wordish, v: Wordish, ctx: GarsideContext) -> Word:
    """The trivial word v'^-1 u^-1 v u' built from the seed (u, v).

    Concatenation only; adjacent inverse letters are kept, they are the
    point of the construction.
    """
    u = _as_pos_word(u, ctx, "u")
    v = _as_pos_word(v, ctx, "v")
    r = reverse(u, v, ctx)
    return _inv(r.v_prime) + _inv(u) + v + r.u_prime


# -- the seed search


@dataclass(frozen=True)
class Counterexample:
    u: str
    v: str
    word: str
    orbit_size: int = 1

    def as_dict(self) -> dict:
        out = {"u": self.u, "v": self.v, "word": self.word}
        if self.orbit_size != 1:
            out["orbit_size"] = self.orbit_size
        return out


@dataclass(frozen=True)
class SearchReport:
    strands: int
    length: int
    pairs_examined: int
    counterexamples: tuple[Counterexample, ...]
    dedupe_symmetry: bool
    elapsed: float

    def canonical_json(self) -> str:
        """Stable serialization: elapsed time is deliberately left out so
        reports from runs with different job counts compare byte-equal."""
        return json.dumps(
            {
                "strands": self.strands,
                "length": self.length,
                "pairs_examined": self.pairs_examined,
                "dedupe_symmetry": self.dedupe_symmetry,
                "counterexamples": [c.as_dict() for c in self.counterexamples],
            }
        )


@lru_cache(maxsize=8)
def _all_words(natoms: int, length: int) -> tuple[Word, ...]:
    return tuple(
        tuple((a, 1) for a in combo)
        for combo in itertools.product(range(1, natoms + 1), repeat=length)
    )


def _flip_word(w: Word, natoms: int) -> Word:
    return tuple((natoms + 1 - a, e) for a, e in w)


def _scan_rows(
    strands: int, length: int, rows: Sequence[int], dedupe: bool
) -> tuple[int, list[tuple[int, int, int]]]:
    """Examine all pairs (i, j), j > i, for i in rows.

    Returns (pairs examined, hits) with hits as (i, j, orbit_size); kept
    picklable so the search can fan out over worker processes.
    """
    ctx = build_context(f"braid:{strands}")
    natoms = strands - 1
    words_ = _all_words(natoms, length)
    eng = ctx.engine
    examined = 0
    hits: list[tuple[int, int, int]] = []
    index = {w: k for k, w in enumerate(words_)} if dedupe else None
    for i in rows:
        u = words_[i]
        for j in range(i + 1, len(words_)):
            v = words_[j]
            orbit = 1
            if dedupe:
                fi, fj = index[_flip_word(u, natoms)], index[_flip_word(v, natoms)]
                mirror = (fi, fj) if fi < fj else (fj, fi)
                if mirror < (i, j):
                    continue
                if mirror != (i, j):
                    orbit = 2
            examined += 1
            w = seed_word(u, v, ctx)
            if not eng.pair_scan(signed_letters(w), first_only=True):
                hits.append((i, j, orbit))
    return examined, hits


def search_counterexamples(
    strands: int,
    length: int,
    jobs: int = 1,
    dedupe_symmetry: bool = False,
    force: bool = False,
) -> SearchReport:
    """Hunt for seeds (u, v) whose seed word has no removable pair.

    Enumerates unordered pairs of distinct positive words of exactly the
    given length over strands-1 atoms; C(N, 2) seed words for
    N = (strands-1)^length.  Refuses N > 10^4 unless ``force``.  With
    ``dedupe_symmetry`` only the lexicographically least pair of each
    atom-mirror orbit is examined and its orbit size recorded.  Worker
    partitioning never affects the report: results are merged in seed
    order and the canonical serialization omits timing.
    """
    if strands < 3:
        raise ValueError("searching needs at least 3 strands")
    if length < 1:
        raise ValueError("seed length must be at least 1")
    natoms = strands - 1
    total = natoms**length
    if total > SEARCH_GUARD and not force:
        raise ValueError(
            f"{natoms}^{length} = {total} words exceeds the desk-scale guard "
            f"({SEARCH_GUARD}); pass force=True to run anyway"
        )
    t0 = time.perf_counter()
    rows = list(range(total - 1))
    if jobs <= 1 or len(rows) < 2:
        examined, hits = _scan_rows(strands, length, rows, dedupe_symmetry)
    else:
        chunks = [rows[k::jobs] for k in range(jobs)]
        args = [(strands, length, chunk, dedupe_symmetry) for chunk in chunks if chunk]
        with multiprocessing.get_context("fork").Pool(len(args)) as pool:
            parts = pool.starmap(_scan_rows, args)
        examined = sum(p[0] for p in parts)
        hits = [h for p in parts for h in p[1]]
    hits.sort()
    ctx = build_context(f"braid:{strands}")
    words_ = _all_words(natoms, length)
    records = tuple(
        Counterexample(
            u=format_word(words_[i]),
            v=format_word(words_[j]),
            word=format_word(seed_word(words_[i], words_[j], ctx)),
            orbit_size=orbit,
        )
        for i, j, orbit in hits
    )
    return SearchReport(
        strands=strands,
        length=length,
        pairs_examined=examined,
        counterexamples=records,
        dedupe_symmetry=dedupe_symmetry,
        elapsed=time.perf_counter() - t0,
    )


# -- random trivial words


def _relation_rewrites(ctx: GarsideContext) -> list[tuple[Word, Word]]:
    out = []
    for lhs, rhs in ctx.relations:
        lw = tuple((ord(c) - 96, 1) for c in lhs)
        rw = tuple((ord(c) - 96, 1) for c in rhs)
        out.append((lw, rw))
        out.append((rw, lw))
        out.append((_inv(lw), _inv(rw)))
        out.append((_inv(rw), _inv(lw)))
    return out


def random_trivial_word(ctx: GarsideContext, ops: int, rng_seed: int = 0) -> Word:
    """A pseudorandom trivial word built by ops triviality-preserving moves.

    Moves: insert an adjacent inverse pair somewhere, conjugate the whole
    word by a letter, or rewrite one signed occurrence of a defining
    relation (falling back to an insertion when nothing matches).  Fully
    determined by rng_seed.
    """
    if ops < 0:
        raise ValueError("ops must be >= 0")
    rng = random.Random(rng_seed)
    rewrites = _relation_rewrites(ctx)
    w: list[Letter] = []

    def insert() -> None:
        a = rng.randrange(1, ctx.natoms + 1)
        e = rng.choice((1, -1))
        pos = rng.randrange(len(w) + 1)
        w[pos:pos] = [(a, e), (a, -e)]

    for _ in range(ops):
        move = rng.randrange(3)
        if move == 0:
            insert()
        elif move == 1:
            a = rng.randrange(1, ctx.natoms + 1)
            e = rng.choice((1, -1))
            w[:] = [(a, e)] + w + [(a, -e)]
        else:
            matches = [
                (pos, pat, rep)
                for pat, rep in rewrites
                for pos in range(len(w) - len(pat) + 1)
                if tuple(w[pos : pos + len(pat)]) == pat
            ]
            if not matches:
                insert()
            else:
                pos, pat, rep = rng.choice(matches)
                w[pos : pos + len(pat)] = list(rep)
    return tuple(w)
