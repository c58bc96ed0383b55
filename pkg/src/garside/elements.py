"""Element-level Garside operations.

Positive elements and group elements wrap the kernel's canonical forms and
expose the division lattice: heads, exact division, lcm/gcd on either side,
complements, the twist automorphism, purity, and the group word problem.

Side conventions: ``left`` head/gcd are computed in the context's own tables;
``right``-sided questions run the same algorithms in the mirrored tables
(multiplication read right-to-left), which swaps every handedness at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import oracle as _oracle
from .contexts import GarsideContext
from .words import Word, parse_word, signed_letters

Wordish = Union[str, Word]


def _as_word(w: Wordish, numeric: bool = False) -> Word:
    if isinstance(w, str):
        return parse_word(w, numeric=numeric)
    return w


@dataclass(frozen=True)
class PositiveElement:
    """Monoid element in left-greedy normal form.

    ``factors`` may begin with Delta factors; no factor is the identity and
    every adjacent pair is left-greedy.
    """

    ctx: GarsideContext
    factors: tuple[int, ...]

    @property
    def norm(self) -> int:
        return sum(self.ctx.tables.norm[f] for f in self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def nf(self) -> tuple[int, tuple[int, ...]]:
        """Split (delta power, proper factors)."""
        delta = self.ctx.tables.delta
        d = 0
        while d < len(self.factors) and self.factors[d] == delta:
            d += 1
        return d, self.factors[d:]

    def word(self) -> tuple[int, ...]:
        """Atom spelling (Delta factors expanded; display never does this)."""
        out: list[int] = []
        for f in self.factors:
            out.extend(self.ctx.tables.word[f])
        return tuple(out)

    def __mul__(self, other: "PositiveElement") -> "PositiveElement":
        if self.ctx is not other.ctx:
            raise ValueError("elements from different contexts")
        da, fa = self.nf()
        db, fb = other.nf()
        d, fs = self.ctx.engine.mul(da, fa, db, fb)
        return _pos(self.ctx, d, fs)

    def __str__(self) -> str:
        return self.ctx.nf_str(self.nf())


@dataclass(frozen=True)
class GroupElement:
    """Group element as Delta^inf . body with inf maximal."""

    ctx: GarsideContext
    inf: int
    body: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return self.inf >= 0

    @property
    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.body

    @property
    def canonical_length(self) -> int:
        return len(self.body)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.ctx is not other.ctx:
            raise ValueError("elements from different contexts")
        d, fs = self.ctx.engine.mul(self.inf, self.body, other.inf, other.body)
        return GroupElement(self.ctx, d, fs)

    def inverse(self) -> "GroupElement":
        d, fs = self.ctx.engine.inv(self.inf, self.body)
        return GroupElement(self.ctx, d, fs)

    def __str__(self) -> str:
        return self.ctx.nf_str((self.inf, self.body))


def _pos(ctx: GarsideContext, d: int, fs: tuple[int, ...]) -> PositiveElement:
    if d < 0:
        raise ValueError("negative Delta power in a positive element")
    return PositiveElement(ctx, (ctx.tables.delta,) * d + tuple(fs))


def normalize(w: Wordish, ctx: GarsideContext, numeric: bool = False) -> PositiveElement:
    """Left-greedy normal form of a positive word."""
    word = _as_word(w, numeric)
    t = ctx.tables
    factors = []
    for atom, exp in word:
        if exp != 1:
            raise ValueError("normalize takes positive words; "
                             "use group_element for signed words")
        if atom > t.natoms:
            raise ValueError(f"atom {atom} out of range for {ctx.key}")
        factors.append(t.atom_simple[atom - 1])
    d, fs = ctx.engine.normalize(factors)
    return _pos(ctx, d, fs)


def simple(ctx: GarsideContext, s: int) -> PositiveElement:
    """The simple with index s as a positive element."""
    if not 0 <= s < ctx.tables.nsimples:
        raise ValueError("simple index out of range")
    return PositiveElement(ctx, (s,) if s else ())


Posish = Union[PositiveElement, int, str, Word]


def _as_pos(x: Posish, ctx: GarsideContext) -> PositiveElement:
    if isinstance(x, PositiveElement):
        return x
    if isinstance(x, int):
        return simple(ctx, x)
    return normalize(x, ctx)


def _mirror_nf(x: PositiveElement) -> tuple[int, tuple[int, ...]]:
    """Normal form of x in the mirrored monoid (simple indices are shared)."""
    return x.ctx.mirror_engine.normalize(tuple(reversed(x.factors)))


def head(x: Posish, side: str = "left", ctx: Optional[GarsideContext] = None) -> int:
    """Index of the maximal simple divisor of x on the given side."""
    x = _as_pos(x, ctx) if ctx is not None else x
    if not isinstance(x, PositiveElement):
        raise TypeError("head needs a PositiveElement (or pass ctx)")
    if side == "left":
        return x.factors[0] if x.factors else 0
    if side == "right":
        dm, fsm = _mirror_nf(x)
        if dm > 0:
            return x.ctx.tables.delta
        return fsm[0] if fsm else 0
    raise ValueError("side must be 'left' or 'right'")


def divide(x: PositiveElement, y: PositiveElement, side: str) -> Optional[PositiveElement]:
    """Exact quotient: left gives z with x = y.z, right gives z with x = z.y.

    Returns None when y does not divide x on that side.
    """
    if x.ctx is not y.ctx:
        raise ValueError("elements from different contexts")
    eng = x.ctx.engine
    dx, fx = x.nf()
    iy = eng.inv(*y.nf())
    if side == "left":
        d, fs = eng.mul(iy[0], iy[1], dx, fx)
    elif side == "right":
        d, fs = eng.mul(dx, fx, iy[0], iy[1])
    else:
        raise ValueError("side must be 'left' or 'right'")
    return _pos(x.ctx, d, fs) if d >= 0 else None


# -- complements and the lattice

def _grid_complement(
    tab: tuple[tuple[tuple[int, ...], ...], ...],
    u: tuple[int, ...],
    v: tuple[int, ...],
    memo: dict,
) -> tuple[int, ...]:
    """u\\v over atom words, from the atomic complement table.

    Recurrences: (a u')\\v = u'\\(a\\v) and a\\(b v') = (a\\b) . ((b\\a)\\v').
    Terminates in a Garside monoid; memoized on word pairs.
    """
    if not u:
        return v
    if not v:
        return ()
    key = (u, v)
    got = memo.get(key)
    if got is not None:
        return got
    a = u[0]
    if len(u) == 1:
        b = v[0]
        out = tab[a][b] + _grid_complement(tab, tab[b][a], v[1:], memo)
    else:
        out = _grid_complement(
            tab, u[1:], _grid_complement(tab, (a,), v, memo), memo
        )
    memo[key] = out
    return out


def complement_words(
    ctx: GarsideContext, u: tuple[int, ...], v: tuple[int, ...]
) -> tuple[int, ...]:
    """u\\v on positive atom words: u . (u\\v) = right-lcm(u, v)."""
    return _grid_complement(ctx.atom_complements, u, v, {})


def complement(x: PositiveElement, y: PositiveElement) -> PositiveElement:
    """x\\y: the unique z with x.z = right-lcm(x, y)."""
    if x.ctx is not y.ctx:
        raise ValueError("elements from different contexts")
    w = complement_words(x.ctx, x.word(), y.word())
    return normalize_atoms(x.ctx, w)


def normalize_atoms(ctx: GarsideContext, atoms: tuple[int, ...]) -> PositiveElement:
    """Normal form of a 0-based atom sequence."""
    t = ctx.tables
    d, fs = ctx.engine.normalize([t.atom_simple[a] for a in atoms])
    return _pos(ctx, d, fs)


def lcm(x: PositiveElement, y: PositiveElement, side: str = "right") -> PositiveElement:
    if x.ctx is not y.ctx:
        raise ValueError("elements from different contexts")
    ctx = x.ctx
    if side == "right":
        return x * complement(x, y)
    if side == "left":
        ru = tuple(reversed(x.word()))
        rv = tuple(reversed(y.word()))
        c = _grid_complement(ctx.mirror_atom_complements, ru, rv, {})
        return normalize_atoms(ctx, tuple(reversed(ru + c)))
    raise ValueError("side must be 'left' or 'right'")


def _atom_divides(t, d: int, fs: tuple[int, ...], a: int) -> bool:
    if d > 0:
        return True
    return bool(fs) and bool(t.ldesc[fs[0]] >> a & 1)


def _gcd_atoms(eng, t, nx, ny) -> list[int]:
    """Greedy common-atom extraction; the collected product is the left gcd.

    Any common left divisor is built from atoms, and each common atom a
    translates the problem to (a^-1 x, a^-1 y), so the extraction is
    complete; it strips norm on both sides, so it terminates.
    """
    out = []
    while True:
        found = -1
        for a in range(t.natoms):
            if _atom_divides(t, nx[0], nx[1], a) and _atom_divides(t, ny[0], ny[1], a):
                found = a
                break
        if found < 0:
            return out
        out.append(found)
        ia = eng.inv(0, (t.atom_simple[found],))
        nx = eng.mul(ia[0], ia[1], nx[0], nx[1])
        ny = eng.mul(ia[0], ia[1], ny[0], ny[1])


def gcd(x: PositiveElement, y: PositiveElement, side: str = "right") -> PositiveElement:
    if x.ctx is not y.ctx:
        raise ValueError("elements from different contexts")
    ctx = x.ctx
    if side == "left":
        atoms = _gcd_atoms(ctx.engine, ctx.tables, x.nf(), y.nf())
        return normalize_atoms(ctx, tuple(atoms))
    if side == "right":
        nx = ctx.mirror_engine.normalize(tuple(reversed(x.factors)))
        ny = ctx.mirror_engine.normalize(tuple(reversed(y.factors)))
        atoms = _gcd_atoms(ctx.mirror_engine, ctx.mirror_tables, nx, ny)
        return normalize_atoms(ctx, tuple(reversed(atoms)))
    raise ValueError("side must be 'left' or 'right'")


# -- the twist automorphism

def phi(x, power: int = 1, ctx: Optional[GarsideContext] = None):
    """phi^power: simple index -> simple index, elements -> same kind."""
    if isinstance(x, PositiveElement):
        row = x.ctx.tables.phi_pows[power % x.ctx.tables.phi_order]
        return PositiveElement(x.ctx, tuple(row[f] for f in x.factors))
    if isinstance(x, GroupElement):
        row = x.ctx.tables.phi_pows[power % x.ctx.tables.phi_order]
        return GroupElement(x.ctx, x.inf, tuple(row[f] for f in x.body))
    if isinstance(x, int):
        if ctx is None:
            raise ValueError("phi on a raw simple index needs ctx")
        return ctx.tables.phi_pows[power % ctx.tables.phi_order][x]
    raise TypeError(f"cannot apply phi to {type(x).__name__}")


# -- purity

def is_pure(ctx: GarsideContext, s: int, bound: Optional[int] = None) -> bool:
    """Whether s stays its own maximal simple right divisor in every power.

    The right heads of s^k form a nondecreasing chain of divisors of Delta,
    so stabilization is certain within norm(Delta) strict steps; the default
    bound norm(Delta)+1 covers it and remains configurable.
    """
    t = ctx.tables
    if not 0 <= s < t.nsimples:
        raise ValueError("simple index out of range")
    if s == 0:
        return True
    if bound is None:
        bound = t.norm[t.delta] + 1
    me = ctx.mirror_engine
    step = me.normalize((s,))
    cur = (0, ())
    for _ in range(bound):
        cur = me.mul(cur[0], cur[1], step[0], step[1])
        rhead = t.delta if cur[0] > 0 else (cur[1][0] if cur[1] else 0)
        if rhead != s:
            return False
    return True


# -- group layer

def group_element(w: Wordish, ctx: GarsideContext, numeric: bool = False) -> GroupElement:
    word = ctx.parse(w, numeric=numeric) if isinstance(w, str) else w
    d, fs = ctx.engine.from_letters(signed_letters(word))
    return GroupElement(ctx, d, fs)


def g_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    return x * y


def g_inv(x: GroupElement) -> GroupElement:
    return x.inverse()


def right_form(g: GroupElement) -> PositiveElement:
    """The z with g = z . Delta^inf (the twist-through conversion).

    The canonical storage is Delta^inf . body; pushing the power to the
    right twists the body: z = phi^-inf(body).
    """
    body = PositiveElement(g.ctx, g.body)
    return phi(body, -g.inf)


def equivalent(w1: Wordish, w2: Wordish, ctx: GarsideContext) -> bool:
    return group_element(w1, ctx) == group_element(w2, ctx)


def is_trivial(w: Wordish, ctx: GarsideContext) -> bool:
    return group_element(w, ctx).is_trivial


def oracle_equivalent(
    w1: Wordish, w2: Wordish, ctx: GarsideContext, length_bound: int = 64
) -> bool:
    """Equivalence by the rewriting oracle, independent of the kernels.

    Raises when either Delta-cleared positive form exceeds length_bound
    (closure cost grows fast with word length).
    """
    t = ctx.tables
    u = signed_letters(_as_word(w1))
    v = signed_letters(_as_word(w2))
    for letters in (u, v):
        _, cleared = _oracle.clear_negatives(t, letters)
        if len(cleared) > length_bound:
            raise ValueError(
                f"cleared positive form has length {len(cleared)} > "
                f"bound {length_bound}"
            )
    return _oracle.oracle_equivalent(t, u, v)
