"""Valuations, valuation sequences, order-types, and the type graph.

The valuation of a group element by a pure simple s counts greedy left
divisions: on the positive part it is the maximal k with s^k a left divisor,
and a Delta power shifts it additively.  Collecting valuations over all
atoms gives the valuation sequence; its order-type (the dense rank vector)
is the combinatorial datum that partitions the Cayley graph into type
regions, with the neighbour relation saying which regions can touch.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .contexts import GarsideContext
from .elements import (
    GroupElement,
    PositiveElement,
    divide,
    is_pure,
    phi,
    simple,
)


@dataclass(frozen=True)
class OrderType:
    """Order-type of an integer tuple as its dense rank vector.

    ranks[i] is the number of distinct values strictly below value i, so two
    tuples are order-equivalent exactly when their rank vectors agree.
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        d = len(set(self.ranks))
        if self.ranks and set(self.ranks) != set(range(d)):
            raise ValueError(f"rank vector {self.ranks} is not dense")

    @property
    def arity(self) -> int:
        return len(self.ranks)

    @classmethod
    def of(cls, values: Sequence[int]) -> "OrderType":
        """
        >>> OrderType.of((7, 3, 7)).ranks
        (1, 0, 1)
        """
        order = {v: i for i, v in enumerate(sorted(set(values)))}
        return cls(tuple(order[v] for v in values))

    @property
    def name(self) -> str:
        """Bracketed chain display, e.g. ``[1>2=3]``.

        Groups of equal atoms are chained by value; the chain descends
        exactly when atom 1 sits in the top group and there is more than
        one group, matching the usual way these types are written.
        """
        if not self.ranks:
            return "[]"
        nlevels = max(self.ranks) + 1
        groups = [
            [i + 1 for i, r in enumerate(self.ranks) if r == lvl]
            for lvl in range(nlevels)
        ]
        descending = nlevels > 1 and self.ranks[0] == nlevels - 1
        if descending:
            groups.reverse()
            sep = ">"
        else:
            sep = "<"
        return "[" + sep.join("=".join(map(str, g)) for g in groups) + "]"

    @classmethod
    def parse(cls, text: str, arity: Optional[int] = None) -> "OrderType":
        """Parse a bracketed chain like ``[1>2=3]`` or ``1<2``.

        >>> OrderType.parse('[1=3<2]').ranks
        (0, 1, 0)
        """
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        if not body:
            raise ValueError("empty order-type")
        direction = None
        groups: list[list[int]] = [[]]
        token = ""

        def flush():
            if not token:
                raise ValueError(f"malformed order-type {text!r}")
            groups[-1].append(int(token))

        for ch in body:
            if ch.isdigit():
                token += ch
                continue
            if ch in "<>":
                if direction is not None and ch != direction:
                    raise ValueError(f"mixed chain directions in {text!r}")
                direction = ch
                flush()
                token = ""
                groups.append([])
            elif ch == "=":
                flush()
                token = ""
            elif ch.isspace():
                continue
            else:
                raise ValueError(f"bad character {ch!r} in order-type {text!r}")
        flush()
        if direction == ">":
            groups.reverse()
        atoms = [a for g in groups for a in g]
        n = arity if arity is not None else len(atoms)
        if sorted(atoms) != list(range(1, n + 1)):
            raise ValueError(f"order-type {text!r} must mention atoms 1..{n} once each")
        ranks = [0] * n
        for lvl, g in enumerate(groups):
            for a in g:
                ranks[a - 1] = lvl
        return cls(tuple(ranks))

    def __str__(self) -> str:
        return self.name


# -- valuations

Element = Union[GroupElement, PositiveElement]


def nu(s: int, x: Element, check_pure: bool = True) -> int:
    """Valuation of x by the pure simple with index s.

    Positive part: maximal k with s^k a left divisor (greedy stripping).
    A decomposition x = z . Delta^k contributes k on top; canonically
    z = phi^-inf(body).
    """
    ctx = x.ctx
    if check_pure and not is_pure(ctx, s):
        raise ValueError(
            f"simple {ctx.simple_str(s)!r} is not pure; valuation undefined"
        )
    if isinstance(x, GroupElement):
        z = phi(PositiveElement(ctx, x.body), -x.inf)
        return nu(s, z, check_pure=False) + x.inf
    se = simple(ctx, s)
    k = 0
    cur = x
    while True:
        nxt = divide(cur, se, "left")
        if nxt is None:
            return k
        cur = nxt
        k += 1


def valuation_sequence(x: Element) -> tuple[int, ...]:
    """(nu_atom(x)) over the context's atoms, in atom order.

    Every atom must be pure; contexts with an impure atom (the exotic
    monoid) have no valuation sequence.
    """
    ctx = x.ctx
    t = ctx.tables
    for a in range(t.natoms):
        if not is_pure(ctx, t.atom_simple[a]):
            raise ValueError(
                f"atom {ctx.atom_names[a]!r} of {ctx.key} is not pure; "
                "valuation sequences are undefined here"
            )
    return tuple(nu(t.atom_simple[a], x, check_pure=False) for a in range(t.natoms))


def type_of(x: Element) -> OrderType:
    return OrderType.of(valuation_sequence(x))


# -- order-type combinatorics

def ordered_bell(n: int) -> int:
    """Number of order-types of n-tuples.

    Closed form: sum over p of a_p p^n where a_p alternates binomials
    C(p+q, q) for p+q <= n.

    >>> [ordered_bell(k) for k in range(1, 6)]
    [1, 3, 13, 75, 541]
    """
    if not 1 <= n <= 8:
        raise ValueError("arity must be between 1 and 8")
    total = 0
    for p in range(1, n + 1):
        a_p = sum((-1) ** q * math.comb(p + q, q) for q in range(n - p + 1))
        total += a_p * p**n
    return total


def enumerate_order_types(n: int) -> list[OrderType]:
    """All order-types of arity n, sorted by rank vector."""
    if not 1 <= n <= 8:
        raise ValueError("arity must be between 1 and 8")
    results: list[tuple[int, ...]] = []

    def place(i: int, blocks: list[list[int]]) -> None:
        if i == n:
            ranks = [0] * n
            for lvl, blk in enumerate(blocks):
                for a in blk:
                    ranks[a] = lvl
            results.append(tuple(ranks))
            return
        for blk in blocks:
            blk.append(i)
            place(i + 1, blocks)
            blk.pop()
        for pos in range(len(blocks) + 1):
            blocks.insert(pos, [i])
            place(i + 1, blocks)
            del blocks[pos]

    place(0, [])
    return [OrderType(r) for r in sorted(results)]


def _rank(values: tuple[int, ...]) -> tuple[int, ...]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return tuple(order[v] for v in values)


@functools.lru_cache(maxsize=65536)
def _neighbour_ranks(r1: tuple[int, ...], r2: tuple[int, ...]) -> bool:
    n = len(r1)
    deltas = list(itertools.product((0, 1), repeat=n))[1:]  # identity handled first
    for a, b in ((r1, r2), (r2, r1)):
        if a == b:
            return True
        d = len(set(a))
        for vals in itertools.combinations(range(2 * n + 1), d):
            k = tuple(vals[x] for x in a)
            for dl in deltas:
                if _rank(tuple(k[i] + dl[i] for i in range(n))) == b:
                    return True
    return False


def is_neighbour(t1: OrderType, t2: OrderType) -> bool:
    """Whether representatives k in t1, k' in t2 exist with k'-k in {0,1}^n
    or in {0,-1}^n.

    Searched over representatives with values in 0..2n: dense ranks realize
    any type with fewer than n values, and a 0/1 perturbation moves each
    rank boundary by at most one level, so the window is exhaustive.
    """
    if t1.arity != t2.arity:
        raise ValueError("order-types of different arity")
    return _neighbour_ranks(t1.ranks, t2.ranks)


@dataclass(frozen=True)
class NeighbourGraph:
    arity: int
    nodes: tuple[OrderType, ...]
    edges: tuple[tuple[int, int], ...]

    def index(self, t: OrderType) -> int:
        try:
            return self.nodes.index(t)
        except ValueError:
            raise KeyError(f"type {t.name} not in graph") from None

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.nodes))}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def to_dot(self) -> str:
        lines = [f"graph order_types_{self.arity} {{"]
        for t in self.nodes:
            lines.append(f'  "{t.name}";')
        for i, j in self.edges:
            lines.append(f'  "{self.nodes[i].name}" -- "{self.nodes[j].name}";')
        lines.append("}")
        return "\n".join(lines)


def neighbour_graph(n: int) -> NeighbourGraph:
    """The undirected graph of order-types under the neighbour relation
    (self-loops omitted; the relation is reflexive)."""
    nodes = tuple(enumerate_order_types(n))
    edges = tuple(
        (i, j)
        for i in range(len(nodes))
        for j in range(i + 1, len(nodes))
        if is_neighbour(nodes[i], nodes[j])
    )
    return NeighbourGraph(n, nodes, edges)


def separation(
    graph: NeighbourGraph,
    source: OrderType,
    target: OrderType,
    removed: Iterable[OrderType] = (),
) -> bool:
    """True when every source-to-target path meets the removed set."""
    src = graph.index(source)
    dst = graph.index(target)
    cut = {graph.index(t) for t in removed}
    if src in cut or dst in cut:
        raise ValueError("removed set must not contain the endpoints")
    adj = graph.adjacency()
    seen = {src}
    frontier = [src]
    while frontier:
        nxt = []
        for i in frontier:
            for j in adj[i]:
                if j not in seen and j not in cut:
                    if j == dst:
                        return False
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return True
