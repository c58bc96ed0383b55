"""Derivation of simple tables from a finite monoid presentation.

Given atoms and positive relations, this module finds the Garside element by
brute force (the norm-least element whose left and right divisor sets agree
and contain every atom), enumerates its divisors as the simples, and emits
the table-file format that :func:`garside.contexts.load_table_context`
parses.  The loader reconstructs and re-validates everything independently,
so a generated file is checked by two separate code paths before use.

Everything here is exponential in word length; it exists for small exotic
presentations, not for the generic families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import atom_char, class_key, rewrite_closure


@dataclass(frozen=True)
class DerivedPresentation:
    atom_names: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]  # positional letters
    simples: tuple[str, ...]                # canonical words, positional letters
    norm: tuple[int, ...]
    left_complement: tuple[tuple[int, ...], ...]
    phi: tuple[int, ...]


def derive_presentation(
    atom_names: str | tuple[str, ...],
    relations: list[tuple[str, str]],
    max_len: int = 12,
    max_states: int = 200_000,
) -> DerivedPresentation:
    """Derive the Garside structure of ``<atoms | relations>``.

    ``relations`` use the atom names themselves (which must be single
    distinct lowercase letters).  Raises when no Garside element exists
    among the elements representable within ``max_len`` letters.
    """
    names = tuple(atom_names)
    na = len(names)
    if na == 0 or any(len(x) != 1 for x in names) or len(set(names)) != na:
        raise ValueError("atoms must be distinct single letters")
    trans = {ch: atom_char(i) for i, ch in enumerate(names)}
    rels = tuple(
        ("".join(trans[c] for c in l), "".join(trans[c] for c in r))
        for l, r in relations
    )

    cache: dict[str, frozenset[str]] = {}

    def closure(w: str) -> frozenset[str]:
        got = cache.get(w)
        if got is None:
            got = rewrite_closure(w, rels, max_states=max_states)
            for member in got:
                cache[member] = got
        return got

    def key(w: str) -> tuple[int, str]:
        return class_key(closure(w))

    # enumerate elements by representative length
    seen: dict[tuple[int, str], str] = {}
    frontier = [""]
    for _ in range(max_len + 1):
        nxt = []
        for w in frontier:
            k = key(w)
            if k in seen:
                continue
            seen[k] = k[1]
            nxt.extend(w + atom_char(a) for a in range(na))
        frontier = nxt

    def divisor_sets(rep: str) -> tuple[set, set]:
        ld, rd = set(), set()
        for w in closure(rep):
            for cut in range(len(w) + 1):
                ld.add(key(w[:cut]))
                rd.add(key(w[cut:]))
        return ld, rd

    atom_keys = {key(atom_char(a)) for a in range(na)}
    best = None
    for k, rep in seen.items():
        if k == (0, ""):
            continue
        ld, rd = divisor_sets(rep)
        if ld == rd and atom_keys <= ld:
            nrm = max(len(w) for w in closure(rep))
            cand = (nrm, k, rep, ld)
            if best is None or cand[:2] < best[:2]:
                best = cand
    if best is None:
        raise ValueError(
            f"no Garside element found among elements of length <= {max_len}"
        )
    _, dkey, drep, ldiv = best

    norms = {k: max(len(w) for w in closure(seen[k])) for k in ldiv}
    order = sorted(ldiv, key=lambda k: (norms[k], k))
    assert order[0] == (0, "") and order[-1] == dkey
    simples = tuple(seen[k] for k in order)
    index = {k: i for i, k in enumerate(order)}
    ns = len(simples)

    def elem(w: str) -> int | None:
        return index.get(key(w))

    def products_onto(i: int) -> dict[int, int]:
        """For s_i: map z -> u over all simple u with u . s_i = z."""
        out: dict[int, int] = {}
        for u in range(ns):
            z = elem(simples[u] + simples[i])
            if z is not None:
                if z in out:
                    raise ValueError("left quotients not unique; not cancellative")
                out[z] = u
        return out

    onto = [products_onto(i) for i in range(ns)]
    matrix = []
    for i in range(ns):
        row = []
        for j in range(ns):
            common = sorted(set(onto[i]) & set(onto[j]), key=lambda z: norms[order[z]])
            z = common[0]
            if sum(1 for c in common if norms[order[c]] == norms[order[z]]) != 1:
                raise ValueError(f"left lcm of simples {i},{j} is not unique")
            row.append(onto[i][z])
        matrix.append(tuple(row))

    delta = ns - 1
    compl_r = []
    for s in range(ns):
        cr = [u for u in range(ns) if elem(simples[s] + simples[u]) == delta]
        if len(cr) != 1:
            raise ValueError("right complement toward Delta must exist uniquely")
        compl_r.append(cr[0])
    phi = tuple(compl_r[compl_r[s]] for s in range(ns))

    back = {atom_char(i): ch for i, ch in enumerate(names)}
    return DerivedPresentation(
        atom_names=names,
        relations=rels,
        simples=simples,
        norm=tuple(norms[k] for k in order),
        left_complement=tuple(matrix),
        phi=phi,
    )


def emit_table_file(d: DerivedPresentation, title: str) -> str:
    """Serialize a derived presentation in the loadable table-file format."""
    back = {atom_char(i): ch for i, ch in enumerate(d.atom_names)}

    def show(w: str) -> str:
        return "".join(back[c] for c in w) if w else "1"

    lines = [f"# {title}", "# generated file; regenerate rather than editing", ""]
    lines.append("[atoms]")
    lines.append(" ".join(d.atom_names))
    lines.append("")
    lines.append("[simples]")
    lines.extend(show(w) for w in d.simples)
    lines.append("")
    lines.append("[left_complement]")
    lines.extend(" ".join(str(x) for x in row) for row in d.left_complement)
    lines.append("")
    lines.append("[phi]")
    lines.append(" ".join(str(x) for x in d.phi))
    lines.append("")
    return "\n".join(lines)


EXOTIC_ATOMS = ("a", "b")
EXOTIC_RELATIONS = [("aba", "bb")]
EXOTIC_TITLE = "Garside context for the monoid <a, b | aba = bb>"


def exotic_table_text() -> str:
    # max_len 8 is ample: the Garside element's shortest spelling has length
    # 3, and the loader re-validates every axiom on load anyway.
    return emit_table_file(
        derive_presentation(EXOTIC_ATOMS, EXOTIC_RELATIONS, max_len=8), EXOTIC_TITLE
    )
