"""Signed words over monoid atoms.

A word is a sequence of letters; a letter is a pair ``(atom, exp)`` with
``atom`` a 1-based atom index and ``exp`` either ``+1`` or ``-1``.  Words are
purely syntactic: they carry no context, and atom-range checks happen at the
point of use.

Two text syntaxes are supported:

* compact: one character per letter, ``a``..``z`` for atoms 1..26, the
  corresponding uppercase letter for the inverse.  ``"aBa"`` is
  ``s1 s2^-1 s1``.  Whitespace is ignored.
* numeric: signed integers separated by whitespace or commas, ``"1 -2 1"``.

The transforms (:func:`invert`, :func:`flip`, :func:`cyclic_shift`) return the
transformed word together with an index map ``m`` with ``m[new] = old``, so
positions found in a transformed word can be pulled back to the original.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Letter = tuple[int, int]
Word = tuple[Letter, ...]

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def word(letters: Iterable[Letter]) -> Word:
    """Validate and freeze a letter sequence into a Word.

    >>> word([(1, 1), (2, -1)])
    ((1, 1), (2, -1))
    """
    out = []
    for atom, exp in letters:
        if atom < 1:
            raise ValueError(f"atom index must be >= 1, got {atom}")
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
        out.append((atom, exp))
    return tuple(out)


def parse_word(text: str, numeric: bool = False) -> Word:
    """Parse a word from compact or numeric syntax.

    >>> parse_word("aBa")
    ((1, 1), (2, -1), (1, 1))
    >>> parse_word("1 -2 1", numeric=True)
    ((1, 1), (2, -1), (1, 1))
    """
    if numeric:
        out = []
        for tok in text.replace(",", " ").split():
            val = int(tok)
            if val == 0:
                raise ValueError("numeric letters must be nonzero signed atoms")
            out.append((abs(val), 1 if val > 0 else -1))
        return tuple(out)
    out = []
    for ch in text:
        if ch.isspace():
            continue
        low = ch.lower()
        idx = _ALPHABET.find(low)
        if idx < 0:
            raise ValueError(f"unexpected character {ch!r} in word")
        out.append((idx + 1, 1 if ch.islower() else -1))
    return tuple(out)


def format_word(w: Sequence[Letter], numeric: bool = False) -> str:
    """Inverse of :func:`parse_word` on canonical output.

    >>> format_word(((1, 1), (2, -1)))
    'aB'
    >>> format_word(((1, 1), (2, -1)), numeric=True)
    '1 -2'
    """
    if numeric:
        return " ".join(str(atom * exp) for atom, exp in w)
    parts = []
    for atom, exp in w:
        if atom > 26:
            raise ValueError("compact syntax covers atoms 1..26 only")
        ch = _ALPHABET[atom - 1]
        parts.append(ch if exp == 1 else ch.upper())
    return "".join(parts)


def free_reduce(w: Sequence[Letter]) -> Word:
    """Cancel adjacent ``s s^-1`` and ``s^-1 s`` pairs until none remain.

    >>> format_word(free_reduce(parse_word("aAbBc")))
    'c'
    >>> free_reduce(parse_word("abBA"))
    ()
    """
    stack: list[Letter] = []
    for letter in w:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert(w: Sequence[Letter]) -> tuple[Word, tuple[int, ...]]:
    """The inverse word: reversed order, negated exponents.

    Returns ``(word, index_map)`` with ``index_map[new] = old``.

    >>> inv, m = invert(parse_word("aB"))
    >>> format_word(inv), m
    ('bA', (1, 0))
    """
    n = len(w)
    out = tuple((w[n - 1 - k][0], -w[n - 1 - k][1]) for k in range(n))
    return out, tuple(n - 1 - k for k in range(n))


def flip(w: Sequence[Letter], natoms: int) -> tuple[Word, tuple[int, ...]]:
    """Replace atom i by atom natoms+1-i throughout (positions unchanged).

    For a braid group on n strands pass ``natoms = n - 1``; the flip is the
    mirror automorphism s_i -> s_(n-i).

    >>> fl, m = flip(parse_word("aBc"), 3)
    >>> format_word(fl), m
    ('cBa', (0, 1, 2))
    """
    out = []
    for atom, exp in w:
        if atom > natoms:
            raise ValueError(f"atom {atom} out of range for flip over {natoms} atoms")
        out.append((natoms + 1 - atom, exp))
    return tuple(out), tuple(range(len(w)))


def cyclic_shift(w: Sequence[Letter], k: int) -> tuple[Word, tuple[int, ...]]:
    """Rotate so the letter at position k comes first.

    >>> sh, m = cyclic_shift(parse_word("abc"), 1)
    >>> format_word(sh), m
    ('bca', (1, 2, 0))
    """
    n = len(w)
    if n == 0:
        return (), ()
    k %= n
    idx = tuple((k + t) % n for t in range(n))
    return tuple(w[i] for i in idx), idx


def transform(w: Sequence[Letter], op: str, **kwargs) -> Word:
    """Dispatch helper: op is "invert", "flip" or "cyclic_shift".

    Returns the transformed word only; call the named functions directly when
    the index map is needed.
    """
    if op == "invert":
        return invert(w)[0]
    if op == "flip":
        return flip(w, kwargs["natoms"])[0]
    if op == "cyclic_shift":
        return cyclic_shift(w, kwargs["k"])[0]
    raise ValueError(f"unknown transform {op!r}")


def signed_letters(w: Sequence[Letter]) -> tuple[int, ...]:
    """Encode letters as signed ints (+atom / -atom) for the kernel."""
    return tuple(atom * exp for atom, exp in w)


def from_signed(letters: Iterable[int]) -> Word:
    """Decode the kernel's signed-int encoding back into a Word."""
    return word((abs(v), 1 if v > 0 else -1) for v in letters)


def load_corpus(path) -> list[Word]:
    """Read a word-corpus file: one compact word per line.

    ``#`` starts a comment (whole-line or trailing).  Blank lines are
    skipped; the empty word is not representable in a corpus.
    """
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                out.append(parse_word(body))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return out
