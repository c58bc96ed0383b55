"""Normal-form engines: reference behaviour, and compiled/pure parity.

The pure-Python engine is the reference; correctness is checked against the
rewriting oracle on exhaustive small enumerations.  The compiled engine is
then held to exact result equality with the reference on the same inputs.
"""

import itertools
import random

import pytest

from garside import _kernel_py, kernel, oracle
from garside.contexts import build_context

CONTEXTS = ["braid:3", "braid:4", "dihedral:4", "table:exotic-aba-bb"]


def ref_engine(key):
    return _kernel_py.Engine(build_context(key).tables)


def test_letter_nf():
    b3 = build_context("braid:3")
    eng = ref_engine("braid:3")
    assert eng.letter_nf(1) == (0, (b3.tables.atom_simple[0],))
    d, fs = eng.letter_nf(-1)
    assert d == -1 and len(fs) == 1
    with pytest.raises(ValueError):
        eng.letter_nf(0)
    with pytest.raises(ValueError):
        eng.letter_nf(3)


def test_normalize_pins():
    b3 = build_context("braid:3")
    eng = ref_engine("braid:3")
    a, b = b3.tables.atom_simple
    delta = b3.tables.delta
    # aba = Delta = bab
    assert eng.normalize([a, b, a]) == (1, ())
    assert eng.normalize([b, a, b]) == (1, ())
    assert eng.normalize([]) == (0, ())
    assert eng.normalize([0, a, 0]) == (0, (a,))
    # the product of the two atoms collapses into the single simple ab
    d, fs = eng.normalize([a, b])
    assert d == 0 and len(fs) == 1 and b3.tables.norm[fs[0]] == 2
    assert eng.normalize([delta, a]) == (1, (a,))
    # greedy heads: aabb comes out a . ab . b
    d, fs = eng.normalize([a, a, b, b])
    assert d == 0 and [b3.simple_str(f) for f in fs] == ["a", "ab", "b"]


def test_normalize_is_left_greedy():
    """Every adjacent output pair refuses further transfer."""
    for key in CONTEXTS:
        t = build_context(key).tables
        eng = _kernel_py.Engine(t)
        rng = random.Random(11)
        for _ in range(150):
            fs = [rng.randrange(1, t.nsimples) for _ in range(rng.randrange(6))]
            d, out = eng.normalize(fs)
            assert 0 not in out
            assert t.delta not in out, "Delta factor left uncollected"
            for x, y in zip(out, out[1:]):
                mask = t.ldesc[y]
                a = 0
                while mask:
                    if mask & 1:
                        assert t.rmul[x * t.natoms + a] == -1
                    mask >>= 1
                    a += 1


def test_from_letters_against_oracle_exhaustive():
    """Kernel word problem vs rewriting closure, all signed B3 words, len <= 4."""
    t = build_context("braid:3").tables
    eng = _kernel_py.Engine(t)
    alphabet = [1, 2, -1, -2]
    for n in range(5):
        for letters in itertools.product(alphabet, repeat=n):
            kernel_trivial = eng.from_letters(letters) == (0, ())
            assert kernel_trivial == oracle.oracle_trivial(t, letters), letters


def test_mul_inv_group_laws():
    for key in CONTEXTS:
        t = build_context(key).tables
        eng = _kernel_py.Engine(t)
        rng = random.Random(5)
        na = t.natoms
        for _ in range(120):
            u = [rng.choice((1, -1)) * rng.randrange(1, na + 1)
                 for _ in range(rng.randrange(8))]
            v = [rng.choice((1, -1)) * rng.randrange(1, na + 1)
                 for _ in range(rng.randrange(8))]
            x = eng.from_letters(u)
            y = eng.from_letters(v)
            assert eng.mul(*x, *y) == eng.from_letters(list(u) + list(v))
            ix = eng.inv(*x)
            assert eng.mul(*x, *ix) == (0, ())
            assert eng.mul(*ix, *x) == (0, ())
            assert eng.inv(*ix) == x


def test_prefix_states_match_from_letters():
    eng = ref_engine("braid:4")
    rng = random.Random(1)
    for _ in range(50):
        letters = [rng.choice((1, -1)) * rng.randrange(1, 4)
                   for _ in range(rng.randrange(10))]
        states = eng.prefix_states(letters)
        assert states[0] == (0, ())
        for k in range(len(letters) + 1):
            assert states[k] == eng.from_letters(letters[:k])


def test_pair_scan_definition():
    """pair_scan hits are exactly the pairs whose deletion keeps the element."""
    for key in ("braid:3", "dihedral:4"):
        eng = ref_engine(key)
        na = build_context(key).tables.natoms
        rng = random.Random(23)
        for _ in range(80):
            n = rng.randrange(2, 9)
            letters = [rng.choice((1, -1)) * rng.randrange(1, na + 1)
                       for _ in range(n)]
            whole = eng.from_letters(letters)
            expected = []
            for i in range(n - 1):
                for j in range(i + 1, n):
                    if (letters[i] > 0) == (letters[j] > 0):
                        continue
                    deleted = letters[:i] + letters[i + 1:j] + letters[j + 1:]
                    if eng.from_letters(deleted) == whole:
                        expected.append((i, j))
            assert eng.pair_scan(letters) == expected
            assert eng.pair_scan(letters, first_only=True) == expected[:1]


def test_phi_shift():
    eng = ref_engine("braid:4")
    t = build_context("braid:4").tables
    fs = (3, 5, 7)
    assert eng.phi_shift(fs, 0) == fs
    assert eng.phi_shift(fs, 1) == tuple(t.phi[f] for f in fs)
    assert eng.phi_shift(eng.phi_shift(fs, 1), -1) == fs
    assert eng.phi_shift(fs, t.phi_order) == fs


# -- compiled backend

needs_compiled = pytest.mark.skipif(
    kernel.CompiledEngine is None, reason="compiled kernel not built"
)


@needs_compiled
def test_backend_selected():
    assert kernel.backend_name() == "cython"
    assert kernel.CompiledEngine.backend == "cython"
    assert kernel.PyEngine.backend == "python"


@needs_compiled
@pytest.mark.parametrize("key", CONTEXTS + ["braid:7"])
def test_compiled_parity(key):
    """The compiled engine returns bit-identical results to the reference."""
    t = build_context(key).tables
    ref = _kernel_py.Engine(t)
    new = kernel.CompiledEngine(t)
    rng = random.Random(97)
    na = t.natoms
    trials = 60 if key == "braid:7" else 250
    for _ in range(trials):
        letters = [rng.choice((1, -1)) * rng.randrange(1, na + 1)
                   for _ in range(rng.randrange(14))]
        assert ref.from_letters(letters) == new.from_letters(letters)
        assert ref.prefix_states(letters) == new.prefix_states(letters)
        assert ref.pair_scan(letters) == new.pair_scan(letters)
        fa = [rng.randrange(t.nsimples) for _ in range(rng.randrange(6))]
        fb = [rng.randrange(t.nsimples) for _ in range(rng.randrange(6))]
        assert ref.normalize(fa) == new.normalize(fa)
        x = ref.normalize(fa)
        y = ref.normalize(fb)
        da, db = rng.randrange(-4, 5), rng.randrange(-4, 5)
        assert ref.mul(da, x[1], db, y[1]) == new.mul(da, x[1], db, y[1])
        assert ref.inv(da, x[1]) == new.inv(da, x[1])
        assert ref.phi_shift(fa, da) == new.phi_shift(fa, da)


@needs_compiled
def test_compiled_error_parity():
    t = build_context("braid:3").tables
    ref = _kernel_py.Engine(t)
    new = kernel.CompiledEngine(t)
    for bad in (0, 3, -3, 99, -99):
        with pytest.raises(ValueError) as e_new:
            new.letter_nf(bad)
        with pytest.raises(ValueError) as e_ref:
            ref.letter_nf(bad)
        assert str(e_new.value) == str(e_ref.value)
