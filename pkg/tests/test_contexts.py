"""Context construction, the table-file loader, and the exotic instance."""

import pytest

from garside.contexts import (
    braid_context,
    build_context,
    dihedral_context,
    load_table_context,
    table_context,
)
from garside.tablegen import (
    EXOTIC_ATOMS,
    EXOTIC_RELATIONS,
    derive_presentation,
    emit_table_file,
    exotic_table_text,
)


def test_build_context_specs():
    assert build_context("braid:4").key == "braid:4"
    assert build_context("braid:4") is build_context("braid:4")  # cached
    assert build_context(" braid:4 ").key == "braid:4"
    assert build_context("dihedral:5").kind == "dihedral"
    assert braid_context(3).natoms == 2
    assert dihedral_context(6).natoms == 2
    assert braid_context(4).strands == 4
    with pytest.raises(ValueError):
        build_context("braid")
    with pytest.raises(ValueError):
        build_context("frobnicate:3")
    with pytest.raises(ValueError):
        dihedral_context(6).strands


def test_context_word_plumbing():
    b4 = braid_context(4)
    assert b4.parse("abC") == ((1, 1), (2, 1), (3, -1))
    with pytest.raises(ValueError):
        b4.parse("d")
    assert b4.format(((1, 1), (3, -1))) == "aC"
    assert b4.letters(((1, 1), (3, -1))) == (1, -3)
    assert b4.simple_str(0) == "1"
    assert b4.simple_str(b4.delta) == "D"
    assert b4.simple_str(b4.delta, expand_delta=True) == "abacba"
    assert b4.nf_str((0, ())) == "e"
    assert b4.nf_str((-1, (b4.tables.atom_simple[0],))) == "D^-1 . a"
    assert b4.nf_str((1, ())) == "D"


def test_braid3_equals_dihedral3_tables():
    """braid:3 and dihedral:3 present the same group; tables must agree up
    to the simple indexing."""
    b = braid_context(3).tables
    d = dihedral_context(3).tables
    assert b.nsimples == d.nsimples == 6
    assert sorted(b.norm) == sorted(d.norm)
    assert sorted(b.word) == sorted(d.word)


def test_phi_atom_and_exponents():
    b4 = braid_context(4)
    assert b4.phi_atom == (2, 1, 0)
    assert b4.coxeter_exponents == {(0, 1): 3, (0, 2): 2, (1, 2): 3}
    d5 = dihedral_context(5)
    assert d5.phi_atom == (1, 0)
    assert d5.coxeter_exponents == {(0, 1): 5}
    d6 = dihedral_context(6)
    assert d6.phi_atom == (0, 1)


def test_exotic_context_shape():
    """The bundled exotic monoid <a, b | aba = bb>."""
    exo = table_context("exotic-aba-bb")
    t = exo.tables
    assert exo.kind == "table"
    assert t.natoms == 2
    assert t.nsimples == 8
    # Delta = b^3 with norm 4 (norm counts atoms in the longest spelling)
    assert t.norm[t.delta] == 4
    assert t.word[t.delta] in ((1, 1, 1),)
    # the twist automorphism is trivial here
    assert t.phi == tuple(range(8))
    assert t.phi_order == 1
    # b^2 is simple, with norm 3: its longest spelling is aba
    two = sorted(t.word[s] for s in range(8) if t.norm[s] == 2)
    assert two == [(0, 1), (1, 0)]
    three = sorted(t.word[s] for s in range(8) if t.norm[s] == 3)
    assert three == [(1, 0, 1), (1, 1)]


def test_exotic_relations_round_trip():
    exo = table_context("exotic-aba-bb")
    assert exo.relations == (("aba", "bb"),)


def test_generated_file_is_fresh():
    """The bundled table file matches a from-scratch derivation."""
    from importlib import resources

    bundled = resources.files("garside.data").joinpath("exotic-aba-bb.tables")
    assert bundled.read_text() == exotic_table_text()


def test_loader_rejects_tampering(tmp_path):
    """Any single corrupted field must fail the reconstruction check."""
    good = exotic_table_text()

    def load_variant(mangle):
        p = tmp_path / "t.tables"
        p.write_text(mangle(good))
        return load_table_context(str(p))

    # the pristine file loads
    t = load_variant(lambda s: s)
    assert t.nsimples == 8

    with pytest.raises(ValueError, match="phi"):
        load_variant(lambda s: s.replace("[phi]\n0 1", "[phi]\n1 0"))
    with pytest.raises(ValueError):
        # drop one simple: divisor completeness fails
        load_variant(lambda s: s.replace("\nab\n", "\n"))
    with pytest.raises(ValueError):
        # swap two rows of the complement matrix
        lines = good.splitlines()
        i = lines.index("[left_complement]")
        lines[i + 1], lines[i + 2] = lines[i + 2], lines[i + 1]
        load_variant(lambda s: "\n".join(lines) + "\n")
    with pytest.raises(ValueError, match="identity"):
        load_variant(lambda s: s.replace("[simples]\n1\n", "[simples]\n"))


def test_loader_missing_sections(tmp_path):
    p = tmp_path / "broken.tables"
    p.write_text("[atoms]\na b\n")
    with pytest.raises(ValueError, match="missing sections"):
        load_table_context(str(p))
    with pytest.raises(FileNotFoundError):
        load_table_context("no-such-bundle")


def test_derive_presentation_on_a_known_family():
    """Deriving I2(3) from its presentation must reproduce the closed form."""
    d = derive_presentation(("a", "b"), [("aba", "bab")], max_len=6)
    assert len(d.simples) == 6
    assert d.norm[-1] == 3
    text = emit_table_file(d, "derived I2(3)")
    got = None
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".tables", delete=False) as fh:
        fh.write(text)
        name = fh.name
    got = load_table_context(name)
    ref = dihedral_context(3).tables
    assert got.nsimples == ref.nsimples
    assert sorted(got.norm) == sorted(ref.norm)


def test_derive_presentation_exotic_constants():
    d = derive_presentation(EXOTIC_ATOMS, EXOTIC_RELATIONS, max_len=8)
    assert len(d.simples) == 8
    assert d.phi == tuple(range(8))


def test_mirror_engine_agrees_on_palindromes():
    b3 = braid_context(3)
    # Delta is its own mirror in B3; normal forms agree factorwise
    d, fs = b3.engine.normalize([b3.delta])
    dm, fsm = b3.mirror_engine.normalize([b3.delta])
    assert (d, fs) == (dm, fsm) == (1, ())
