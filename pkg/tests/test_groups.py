from tli.fixtures import fixture_names, load_fixture
from tli.groups import (
    Word,
    dehn,
    derivative_map,
    parse_presentation,
    parse_word,
    quotient_presentation,
    surface_relators,
    wirtinger,
)


def test_word_algebra():
    a = Word.generator("a")
    b = Word.generator("b")
    w = a * b * b.inverse() * a
    assert w.free_reduce() == (a * a).free_reduce()
    assert (w * w.inverse()).free_reduce().is_identity()
    assert parse_word("a b^-1 a^2").exponent_sums(["a", "b"]) == [3, -1]


def test_parse_word_roundtrip():
    for text in ("a", "a^-1", "a b^-2 c", "x1 x2^-1"):
        w = parse_word(text)
        assert parse_word(str(w)) == w


def test_cyclic_reduce():
    w = parse_word("a b a^-1")
    assert w.cyclic_reduce() == parse_word("b")


def test_presentation_parse_and_abelianization():
    p = parse_presentation("<a, b | a b = b a, a^3>")
    snf = p.abelianization()
    assert snf.torsion == (3,)
    assert snf.free_rank == 1


def test_tietze_simplify_free_group():
    p = parse_presentation("<a, b | a = b>")
    simp = p.tietze_simplify()
    assert len(simp.generators) == 1 and not simp.relations
    assert simp.abelianization().same_cokernel(p.abelianization())


def test_matches_up_to_renaming():
    p = parse_presentation("<a, b | a b = b a>")
    q = parse_presentation("<x, y | y x = x y>")
    assert p.matches_up_to_renaming(q)
    r = parse_presentation("<x, y | x^2>")
    assert not p.matches_up_to_renaming(r)


def test_wirtinger_generator_count():
    # one generator per arc: over-strands through each crossing merge edges
    d = load_fixture("trefoil")
    p = wirtinger(d)
    assert len(p.generators) == 3
    assert len(p.relations) == 3
    assert p.abelianization().cokernel_description() == "Z"


def test_dehn_relation_counts():
    for name in fixture_names():
        d = load_fixture(name)
        base = dehn(d, with_base=True)
        free = dehn(d, with_base=False)
        assert len(base.generators) == d.num_faces
        assert len(base.relations) == d.num_crossings + 1
        assert len(free.relations) == d.num_crossings


def test_quotient_adds_surface_relators():
    for name in ("theta1", "curl_torus"):
        d = load_fixture(name)
        q = quotient_presentation(d)
        w = wirtinger(d)
        assert len(q.relations) == len(w.relations) + 2 * d.genus


def test_derivative_map_kills_surface_relators():
    d = load_fixture("curl_torus")
    fwd = derivative_map(d)
    for r in surface_relators(d):
        assert fwd(r).free_reduce().is_identity()


def test_wirtinger_abelianization_counts_components():
    for name, comps in (("trefoil", 1), ("hopf", 2), ("figure8", 1)):
        d = load_fixture(name)
        snf = wirtinger(d).abelianization()
        assert snf.torsion == ()
        assert snf.free_rank == comps
