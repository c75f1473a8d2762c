from tli.fox import (
    GroupRingElement,
    all_to_minus_one,
    all_to_t,
    fox_derivative,
    jacobian,
    specialize_element,
    specialize_jacobian,
)
from tli.groups import Word, parse_presentation, parse_word
from tli.laurent import LaurentMatrix, parse_poly


def _elem(text, coeff=1):
    return GroupRingElement.of(parse_word(text), coeff)


def test_base_cases():
    a = parse_word("a")
    assert fox_derivative(a, "a") == GroupRingElement.of(Word.identity())
    assert fox_derivative(a, "b").is_zero()
    assert fox_derivative(parse_word("a^-1"), "a") == _elem("a^-1", -1)
    assert fox_derivative(Word.identity(), "a").is_zero()


def test_product_rule():
    u = parse_word("a b")
    v = parse_word("b^-1 a")
    lhs = fox_derivative((u * v).free_reduce(), "a")
    rhs = fox_derivative(u, "a") + GroupRingElement.of(u) * fox_derivative(
        v, "a"
    )
    assert lhs == rhs


def test_known_derivative():
    # d/da (a b a^-1 b^-1) = 1 - a b a^-1
    w = parse_word("a b a^-1 b^-1")
    expect = GroupRingElement.of(Word.identity()) - _elem("a b a^-1")
    assert fox_derivative(w, "a") == expect


def test_jacobian_shape_and_specialization():
    p = parse_presentation("<a, b | a b = b a>")
    rows = jacobian(p)
    assert len(rows) == 1 and len(rows[0]) == 2
    images, nv = all_to_t(p.generators)
    m = specialize_jacobian(rows, images, nv)
    # d(aba^-1b^-1)/da -> 1 - t, d/db -> t - 1
    expect = LaurentMatrix(
        [[parse_poly("1 - t", 1), parse_poly("t - 1", 1)]]
    )
    assert m == expect


def test_all_to_minus_one():
    images, nv = all_to_minus_one(["a", "b"])
    assert nv == 0
    # a*b maps to (-1)(-1) = 1 and 2*a maps to -2
    val = specialize_element(_elem("a b") + _elem("a", 2), images, nv)
    assert val == parse_poly("-1", 0)


def test_group_ring_str():
    e = _elem("a") - GroupRingElement.of(Word.identity())
    assert str(e) in ("-1 + a", "a - 1")
