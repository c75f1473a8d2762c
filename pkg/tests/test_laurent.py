from tli.laurent import (
    LaurentMatrix,
    LaurentPolynomial,
    exact_div,
    laurent_gcd,
    parse_poly,
)


def test_parse_and_str_roundtrip():
    for text in ("0", "1", "-1", "x", "x^-1", "2*x*y - 3", "x^2*y^-1 + y"):
        p = parse_poly(text, 2)
        assert parse_poly(str(p), 2) == p


def test_ring_axioms_small():
    x = LaurentPolynomial.variable(0, 2)
    y = LaurentPolynomial.variable(1, 2)
    one = LaurentPolynomial.one(2)
    assert x * y == y * x
    assert (x + y) * (x - y) == x * x - y * y
    assert x * LaurentPolynomial.variable(0, 2, power=-1) == one
    assert (x + one) ** 3 == x ** 3 + 3 * x * x + 3 * x + one


def test_bar_inverts_variables():
    p = parse_poly("x^2*y^-1 + 3*x - 2", 2)
    assert p.bar() == parse_poly("x^-2*y + 3*x^-1 - 2", 2)
    assert p.bar().bar() == p


def test_unit_normalize():
    p = parse_poly("x^-3*y + x^-2", 2)
    q = p.unit_normalize()
    # normalization shifts minimum exponents to zero and fixes the sign of
    # the lexicographically smallest monomial
    assert q == parse_poly("y + x", 2)
    assert (-p).unit_normalize() == q
    assert p.shift((5, -2)).unit_normalize() == q
    assert LaurentPolynomial.zero(2).unit_normalize().is_zero()


def test_specialize_ones():
    p = parse_poly("x^2*y^-1 - 3*x + 1", 2)
    assert p.specialize_ones() == -1


def test_matrix_determinant_matches_integer_det():
    m = LaurentMatrix.from_int([[2, 1, 0], [1, 3, -1], [0, 4, 2]])
    assert m.determinant() == LaurentPolynomial.constant(18, 0)


def test_matrix_determinant_laurent():
    m = LaurentMatrix([[parse_poly("1", 1), parse_poly("t", 1)],
                       [parse_poly("t^-1", 1), parse_poly("2", 1)]])
    assert m.determinant() == parse_poly("1", 1)


def test_exact_div():
    p = parse_poly("x^2 - y^2", 2)
    q = parse_poly("x - y", 2)
    assert exact_div(p, q) == parse_poly("x + y", 2)
    assert exact_div(p, q) * q == p


def test_laurent_gcd():
    a = parse_poly("t^2 - 1", 1) * parse_poly("t + 2", 1)
    b = parse_poly("t - 1", 1) * parse_poly("t + 3", 1)
    g = laurent_gcd(a, b)
    assert g.unit_normalize() == parse_poly("t - 1", 1).unit_normalize()
    assert laurent_gcd(a, LaurentPolynomial.zero(1)).unit_normalize() \
        == a.unit_normalize()


def test_substitute_basis():
    p = parse_poly("x + y^-1", 2)
    # x maps to the monomial with exponent column (1, 1), i.e. x*y
    q = p.substitute_basis([[1, 0], [1, 1]])
    assert q == parse_poly("x*y + y^-1", 2)


def test_bar_transpose_symmetric():
    sym = LaurentMatrix([[parse_poly("1", 1), parse_poly("t", 1)],
                         [parse_poly("t^-1", 1), parse_poly("2", 1)]])
    assert sym.bar_transpose_symmetric()
    asym = LaurentMatrix([[parse_poly("1", 1), parse_poly("t", 1)],
                          [parse_poly("t", 1), parse_poly("2", 1)]])
    assert not asym.bar_transpose_symmetric()
