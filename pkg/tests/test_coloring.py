import pytest

from tli.coloring import (
    NotShadable,
    brute_force_colorings,
    coloring_group,
    coloring_system,
    expected_colorings,
    module_order,
)
from tli.fixtures import fixture_names, load_fixture


def test_not_shadable_raises():
    with pytest.raises(NotShadable):
        coloring_system(load_fixture("curl_torus"))


def test_system_shape():
    for name in fixture_names():
        d = load_fixture(name)
        if d.checkerboard_shade() is None:
            continue
        cs = coloring_system(d)
        assert len(cs.rows_int) == d.num_crossings
        assert cs.rows_laurent.rows == d.num_crossings
        assert cs.rows_laurent.cols == len(cs.faces)
        assert all(len(r) == len(cs.faces) for r in cs.rows_int)
        assert cs.nvars == 2 * d.genus


def test_trefoil_coloring_group():
    cs = coloring_system(load_fixture("trefoil"))
    snf = coloring_group(cs)
    assert snf.torsion == (3,)
    assert snf.free_rank == 2


def test_brute_force_matches_expected():
    for name in ("trefoil", "hopf", "theta1"):
        cs = coloring_system(load_fixture(name))
        for p in (2, 3):
            assert brute_force_colorings(cs, p) == expected_colorings(cs, p)


def test_module_order_shading_independent():
    d = load_fixture("theta1")
    sh = d.checkerboard_shade()
    a = module_order(coloring_system(d, sh))
    b = module_order(coloring_system(d, d.complement_shading(sh)))
    assert a.unit_normalize() == b.unit_normalize()


def test_rows_specialize_to_integer_rows():
    d = load_fixture("theta1")
    cs = coloring_system(d)
    assert cs.rows_laurent.to_int() == [list(r) for r in cs.rows_int]
