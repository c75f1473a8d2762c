from tli.coloring import coloring_system, module_order
from tli.fixtures import fixture_names, load_fixture
from tli.tait import (
    dual_tait,
    laplacian,
    laplacian_group,
    laplacian_polynomial,
    tait_graph,
    vertex_elimination_row,
)


def test_graph_shape():
    for name in fixture_names():
        d = load_fixture(name)
        shading = d.checkerboard_shade()
        if shading is None:
            continue
        g = tait_graph(d, shading)
        assert len(g.edges) == d.num_crossings
        assert set(g.vertices) == set(shading)
        gd = dual_tait(d, shading)
        assert set(gd.vertices) == set(d.complement_shading(shading))


def test_laplacian_is_bar_symmetric():
    for name in fixture_names():
        d = load_fixture(name)
        if d.checkerboard_shade() is None:
            continue
        ld = laplacian(tait_graph(d))
        assert ld.matrix_laurent.bar_transpose_symmetric()


def test_laplacian_groups_of_knots():
    for name, torsion in (("trefoil", (3,)), ("figure8", (5,)),
                          ("hopf", (2,))):
        ld = laplacian(tait_graph(load_fixture(name)))
        assert laplacian_group(ld).torsion == torsion


def test_polynomial_equals_module_order():
    for name in ("theta1", "theta2"):
        d = load_fixture(name)
        sh = d.checkerboard_shade()
        delta = laplacian_polynomial(laplacian(tait_graph(d, sh)))
        assert delta == module_order(coloring_system(d, sh)).unit_normalize()


def test_vertex_elimination_reproduces_rows():
    d = load_fixture("theta2")
    sh = d.checkerboard_shade()
    ld = laplacian(tait_graph(d, sh))
    for vi, v in enumerate(ld.vertices):
        row = vertex_elimination_row(d, sh, v)
        assert row == [ld.matrix_laurent[vi, j]
                       for j in range(len(ld.vertices))]
