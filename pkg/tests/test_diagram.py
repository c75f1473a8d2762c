import pytest

from tli.diagram import DiagramError, parse_diagram, vec_add, vec_neg
from tli.fixtures import fixture_names, load_fixture

GENUS = {
    "trefoil": 0,
    "figure8": 0,
    "hopf": 0,
    "theta1": 1,
    "theta2": 1,
    "theta3": 1,
    "curl_torus": 1,
}


def test_fixture_genus_and_euler():
    for name in fixture_names():
        d = load_fixture(name)
        assert d.genus == GENUS[name]
        chi = d.num_crossings - d.num_edges + d.num_faces
        assert chi == 2 - 2 * d.genus


def test_face_degrees_cover_all_corners():
    for name in fixture_names():
        d = load_fixture(name)
        assert sum(len(f) for f in d.faces) == 4 * d.num_crossings


def test_left_right_faces_flank_each_edge():
    for name in fixture_names():
        d = load_fixture(name)
        for e in d.edges:
            lf, rf = d.left_face(e), d.right_face(e)
            assert any(s.edge == e and s.forward for s in rf.steps)
            assert any(s.edge == e and not s.forward for s in lf.steps) or \
                any(s.edge == e and s.forward for s in lf.steps)


def test_cocycle_defects_vanish():
    for name in fixture_names():
        d = load_fixture(name)
        for total in d.cocycle_defects(strict=True).values():
            assert not any(total)


def test_checkerboard_shading_is_proper():
    # the one-crossing torus curl has a single region, so no proper
    # two-coloring exists
    assert load_fixture("curl_torus").checkerboard_shade() is None
    for name in fixture_names():
        d = load_fixture(name)
        shading = d.checkerboard_shade()
        if shading is None:
            continue
        for e in d.edges:
            assert (d.left_face(e).name in shading) != (
                d.right_face(e).name in shading
            )
        comp = d.complement_shading(shading)
        assert set(shading) | set(comp) == {f.name for f in d.faces}
        assert not set(shading) & set(comp)


def test_parse_errors():
    with pytest.raises(DiagramError):
        parse_diagram([])
    with pytest.raises(DiagramError):
        parse_diagram({"edges": []})
    with pytest.raises(DiagramError):
        parse_diagram({"crossings": [], "edges": [{"id": 0}, {"id": 0}]})
    # a dart must appear exactly twice across all rotation tuples
    with pytest.raises(DiagramError):
        parse_diagram(
            {
                "crossings": [
                    {"id": 0,
                     "cyclic": [[0, 0], [0, 1], [1, 0], [2, 0]],
                     "over": [0, 2]}
                ],
                "edges": [{"id": 0}, {"id": 1}, {"id": 2}],
            }
        )


def test_declared_genus_checked():
    d = load_fixture("trefoil")
    doc = d.to_json()
    doc["genus"] = 2
    with pytest.raises(DiagramError):
        parse_diagram(doc)


def test_json_roundtrip():
    for name in fixture_names():
        d = load_fixture(name)
        again = parse_diagram(d.to_json())
        assert d.is_isomorphic(again)


def test_canonical_encoding_invariant_under_gauge():
    # adding a coboundary (per-crossing potential) to the labels must not
    # change the canonical encoding
    from tli.diagram import SurfaceDiagram
    from tli.moves import _gauge

    d = load_fixture("theta1")
    labels = _gauge(d, {cid: (1, -2) for cid in d.crossings})
    gauged = SurfaceDiagram(d.name, list(d.crossings.values()), labels)
    assert d.is_isomorphic(gauged)


def test_flip_is_involution():
    for name in fixture_names():
        d = load_fixture(name)
        assert d.flip().flip().is_isomorphic(d)


def test_auto_label_satisfies_cocycle_condition():
    for name in ("theta1", "curl_torus"):
        d = load_fixture(name)
        relabeled = d.auto_label()
        relabeled.cocycle_defects(strict=True)
        assert relabeled.genus == d.genus


def test_basis_dual_walks_hit_basis_vectors():
    for name in ("theta1", "theta2", "theta3", "curl_torus"):
        d = load_fixture(name)
        walks = d.basis_dual_walks()
        n = 2 * d.genus
        assert len(walks) == n
        monos = d.corner_monomials()
        for k, walk in enumerate(walks):
            total = (0,) * n
            for e, direction in walk:
                c_tail, s_tail = d.position[(e, 0)]
                step = tuple(
                    a - b
                    for a, b in zip(
                        monos[(c_tail, s_tail)],
                        monos[(c_tail, (s_tail - 1) % 4)],
                    )
                )
                total = vec_add(
                    total, step if direction == 1 else vec_neg(step)
                )
            assert total == tuple(1 if i == k else 0 for i in range(n))
    assert load_fixture("trefoil").basis_dual_walks() == []


def test_components():
    assert len(load_fixture("trefoil").components()) == 1
    assert len(load_fixture("hopf").components()) == 2
