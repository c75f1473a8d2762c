"""Tait graphs of shaded diagrams and their Laplacians.

A shaded diagram yields a graph with one vertex per shaded region and one
edge per crossing joining the two shaded corners there, weighted +-1 and
labeled by the difference of the two shaded corner monomials.  The
complementary shading yields the dual graph; corresponding edges carry
opposite weights.  The Laplacian is delta - A where loops count twice on
the diagonal; over the Laurent ring an edge with label h contributes its
monomial at (tail, head) and the bar-conjugate at (head, tail).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import NotShadable, _corner_sign
from .diagram import vec_neg, vec_sub
from .laurent import LaurentMatrix, LaurentPolynomial
from .snf import smith_normal_form


@dataclass(frozen=True)
class TaitEdge:
    crossing: object
    tail: str  # shaded face at the smaller corner slot
    head: str
    weight: int  # +-1
    label: tuple  # homology class for the tail -> head traversal


@dataclass(frozen=True)
class TaitGraph:
    vertices: tuple  # shaded face names, diagram face order
    edges: tuple  # one TaitEdge per crossing, crossing order
    shading: frozenset
    nvars: int


def tait_graph(diagram, shading=None):
    """Tait graph of the given (or default) shading."""
    if shading is None:
        shading = diagram.checkerboard_shade()
    if shading is None:
        raise NotShadable(diagram.name)
    vertices = tuple(f.name for f in diagram.faces if f.name in shading)
    monos = diagram.corner_monomials()
    edges = []
    for cid in diagram.crossings:
        a = diagram.over_in_slot(cid)
        shaded_slots = sorted(
            s for s in range(4)
            if diagram.face_of_corner[(cid, s)].name in shading
        )
        if len(shaded_slots) != 2:
            raise NotShadable(
                "crossing %r does not alternate under the given shading" % cid
            )
        s1, s2 = shaded_slots
        # +1 exactly when the shaded corners flank the incoming understrand
        weight = 1 if (s1 - a) % 2 == 1 else -1
        edges.append(
            TaitEdge(
                crossing=cid,
                tail=diagram.face_of_corner[(cid, s1)].name,
                head=diagram.face_of_corner[(cid, s2)].name,
                weight=weight,
                label=vec_sub(monos[(cid, s2)], monos[(cid, s1)]),
            )
        )
    return TaitGraph(
        vertices=vertices,
        edges=tuple(edges),
        shading=frozenset(shading),
        nvars=2 * diagram.genus,
    )


def dual_tait(diagram, shading=None):
    """Tait graph of the complementary shading."""
    if shading is None:
        shading = diagram.checkerboard_shade()
    if shading is None:
        raise NotShadable(diagram.name)
    return tait_graph(diagram, diagram.complement_shading(shading))


@dataclass(frozen=True)
class LaplacianData:
    vertices: tuple
    matrix_int: tuple  # of tuples of ints
    matrix_laurent: LaurentMatrix


def laplacian(graph):
    """delta - A over Z and over the Laurent ring."""
    n = len(graph.vertices)
    idx = {v: i for i, v in enumerate(graph.vertices)}
    nvars = graph.nvars
    delta = [0] * n
    a_int = [[0] * n for _ in range(n)]
    a_laur = [[LaurentPolynomial.zero(nvars) for _ in range(n)] for _ in range(n)]
    for e in graph.edges:
        i, j = idx[e.tail], idx[e.head]
        w = e.weight
        delta[i] += w
        delta[j] += w
        mono = LaurentPolynomial.monomial(e.label, w)
        if i == j:
            a_int[i][i] += 2 * w
            a_laur[i][i] = a_laur[i][i] + mono + mono.bar()
        else:
            a_int[i][j] += w
            a_int[j][i] += w
            a_laur[i][j] = a_laur[i][j] + mono
            a_laur[j][i] = a_laur[j][i] + mono.bar()
    m_int = [
        [
            (delta[i] if i == j else 0) - a_int[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    m_laur = [
        [
            (LaurentPolynomial.constant(delta[i], nvars) if i == j
             else LaurentPolynomial.zero(nvars)) - a_laur[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LaplacianData(
        vertices=graph.vertices,
        matrix_int=tuple(tuple(r) for r in m_int),
        matrix_laurent=LaurentMatrix(m_laur, nvars=nvars),
    )


def laplacian_group(ld):
    return smith_normal_form([list(r) for r in ld.matrix_int])


def laplacian_polynomial(ld):
    return ld.matrix_laurent.determinant().unit_normalize()


def substitute_basis(value, m):
    """Exponent-linear change of homology basis on a polynomial or on a
    full Laplacian."""
    if isinstance(value, LaplacianData):
        return LaplacianData(
            vertices=value.vertices,
            matrix_int=value.matrix_int,
            matrix_laurent=value.matrix_laurent.substitute_basis(m),
        )
    return value.substitute_basis(m)


def vertex_elimination_row(diagram, shading, vertex):
    """Combine the Laurent coloring relations around one Tait vertex into
    the corresponding Laplacian row.

    Each crossing on the boundary of the vertex's region contributes its
    coloring relation scaled by the unit that turns the vertex's own corner
    term into that crossing's edge weight; the unshaded-region terms then
    cancel in pairs and the signed sum is returned as a row over the shaded
    vertices.
    """
    monos = diagram.corner_monomials()
    nvars = 2 * diagram.genus
    face = diagram.face_by_name[vertex]
    steps = face.steps

    def raw_row(cid):
        a = diagram.over_in_slot(cid)
        row = {}
        for s in range(4):
            name = diagram.face_of_corner[(cid, s)].name
            term = LaurentPolynomial.monomial(
                monos[(cid, s)], _corner_sign(s, a)
            )
            row[name] = row.get(name, LaurentPolynomial.zero(nvars)) + term
        return row

    total = {}
    for step in steps:
        cid = step.crossing
        v_slot = (step.slot - 1) % 4
        a = diagram.over_in_slot(cid)
        shaded_slots = sorted(
            s for s in range(4)
            if diagram.face_of_corner[(cid, s)].name in shading
        )
        weight = 1 if (shaded_slots[0] - a) % 2 == 1 else -1
        sign = weight * _corner_sign(v_slot, a)
        unit = LaurentPolynomial.monomial(vec_neg(monos[(cid, v_slot)]), sign)
        for name, coeff in raw_row(cid).items():
            total[name] = total.get(name, LaurentPolynomial.zero(nvars)) \
                + unit * coeff
    shaded = shading
    for name, coeff in total.items():
        if name not in shaded and not coeff.is_zero():
            raise AssertionError(
                "vertex elimination at %s left unshaded region %s" % (vertex, name)
            )
    vertices = tuple(f.name for f in diagram.faces if f.name in shaded)
    zero = LaurentPolynomial.zero(nvars)
    return [total.get(v, zero) for v in vertices]
