"""End-to-end acceptance suite.

Each test prints one PASS/FAIL line on the real stdout so the run log
shows exactly which of the ten criteria hold.
"""

import random
import sys

from tli import (
    GroupRingElement,
    LaurentMatrix,
    Word,
    all_to_minus_one,
    all_to_t,
    brute_force_colorings,
    coloring_group,
    coloring_system,
    dehn,
    derivative_map,
    dual_tait,
    fox_derivative,
    invariant_block,
    jacobian,
    laplacian,
    laplacian_group,
    laplacian_polynomial,
    module_order,
    parse_poly,
    parse_presentation,
    quotient_presentation,
    random_move_sequence,
    specialize_jacobian,
    surface_relators,
    tait_graph,
    wirtinger,
)
from tli.fixtures import fixture_names, load_fixture


def _report(num, description, ok):
    line = "%s criterion %2d: %s\n" % ("PASS" if ok else "FAIL", num, description)
    sys.__stdout__.write(line)
    sys.__stdout__.flush()
    assert ok, line.strip()


ALL_FIXTURES = fixture_names()


def test_criterion_01_trefoil_golden():
    d = load_fixture("trefoil")
    p = wirtinger(d)
    ok = p.matches_up_to_renaming(
        parse_presentation("<a, b, c | a b = c a, b c = a b, c a = b c>")
    )
    rows = jacobian(p)
    reference_j = [
        ["1 - c", "a", "-1"],
        ["-1", "1 - a", "b"],
        ["c", "-1", "1 - b"],
    ]
    ok = ok and [[str(e) for e in row] for row in rows] == reference_j
    images, nv = all_to_t(p.generators)
    jt = specialize_jacobian(rows, images, nv)
    reference_jt = LaurentMatrix(
        [
            [parse_poly(s, 1) for s in row]
            for row in (
                ["-t + 1", "t", "-1"],
                ["-1", "-t + 1", "t"],
                ["t", "-1", "-t + 1"],
            )
        ]
    )
    ok = ok and jt == reference_jt
    images_m, nvm = all_to_minus_one(p.generators)
    jm = specialize_jacobian(rows, images_m, nvm)
    reference_jm = LaurentMatrix.from_int(
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    )
    ok = ok and jm == reference_jm
    _report(1, "trefoil arc presentation, Jacobian and specializations", ok)


def test_criterion_02_torus_example_end_to_end():
    d = load_fixture("theta1")
    ok = wirtinger(d).matches_up_to_renaming(
        parse_presentation("<a, b, c, d | a b = b a, a c = d a, b c = d b>")
    )
    pd = dehn(d, with_base=True)
    snf = pd.abelianization()
    ok = ok and snf.torsion == () and snf.free_rank == 1
    simp = pd.tietze_simplify()
    ok = ok and len(simp.generators) == 1 and not simp.relations

    shading = d.checkerboard_shade()
    g = tait_graph(d, shading)
    # the two shaded regions joined by three edges: weights +1, +1, -1 and
    # labels x, y, 0 for the tail-to-head traversal (x^-1, y^-1, 0 read the
    # other way)
    ok = ok and [(e.tail, e.head, e.weight, e.label) for e in g.edges] == [
        ("C", "A", -1, (0, 0)),
        ("C", "A", 1, (1, 0)),
        ("C", "A", 1, (0, 1)),
    ]
    ld = laplacian(g)
    reference_l = LaurentMatrix(
        [
            [parse_poly("1", 2), parse_poly("1 - x^-1 - y^-1", 2)],
            [parse_poly("1 - x - y", 2), parse_poly("1", 2)],
        ]
    )
    ok = ok and ld.matrix_laurent == reference_l

    delta_g = laplacian_polynomial(ld)
    delta_dual = laplacian_polynomial(laplacian(dual_tait(d, shading)))
    order = module_order(coloring_system(d, shading))
    ok = ok and delta_g == delta_dual == order.unit_normalize()

    # Two reference values exist for this polynomial and they disagree
    # (by y -> -y up to a unit): a closed form for the module order and
    # the matrix whose determinant defines it.  The computation reproduces
    # the determinant of the reference matrix, not the closed form.
    reference_closed_form = parse_poly(
        "2 - x - x^-1 + y + y^-1 - x*y^-1 - x^-1*y", 2
    ).unit_normalize()
    reference_determinant = reference_l.determinant().unit_normalize()
    matches_det = delta_g == reference_determinant
    matches_closed = delta_g == reference_closed_form
    sys.__stdout__.write(
        "       criterion  2 note: common value reproduces the reference "
        "matrix determinant: %s; the reference closed form: %s\n"
        % (matches_det, matches_closed)
    )
    ok = ok and matches_det and not matches_closed
    _report(2, "torus example: presentations, checkerboard graph, Laplacian",
            ok)


def test_criterion_03_quotient_vs_region_presentation():
    ok = True
    for name in ALL_FIXTURES:
        d = load_fixture(name)
        quot = quotient_presentation(d).abelianization()
        base = dehn(d, with_base=True).abelianization()
        free = dehn(d, with_base=False).abelianization()
        ok = ok and quot.torsion == base.torsion
        ok = ok and quot.free_rank == base.free_rank
        ok = ok and free.torsion == base.torsion
        ok = ok and free.free_rank == base.free_rank + 1
    _report(3, "quotient and region-presentation abelianizations agree; "
               "dropping the base region adds one free rank", ok)


def test_criterion_04_surface_relators_die():
    ok = True
    checked = 0
    for name in ALL_FIXTURES:
        d = load_fixture(name)
        if d.genus == 0:
            continue
        fwd = derivative_map(d)
        relators = surface_relators(d)
        ok = ok and len(relators) == 2 * d.genus
        for r in relators:
            ok = ok and fwd(r).free_reduce().is_identity()
            checked += 1
    ok = ok and checked > 0
    _report(4, "surface relators map to freely trivial words", ok)


def test_criterion_05_laplacian_groups_genus_zero():
    # independently computed invariant factors (by hand-reduced SNF):
    # trefoil Goeritz-style Laplacian has torsion Z/3, Hopf Z/2, and the
    # figure-eight Z/5
    expected_torsion = {"trefoil": (3,), "hopf": (2,), "figure8": (5,)}
    ok = True
    for name, torsion in expected_torsion.items():
        d = load_fixture(name)
        shading = d.checkerboard_shade()
        g1 = laplacian_group(laplacian(tait_graph(d, shading)))
        g2 = laplacian_group(laplacian(dual_tait(d, shading)))
        ok = ok and g1.same_cokernel(g2)
        ok = ok and g1.torsion == torsion
    _report(5, "Laplacian groups agree across dual shadings; trefoil Z/3, "
               "Hopf Z/2", ok)


def test_criterion_06_coloring_counts():
    ok = True
    checked = 0
    for name in ALL_FIXTURES:
        d = load_fixture(name)
        if d.num_faces > 8 or d.checkerboard_shade() is None:
            continue
        cs = coloring_system(d)
        snf = coloring_group(cs)
        for p in (2, 3, 5):
            predicted = p ** (
                snf.free_rank
                + sum(1 for f in snf.invariant_factors if f and f % p == 0)
            )
            ok = ok and brute_force_colorings(cs, p) == predicted
            checked += 1
    ok = ok and checked > 0
    _report(6, "brute-force mod-p coloring counts match the Smith form", ok)


def test_criterion_07_vertex_elimination():
    from tli import vertex_elimination_row

    ok = True
    checked = 0
    for name in ALL_FIXTURES:
        d = load_fixture(name)
        shading = d.checkerboard_shade()
        if shading is None:
            continue
        for sh in (shading, d.complement_shading(shading)):
            ld = laplacian(tait_graph(d, sh))
            for vi, v in enumerate(ld.vertices):
                row = vertex_elimination_row(d, sh, v)
                want = [ld.matrix_laurent[vi, j]
                        for j in range(len(ld.vertices))]
                ok = ok and row == want
                checked += 1
    ok = ok and checked > 0
    _report(7, "signed sums of coloring relations rebuild each Laplacian "
               "row", ok)


def test_criterion_08_theta_variants_distinct():
    polys = []
    for name in ("theta1", "theta2", "theta3"):
        d = load_fixture(name)
        polys.append(laplacian_polynomial(laplacian(tait_graph(d))))
    ok = len(set(polys)) == 3
    _report(8, "the three torus-link variants have distinct Laplacian "
               "polynomials", ok)


def test_criterion_09_move_invariance_fuzz():
    ok = True
    for name in ALL_FIXTURES:
        d = load_fixture(name)
        block = invariant_block(d)
        for seed in range(100):
            moved, applied = random_move_sequence(d, seed=seed, max_len=5)
            if invariant_block(moved) != block:
                ok = False
            # reproducibility: the same seed yields the same sequence
            again, applied2 = random_move_sequence(d, seed=seed, max_len=5)
            if applied2 != applied:
                ok = False
    _report(9, "100 seeded move sequences per diagram preserve the "
               "invariant block", ok)


def test_criterion_10_fox_fundamental_identity():
    rng = random.Random(20260823)
    gens = ["a", "b", "c", "d"]
    one = GroupRingElement.of(Word.identity())
    ok = True
    for _ in range(500):
        k = rng.randint(1, 4)
        length = rng.randint(1, 12)
        w = Word.identity()
        for _ in range(length):
            g = gens[rng.randrange(k)]
            e = rng.choice((1, -1))
            w = (w * Word.generator(g, e)).free_reduce()
        total = GroupRingElement.zero()
        for g in gens[:k]:
            term = GroupRingElement.of(Word.generator(g)) - one
            total = total + fox_derivative(w, g) * term
        ok = ok and total == GroupRingElement.of(w) - one
    _report(10, "fundamental identity of the free derivative on 500 random "
                "words", ok)
