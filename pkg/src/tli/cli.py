"""Command-line front end.

Subcommands compute and print the invariants of a diagram given as a JSON
file (or the name of a bundled example).  Every subcommand accepts
``--json`` for a machine-readable report carrying the same content as the
plain-text rendering.  Exit codes: 0 success, 1 invalid input, 2 internal
invariant failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import (
    NotShadable,
    brute_force_colorings,
    coloring_group,
    coloring_system,
    expected_colorings,
    module_order,
)
from .diagram import DiagramError, load_diagram
from .fox import all_to_minus_one, all_to_t, jacobian, specialize_jacobian
from .fixtures import fixture_names, fixture_path
from .groups import (
    dehn,
    derivative_map,
    quotient_presentation,
    surface_relators,
    wirtinger,
)
from .invariants import invariant_block
from .laurent import LaurentMatrix
from .moves import (
    InapplicableMove,
    MoveSite,
    apply_move,
    enumerate_sites,
    random_move_sequence,
)
from .tait import (
    dual_tait,
    laplacian,
    laplacian_group,
    laplacian_polynomial,
    tait_graph,
)

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


class InputError(ValueError):
    pass


def _load(spec):
    """Load a diagram from a file path or a bundled example name."""
    if os.path.exists(spec):
        try:
            return load_diagram(spec)
        except (DiagramError, ValueError, KeyError) as exc:
            raise InputError(str(exc))
    try:
        return load_diagram(fixture_path(spec))
    except KeyError:
        raise InputError(
            "no such file or bundled diagram: %r (bundled: %s)"
            % (spec, ", ".join(fixture_names()))
        )


def _matrix_strings(m):
    if isinstance(m, LaurentMatrix):
        return [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    return [[str(x) for x in row] for row in m]


def _emit(report, lines, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _presentation_report(p):
    return {
        "generators": list(p.generators),
        "relations": [[str(l), str(r)] for l, r in p.relations],
        "text": str(p),
        "abelianization": p.abelianization().cokernel_description(),
    }


def _shading_of(diagram, dual=False):
    shading = diagram.checkerboard_shade()
    if shading is None:
        raise NotShadable("diagram %r is not checkerboard shadable" % diagram.name)
    if dual:
        shading = diagram.complement_shading(shading)
    return shading


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args):
    d = _load(args.diagram)  # full validation happens during parsing
    report = {
        "name": d.name,
        "valid": True,
        "crossings": d.num_crossings,
        "edges": d.num_edges,
        "faces": d.num_faces,
        "genus": d.genus,
    }
    lines = [
        "%s: valid (crossings %d, edges %d, faces %d, genus %d)"
        % (d.name, d.num_crossings, d.num_edges, d.num_faces, d.genus)
    ]
    _emit(report, lines, args.json)
    return 0


def _cmd_info(args):
    d = _load(args.diagram)
    shading = d.checkerboard_shade()
    faces = [
        {"name": f.name, "length": len(f.steps)} for f in d.faces
    ]
    report = {
        "name": d.name,
        "genus": d.genus,
        "crossings": d.num_crossings,
        "edges": d.num_edges,
        "faces": faces,
        "components": len(d.components()),
        "shadable": shading is not None,
        "shading": sorted(shading) if shading is not None else None,
        "labels": {str(e): list(lab) for e, lab in d.edges.items()},
    }
    lines = [
        "name: %s" % d.name,
        "genus: %d" % d.genus,
        "crossings: %d" % d.num_crossings,
        "edges: %d" % d.num_edges,
        "components: %d" % len(d.components()),
        "faces: %s" % ", ".join("%s(%d)" % (f.name, len(f.steps)) for f in d.faces),
        "shadable: %s" % ("yes" if shading is not None else "no"),
    ]
    if shading is not None:
        lines.append("shading: %s" % " ".join(sorted(shading)))
    lines.append(
        "labels: %s"
        % " ".join("%s=%r" % (e, tuple(lab)) for e, lab in d.edges.items())
    )
    _emit(report, lines, args.json)
    return 0


def _cmd_wirtinger(args):
    d = _load(args.diagram)
    p = wirtinger(d)
    report = {"name": d.name, "wirtinger": _presentation_report(p)}
    lines = [str(p), "abelianization: %s" % p.abelianization().cokernel_description()]
    _emit(report, lines, args.json)
    return 0


def _cmd_dehn(args):
    d = _load(args.diagram)
    p = dehn(d, with_base=not args.no_base)
    report = {"name": d.name, "with_base": not args.no_base,
              "dehn": _presentation_report(p)}
    lines = [str(p), "abelianization: %s" % p.abelianization().cokernel_description()]
    if args.simplify:
        simp = p.tietze_simplify()
        report["simplified"] = _presentation_report(simp)
        lines += ["simplified: %s" % simp]
    _emit(report, lines, args.json)
    return 0


def _cmd_surface_relators(args):
    d = _load(args.diagram)
    relators = surface_relators(d)
    fwd = derivative_map(d)
    entries = []
    lines = []
    for k, r in enumerate(relators):
        img = fwd(r).free_reduce()
        entries.append({
            "basis_vector": k,
            "relator": str(r),
            "derived_image": str(img),
            "vanishes": img.is_identity(),
        })
        lines.append(
            "e_%d: %s  ->  %s%s"
            % (k, r, img, "  (vanishes)" if img.is_identity() else "")
        )
    if not relators:
        lines.append("no surface relators (genus 0)")
    q = quotient_presentation(d)
    report = {
        "name": d.name,
        "surface_relators": entries,
        "quotient": _presentation_report(q),
    }
    lines.append("quotient abelianization: %s"
                 % q.abelianization().cokernel_description())
    _emit(report, lines, args.json)
    if any(not e["vanishes"] for e in entries):
        raise AssertionError("a surface relator does not vanish under the "
                             "derivative map")
    return 0


def _cmd_fox(args):
    d = _load(args.diagram)
    p = wirtinger(d)
    rows = jacobian(p)
    report = {
        "name": d.name,
        "generators": list(p.generators),
        "jacobian": [[str(e) for e in row] for row in rows],
    }
    lines = ["wirtinger: %s" % p, "jacobian (rows = relations):"]
    for row in rows:
        lines.append("  [ " + " | ".join(str(e) for e in row) + " ]")
    images_t, nv = all_to_t(p.generators)
    jt = specialize_jacobian(rows, images_t, nv)
    report["all_to_t"] = _matrix_strings(jt)
    lines.append("specialized (every generator -> t):")
    lines.append(str(jt))
    images_m, nvm = all_to_minus_one(p.generators)
    jm = specialize_jacobian(rows, images_m, nvm)
    report["all_to_minus_one"] = _matrix_strings(jm)
    lines.append("specialized (every generator -> -1):")
    lines.append(str(jm))
    _emit(report, lines, args.json)
    return 0


def _cmd_coloring(args):
    d = _load(args.diagram)
    cs = coloring_system(d, _shading_of(d))
    group = coloring_group(cs)
    order = module_order(cs)
    report = {
        "name": d.name,
        "regions": list(cs.faces),
        "rows_int": [list(r) for r in cs.rows_int],
        "rows_laurent": _matrix_strings(cs.rows_laurent),
        "coloring_group": group.cokernel_description(),
        "invariant_factors": list(group.invariant_factors),
        "module_order": str(order),
    }
    lines = [
        "regions: %s" % " ".join(cs.faces),
        "integer relations (rows = crossings):",
    ]
    for r in cs.rows_int:
        lines.append("  %s" % list(r))
    lines.append("laurent relations:")
    lines.append(str(cs.rows_laurent))
    lines.append("coloring group: %s" % group.cokernel_description())
    lines.append("module order: %s" % order)
    counts = {}
    for p in args.mod or ():
        bf = brute_force_colorings(cs, p)
        ex = expected_colorings(cs, p)
        counts[str(p)] = {"brute_force": bf, "expected": ex}
        lines.append("colorings mod %d: %d (predicted %d)" % (p, bf, ex))
        if bf != ex:
            raise AssertionError(
                "coloring count mod %d disagrees with the Smith form" % p
            )
    if counts:
        report["counts"] = counts
    _emit(report, lines, args.json)
    return 0


def _tait_report(graph):
    return [
        {
            "crossing": str(e.crossing),
            "tail": e.tail,
            "head": e.head,
            "weight": e.weight,
            "label": list(e.label),
        }
        for e in graph.edges
    ]


def _cmd_tait(args):
    d = _load(args.diagram)
    shading = _shading_of(d, dual=args.dual)
    g = tait_graph(d, shading)
    report = {
        "name": d.name,
        "shading": sorted(shading),
        "vertices": list(g.vertices),
        "edges": _tait_report(g),
    }
    lines = ["shading: %s" % " ".join(sorted(shading)),
             "vertices: %s" % " ".join(g.vertices)]
    for e in g.edges:
        lines.append(
            "crossing %s: %s -> %s, weight %+d, label %r"
            % (e.crossing, e.tail, e.head, e.weight, tuple(e.label))
        )
    _emit(report, lines, args.json)
    return 0


def _cmd_laplacian(args):
    d = _load(args.diagram)
    shading = _shading_of(d, dual=args.dual)
    ld = laplacian(tait_graph(d, shading))
    group = laplacian_group(ld)
    report = {
        "name": d.name,
        "vertices": list(ld.vertices),
        "matrix_int": [list(r) for r in ld.matrix_int],
        "matrix_laurent": _matrix_strings(ld.matrix_laurent),
        "group": group.cokernel_description(),
    }
    lines = ["vertices: %s" % " ".join(ld.vertices),
             "integer laplacian:"]
    for r in ld.matrix_int:
        lines.append("  %s" % list(r))
    lines.append("laurent laplacian:")
    lines.append(str(ld.matrix_laurent))
    lines.append("laplacian group: %s" % group.cokernel_description())
    if args.poly:
        poly = laplacian_polynomial(ld)
        report["polynomial"] = str(poly)
        lines.append("laplacian polynomial: %s" % poly)
    _emit(report, lines, args.json)
    return 0


def _cmd_moves(args):
    d = _load(args.diagram)
    sites = enumerate_sites(d)
    if args.apply is not None:
        if args.site is None:
            raise InputError("--apply requires --site <index>")
        matching = [s for s in sites if s.kind == args.apply]
        if not 0 <= args.site < len(matching):
            raise InputError(
                "site index %d out of range (%d %s sites)"
                % (args.site, len(matching), args.apply)
            )
        site = matching[args.site]
        out = apply_move(d, site)
        report = {
            "name": d.name,
            "applied": {"kind": site.kind, "data": list(map(str, site.data))},
            "result": out.to_json(),
            "invariants_preserved": invariant_block(out) == invariant_block(d),
        }
        lines = [
            "applied %s at %r" % (site.kind, site.data),
            "result: crossings %d, edges %d, faces %d, genus %d"
            % (out.num_crossings, out.num_edges, out.num_faces, out.genus),
            "invariants preserved: %s"
            % ("yes" if report["invariants_preserved"] else "NO"),
        ]
        _emit(report, lines, args.json)
        if not report["invariants_preserved"]:
            raise AssertionError("move changed the invariant block")
        return 0
    if args.fuzz is not None:
        block = invariant_block(d)
        runs = []
        bad = 0
        for k in range(args.fuzz):
            out, applied = random_move_sequence(d, seed=args.seed + k)
            same = invariant_block(out) == block
            bad += 0 if same else 1
            runs.append({
                "seed": args.seed + k,
                "moves": [kind for kind, _ in applied],
                "invariants_preserved": same,
            })
        report = {"name": d.name, "sequences": runs, "failures": bad}
        lines = ["%d sequences from seed %d" % (args.fuzz, args.seed)]
        for r in runs:
            lines.append(
                "seed %d: %s -> %s"
                % (r["seed"], " ".join(r["moves"]) or "(none)",
                   "ok" if r["invariants_preserved"] else "CHANGED"))
        lines.append("failures: %d" % bad)
        _emit(report, lines, args.json)
        if bad:
            raise AssertionError("%d move sequences changed invariants" % bad)
        return 0
    counts = {}
    for s in sites:
        counts[s.kind] = counts.get(s.kind, 0) + 1
    report = {
        "name": d.name,
        "counts": counts,
        "sites": [
            {"kind": s.kind, "data": list(map(str, s.data))} for s in sites
        ],
    }
    lines = ["%d applicable sites" % len(sites)]
    for kind in ("R1+", "R1-", "R2+", "R2-", "R3"):
        if kind in counts:
            lines.append("  %s: %d" % (kind, counts[kind]))
    for i, s in enumerate(sites):
        lines.append("%4d  %-3s %r" % (i, s.kind, s.data))
    _emit(report, lines, args.json)
    return 0


def _invariant_report(d):
    block = invariant_block(d)
    rendered = {}
    for key, value in block.items():
        if isinstance(value, tuple) and key.endswith("_ab") or key == "coloring":
            if value is None:
                rendered[key] = None
            else:
                torsion, free = value
                parts = ["Z/%d" % t for t in torsion]
                if free:
                    parts.append("Z" if free == 1 else "Z^%d" % free)
                rendered[key] = " + ".join(parts) if parts else "0"
        elif isinstance(value, tuple):
            rendered[key] = list(value)
        else:
            rendered[key] = value
    return block, rendered


def _cmd_invariants(args):
    d = _load(args.diagram)
    _, rendered = _invariant_report(d)
    report = {"name": d.name, "invariants": rendered}
    lines = ["%s: %s" % (k, rendered[k]) for k in sorted(rendered)]
    _emit(report, lines, args.json)
    return 0


def _cmd_compare(args):
    d1 = _load(args.first)
    d2 = _load(args.second)
    b1, r1 = _invariant_report(d1)
    b2, r2 = _invariant_report(d2)
    differing = sorted(k for k in b1 if b1[k] != b2[k])
    report = {
        "first": {"name": d1.name, "invariants": r1},
        "second": {"name": d2.name, "invariants": r2},
        "differing": differing,
    }
    if differing:
        lines = ["diagrams differ in: %s" % ", ".join(differing)]
        for k in differing:
            lines.append("  %s: %s  vs  %s" % (k, r1[k], r2[k]))
    else:
        lines = ["all computed invariants agree"]
    _emit(report, lines, args.json)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    parser = _Parser(
        prog="tli",
        description="Invariants of links in thickened orientable surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, diagram_arg=True):
        p = sub.add_parser(name, help=help_text)
        if diagram_arg:
            p.add_argument("diagram", help="diagram JSON file or bundled name")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "validate a diagram file")
    add("info", _cmd_info, "print diagram statistics")
    add("wirtinger", _cmd_wirtinger, "Wirtinger-style arc presentation")
    p = add("dehn", _cmd_dehn, "region presentation")
    p.add_argument("--no-base", action="store_true",
                   help="omit the base-region relator")
    p.add_argument("--simplify", action="store_true",
                   help="also print the Tietze-simplified presentation")
    add("surface-relators", _cmd_surface_relators,
        "surface relators and the quotient presentation")
    add("fox", _cmd_fox, "free-derivative Jacobian and specializations")
    p = add("coloring", _cmd_coloring, "region coloring system")
    p.add_argument("--mod", type=int, action="append", metavar="P",
                   help="also count colorings mod P by brute force")
    p = add("tait", _cmd_tait, "checkerboard graph of the diagram")
    p.add_argument("--dual", action="store_true",
                   help="use the complementary shading")
    p = add("laplacian", _cmd_laplacian, "weighted Laplacian matrices")
    p.add_argument("--dual", action="store_true",
                   help="use the complementary shading")
    p.add_argument("--poly", action="store_true",
                   help="also print the unit-normalized determinant")
    p = add("moves", _cmd_moves, "enumerate or apply Reidemeister moves")
    p.add_argument("--apply", metavar="KIND",
                   choices=("R1+", "R1-", "R2+", "R2-", "R3"),
                   help="apply the i-th site of this kind")
    p.add_argument("--site", type=int, metavar="INDEX",
                   help="site index among sites of the chosen kind")
    p.add_argument("--fuzz", type=int, metavar="N",
                   help="run N random move sequences")
    p.add_argument("--seed", type=int, default=0,
                   help="base seed for --fuzz (default 0)")
    add("invariants", _cmd_invariants, "full invariant block")
    p = sub.add_parser("compare", help="compare the invariants of two diagrams")
    p.add_argument("first", help="diagram JSON file or bundled name")
    p.add_argument("second", help="diagram JSON file or bundled name")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except (InputError, DiagramError, NotShadable, InapplicableMove,
            FileNotFoundError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except AssertionError as exc:
        print("internal invariant failure: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
