"""Link diagrams on closed orientable surfaces as combinatorial maps.

A diagram is a 4-valent rotation system: each crossing holds four darts in
counterclockwise order, a dart being (edge id, end) with end 0 the tail of
the directed edge.  The over strand occupies an antipodal slot pair.  Edges
carry homology labels in Z^{2g} subject to the cocycle condition: the
signed label sum around every traced face vanishes.

Faces are traced with the rule "arrive at slot s, continue at slot s+1",
which walks each boundary with the face on the right.  The corner between
slots s and s+1 of a crossing is corner s; corner s belongs to the face
that leaves through slot s+1.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional


class DiagramError(ValueError):
    """Validation failure with a machine-readable error code."""

    def __init__(self, code, message):
        super().__init__("%s: %s" % (code, message))
        self.code = code


def _id_key(v):
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def face_name(i):
    """Deterministic face names: A, B, ..., Z, R26, R27, ..."""
    if i < 26:
        return chr(ord("A") + i)
    return "R%d" % i


@dataclass(frozen=True)
class Crossing:
    id: object
    cyclic: tuple  # four darts, counterclockwise
    over: tuple  # antipodal slot pair, sorted

    def slot_of(self, dart):
        return self.cyclic.index(dart)

    @property
    def under(self):
        return tuple(sorted({0, 1, 2, 3} - set(self.over)))


@dataclass(frozen=True)
class FaceStep:
    crossing: object
    slot: int  # departure slot
    corner: tuple  # (crossing id, corner slot)
    edge: object
    forward: bool  # edge traversed tail -> head


@dataclass(frozen=True)
class Face:
    name: str
    steps: tuple

    @property
    def corners(self):
        return tuple(s.corner for s in self.steps)

    def __len__(self):
        return len(self.steps)


class SurfaceDiagram:
    """Validated link diagram on a closed orientable surface."""

    def __init__(self, name, crossings, edge_labels, declared_genus=None,
                 _check_labels=True):
        self.name = name
        self.crossings = {
            c.id: c for c in sorted(crossings, key=lambda c: _id_key(c.id))
        }
        if len(self.crossings) != len(list(crossings)):
            raise DiagramError("format", "duplicate crossing ids")
        self.edges = {
            e: tuple(edge_labels[e])
            for e in sorted(edge_labels, key=_id_key)
        }
        self._build()
        if declared_genus is not None and declared_genus != self.genus:
            raise DiagramError(
                "genus-mismatch",
                "declared genus %d but Euler formula gives %d"
                % (declared_genus, self.genus),
            )
        if _check_labels:
            self._check_label_lengths()
            self.cocycle_defects(strict=True)

    # -- construction ------------------------------------------------------

    def _build(self):
        if not self.crossings:
            raise DiagramError("format", "diagram has no crossings")
        position = {}
        for c in self.crossings.values():
            if len(c.cyclic) != 4:
                raise DiagramError(
                    "arity", "crossing %r does not have 4 darts" % (c.id,)
                )
            for slot, dart in enumerate(c.cyclic):
                edge, end = dart
                if edge not in self.edges or end not in (0, 1):
                    raise DiagramError("arity", "bad dart %r" % (dart,))
                if dart in position:
                    raise DiagramError(
                        "arity", "dart %r appears more than once" % (dart,)
                    )
                position[dart] = (c.id, slot)
        for e in self.edges:
            for end in (0, 1):
                if (e, end) not in position:
                    raise DiagramError(
                        "arity", "edge %r end %d is not attached" % (e, end)
                    )
        self.position = position

        for c in self.crossings.values():
            over = tuple(sorted(c.over))
            if over not in ((0, 2), (1, 3)):
                raise DiagramError(
                    "over-pair",
                    "crossing %r over slots %r are not antipodal" % (c.id, c.over),
                )
            for pair in (over, tuple(sorted({0, 1, 2, 3} - set(over)))):
                ends = sorted(c.cyclic[s][1] for s in pair)
                if ends != [0, 1]:
                    raise DiagramError(
                        "flow",
                        "crossing %r strand through slots %r is not "
                        "one-in-one-out" % (c.id, pair),
                    )

        # connectivity of the universe
        start = next(iter(self.crossings))
        seen = {start}
        queue = deque([start])
        while queue:
            cid = queue.popleft()
            for dart in self.crossings[cid].cyclic:
                edge, end = dart
                other = self.position[(edge, 1 - end)][0]
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        if len(seen) != len(self.crossings):
            raise DiagramError("not-cellular", "universe is not connected")

        self._trace_faces()
        v = len(self.crossings)
        e = len(self.edges)
        f = len(self.faces)
        chi = v - e + f
        if chi > 2 or chi % 2:
            raise DiagramError("not-cellular", "Euler characteristic %d" % chi)
        self.genus = (2 - chi) // 2

    def _trace_faces(self):
        todo = sorted(
            ((c.id, s) for c in self.crossings.values() for s in range(4)),
            key=lambda p: (_id_key(p[0]), p[1]),
        )
        seen = set()
        faces = []
        for start in todo:
            if start in seen:
                continue
            steps = []
            pos = start
            while True:
                seen.add(pos)
                cid, slot = pos
                edge, end = self.crossings[cid].cyclic[slot]
                steps.append(
                    FaceStep(
                        crossing=cid,
                        slot=slot,
                        corner=(cid, (slot - 1) % 4),
                        edge=edge,
                        forward=(end == 0),
                    )
                )
                ocid, oslot = self.position[(edge, 1 - end)]
                pos = (ocid, (oslot + 1) % 4)
                if pos == start:
                    break
            faces.append(tuple(steps))
        self.faces = [
            Face(name=face_name(i), steps=steps) for i, steps in enumerate(faces)
        ]
        self.face_by_name = {f.name: f for f in self.faces}
        self.face_of_corner = {}
        for f in self.faces:
            for c in f.corners:
                self.face_of_corner[c] = f

    def _check_label_lengths(self):
        want = 2 * self.genus
        for e, label in self.edges.items():
            if len(label) != want:
                raise DiagramError(
                    "label-length",
                    "edge %r label has length %d, expected %d"
                    % (e, len(label), want),
                )

    def cocycle_defects(self, strict=False):
        """Signed label sum per face; raises on a nonzero sum when strict."""
        n = 2 * self.genus
        defects = {}
        for f in self.faces:
            total = (0,) * n
            for s in f.steps:
                label = self.edges[s.edge]
                total = vec_add(total, label if s.forward else vec_neg(label))
            defects[f.name] = total
            if strict and any(total):
                raise DiagramError(
                    "cocycle", "face %s has boundary label sum %r" % (f.name, total)
                )
        return defects

    # -- basic queries -----------------------------------------------------

    @property
    def num_crossings(self):
        return len(self.crossings)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def num_faces(self):
        return len(self.faces)

    def left_face(self, edge):
        cid, slot = self.position[(edge, 0)]
        return self.face_of_corner[(cid, slot)]

    def right_face(self, edge):
        cid, slot = self.position[(edge, 0)]
        return self.face_of_corner[(cid, (slot - 1) % 4)]

    def over_in_slot(self, cid):
        """Slot of the incoming over dart at a crossing."""
        c = self.crossings[cid]
        for s in c.over:
            if c.cyclic[s][1] == 1:
                return s
        raise AssertionError("flow violation escaped validation")

    def next_edge_along_strand(self, edge):
        """The edge following this one along its link component."""
        cid, slot = self.position[(edge, 1)]
        c = self.crossings[cid]
        partner = (slot + 2) % 4
        return c.cyclic[partner][0]

    def components(self):
        """Link components as lists of edge ids in strand order."""
        seen = set()
        comps = []
        for e in self.edges:
            if e in seen:
                continue
            comp = []
            cur = e
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                cur = self.next_edge_along_strand(cur)
            comps.append(comp)
        return comps

    def base_face(self):
        return self.faces[0]

    # -- shading -----------------------------------------------------------

    def checkerboard_shade(self):
        """One checkerboard shading (containing the first face), or None.

        The other shading is the complement of the returned face-name set.
        """
        color = {}
        for f in self.faces:
            if f.name in color:
                continue
            color[f.name] = 0
            queue = deque([f.name])
            while queue:
                name = queue.popleft()
                face = self.face_by_name[name]
                for s in face.steps:
                    other = (
                        self.left_face(s.edge)
                        if s.forward
                        else self.right_face(s.edge)
                    )
                    if other.name not in color:
                        color[other.name] = 1 - color[name]
                        queue.append(other.name)
                    elif color[other.name] == color[name]:
                        return None
        shaded = frozenset(n for n, c in color.items() if c == color[self.faces[0].name])
        return shaded

    def complement_shading(self, shading):
        return frozenset(f.name for f in self.faces) - shading

    # -- corner monomials ----------------------------------------------------

    def corner_monomials(self):
        """Deck translate of every corner relative to its face's base corner.

        The base corner of a face is its lexicographically smallest
        (crossing id, slot); walking the boundary, consecutive corners
        differ by the signed label of the traversed edge.
        """
        n = 2 * self.genus
        classes = {}
        for f in self.faces:
            running = (0,) * n
            acc = []
            for s in f.steps:
                acc.append(running)
                label = self.edges[s.edge]
                running = vec_add(running, label if s.forward else vec_neg(label))
            base_idx = min(
                range(len(f.steps)),
                key=lambda i: (_id_key(f.steps[i].corner[0]), f.steps[i].corner[1]),
            )
            base = acc[base_idx]
            for s, v in zip(f.steps, acc):
                classes[s.corner] = vec_sub(v, base)
        return classes

    # -- flip ----------------------------------------------------------------

    def flip(self):
        """The diagram seen from the other side of the thickened surface."""
        crossings = []
        for c in self.crossings.values():
            cyclic = tuple(c.cyclic[(-i) % 4] for i in range(4))
            old_over_parity = c.over[0] % 2
            # reversal keeps slot parities; then over and under swap
            new_over_parity = 1 - old_over_parity
            over = (new_over_parity, new_over_parity + 2)
            crossings.append(Crossing(id=c.id, cyclic=cyclic, over=over))
        labels = {e: vec_neg(l) for e, l in self.edges.items()}
        return SurfaceDiagram(self.name + "*", crossings, labels)

    # -- tree-cotree labeling -------------------------------------------------

    def auto_label(self):
        """Relabel from scratch via a tree-cotree cohomology basis.

        Tree edges carry zero; the 2g leftover edges seed elementary
        vectors, corrected through the dual spanning tree so every face sum
        is zero.  Existing labels are ignored.
        """
        # spanning tree of the universe
        root = next(iter(self.crossings))
        tree = set()
        seen = {root}
        queue = deque([root])
        while queue:
            cid = queue.popleft()
            for dart in self.crossings[cid].cyclic:
                edge, end = dart
                other = self.position[(edge, 1 - end)][0]
                if other not in seen:
                    seen.add(other)
                    tree.add(edge)
                    queue.append(other)
        # spanning cotree of the face-adjacency graph among non-tree edges
        cotree = set()
        fseen = {self.faces[0].name}
        fqueue = deque([self.faces[0].name])
        non_tree = [e for e in self.edges if e not in tree]
        adj = {}
        for e in non_tree:
            l, r = self.left_face(e).name, self.right_face(e).name
            adj.setdefault(l, []).append((e, r))
            adj.setdefault(r, []).append((e, l))
        while fqueue:
            fname = fqueue.popleft()
            for e, other in sorted(adj.get(fname, []), key=lambda t: _id_key(t[0])):
                if other not in fseen:
                    fseen.add(other)
                    cotree.add(e)
                    fqueue.append(other)
        if len(fseen) != len(self.faces):
            raise DiagramError("not-cellular", "face graph is not connected")
        leftover = sorted(
            (e for e in non_tree if e not in cotree), key=_id_key
        )
        n = len(leftover)
        if n != 2 * self.genus:
            raise AssertionError("tree-cotree leftover count %d != 2g" % n)

        labels = {e: (0,) * n for e in tree}
        for k, e in enumerate(leftover):
            vec = [0] * n
            vec[k] = 1
            labels[e] = tuple(vec)
        # peel the dual tree: repeatedly solve the unique unknown of a face
        unknown = set(cotree)
        while unknown:
            progress = False
            for f in self.faces:
                open_edges = [s for s in f.steps if s.edge in unknown]
                if len({s.edge for s in open_edges}) != 1 or not open_edges:
                    continue
                total = (0,) * n
                coeff = 0
                target = open_edges[0].edge
                for s in f.steps:
                    if s.edge == target:
                        coeff += 1 if s.forward else -1
                        continue
                    lab = labels[s.edge]
                    total = vec_add(total, lab if s.forward else vec_neg(lab))
                if coeff == 0:
                    continue
                assert abs(coeff) == 1
                labels[target] = tuple(-x * coeff for x in total)
                unknown.discard(target)
                progress = True
            if not progress:
                raise AssertionError("dual-tree peeling stalled")
        out = SurfaceDiagram(self.name, list(self.crossings.values()), labels)
        assert out.genus == self.genus
        return out

    # -- homology-basis dual walks ---------------------------------------------

    def basis_dual_walks(self):
        """For each basis vector e_k a closed walk of faces from the base
        region back to itself whose accumulated class totals e_k.

        A walk is a list of (edge id, direction) steps, direction +1 when
        the edge is crossed from its right face to its left face.  Built
        from the fundamental cycles of a spanning tree of the face
        adjacency graph: their classes generate the full lattice, so an
        integer solve expresses each basis vector as a cycle combination.
        """
        from .snf import solve_integer

        n = 2 * self.genus
        if n == 0:
            return []
        # Class picked up when a walk crosses an edge from its right face to
        # its left face: the difference of the flanking corner classes at the
        # edge's tail crossing.  The raw edge label is not usable here: it
        # counts basis-curve crossings along the whole edge, so charging it
        # to one transverse crossing is only sound when the labels also
        # conserve flow at every crossing, which the face-sum condition does
        # not guarantee.  Corner-class differences are always sound: within a
        # face (a disk) the class swept between two boundary corners is their
        # corner-class difference, and rounding a crossing between adjacent
        # corners sweeps nothing.
        monos = self.corner_monomials()
        phi = {}
        for e in self.edges:
            c_tail, s_tail = self.position[(e, 0)]
            phi[e] = vec_sub(
                monos[(c_tail, s_tail)], monos[(c_tail, (s_tail - 1) % 4)]
            )
        base = self.faces[0].name
        edges_sorted = sorted(self.edges, key=_id_key)
        flanks = {
            e: (self.right_face(e).name, self.left_face(e).name)
            for e in edges_sorted
        }
        paths = {base: []}  # face -> steps of the tree path from base
        accs = {base: (0,) * n}
        tree = set()
        queue = deque([base])
        while queue:
            f = queue.popleft()
            for e in edges_sorted:
                r, l = flanks[e]
                for src, dst, d in ((r, l, 1), (l, r, -1)):
                    if src == f and dst not in paths:
                        paths[dst] = paths[f] + [(e, d)]
                        accs[dst] = vec_add(
                            accs[f], phi[e] if d == 1 else vec_neg(phi[e])
                        )
                        tree.add(e)
                        queue.append(dst)
        cycles = []  # (steps, accumulated class)
        for e in edges_sorted:
            if e in tree:
                continue
            r, l = flanks[e]
            back = [(e2, -d2) for e2, d2 in reversed(paths[l])]
            steps = paths[r] + [(e, 1)] + back
            cls = vec_add(vec_sub(accs[r], accs[l]), phi[e])
            cycles.append((steps, cls))
        cols = [c for _, c in cycles]
        walks = []
        for k in range(n):
            target = [1 if i == k else 0 for i in range(n)]
            sol = solve_integer(
                [[cols[j][i] for j in range(len(cols))] for i in range(n)],
                target,
            )
            if sol is None:
                raise AssertionError(
                    "no dual walk reaches basis vector %d" % k
                )
            steps = []
            for (cyc, _), m in zip(cycles, sol):
                if m > 0:
                    steps.extend(cyc * m)
                elif m < 0:
                    rev = [(e2, -d2) for e2, d2 in reversed(cyc)]
                    steps.extend(rev * (-m))
            walks.append(steps)
        return walks

    # -- canonical form -----------------------------------------------------

    def canonical_encoding(self):
        """Canonical encoding: equal encodings mean isomorphic diagrams
        (rotation, over/under, orientation preserved; labels compared up to
        coboundary, i.e. per-crossing gauge)."""
        best = None
        n = 2 * self.genus
        for c0 in self.crossings.values():
            for r0 in range(4):
                enc = self._encode_from(c0.id, r0, n)
                if best is None or enc < best:
                    best = enc
        return best

    def _encode_from(self, start, offset, n):
        cindex = {start: 0}
        coffset = {start: offset}
        gauge = {start: (0,) * n}
        order = [start]
        eindex = {}
        code = []
        i = 0
        while i < len(order):
            cid = order[i]
            c = self.crossings[cid]
            off = coffset[cid]
            over_rel = (c.over[0] - off) % 2
            slots_code = []
            for k in range(4):
                edge, end = c.cyclic[(off + k) % 4]
                if edge not in eindex:
                    eindex[edge] = len(eindex)
                    ocid, oslot = self.position[(edge, 1 - end)]
                    if ocid not in cindex:
                        cindex[ocid] = len(order)
                        coffset[ocid] = oslot
                        # zero this tree edge by gauge at the new crossing
                        lab = self.edges[edge]
                        if end == 0:  # cid is tail, ocid is head
                            gauge[ocid] = vec_sub(gauge[cid], lab)
                        else:
                            gauge[ocid] = vec_add(gauge[cid], lab)
                        order.append(ocid)
                slots_code.append((eindex[edge], end))
            code.append((over_rel, tuple(slots_code)))
            i += 1
        labels_code = []
        for edge in sorted(eindex, key=eindex.get):
            tail = self.position[(edge, 0)][0]
            head = self.position[(edge, 1)][0]
            lab = vec_add(self.edges[edge], vec_sub(gauge[head], gauge[tail]))
            labels_code.append(lab)
        return (tuple(code), tuple(labels_code))

    def is_isomorphic(self, other):
        return self.canonical_encoding() == other.canonical_encoding()

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {
            "name": self.name,
            "genus": self.genus,
            "crossings": [
                {
                    "id": c.id,
                    "cyclic": [[e, end] for e, end in c.cyclic],
                    "over": list(c.over),
                }
                for c in self.crossings.values()
            ],
            "edges": [
                {"id": e, "label": list(l)} for e, l in self.edges.items()
            ],
        }

    def __repr__(self):
        return "SurfaceDiagram(%r, V=%d, E=%d, F=%d, genus=%d)" % (
            self.name,
            self.num_crossings,
            self.num_edges,
            self.num_faces,
            self.genus,
        )


def parse_diagram(obj):
    """Build and validate a SurfaceDiagram from a JSON-style document."""
    if not isinstance(obj, dict):
        raise DiagramError("format", "document is not an object")
    for key in ("crossings", "edges"):
        if key not in obj:
            raise DiagramError("format", "missing %r" % key)
    name = obj.get("name", "diagram")
    edge_ids = []
    labels = {}
    for e in obj["edges"]:
        if "id" not in e:
            raise DiagramError("format", "edge without id")
        edge_ids.append(e["id"])
        labels[e["id"]] = tuple(e.get("label", ()))
    if len(set(edge_ids)) != len(edge_ids):
        raise DiagramError("format", "duplicate edge ids")
    # labels omitted entirely mean zero vectors of the right length
    maxlen = max((len(l) for l in labels.values()), default=0)
    labels = {
        e: l if l else (0,) * maxlen for e, l in labels.items()
    }
    crossings = []
    for c in obj["crossings"]:
        try:
            cyclic = tuple((d[0], d[1]) for d in c["cyclic"])
            over = tuple(sorted(c["over"]))
            crossings.append(Crossing(id=c["id"], cyclic=cyclic, over=over))
        except (KeyError, TypeError, IndexError) as exc:
            raise DiagramError("format", "bad crossing record: %s" % exc)
    return SurfaceDiagram(
        name, crossings, labels, declared_genus=obj.get("genus")
    )


def load_diagram(path):
    with open(path) as fh:
        return parse_diagram(json.load(fh))
