"""Reidemeister moves on labeled surface diagrams.

Moves are face-local surgeries on the rotation system.  Homology labels
are kept consistent in two ways: edges merged by a reducing move first
have the vanishing patch edges gauged to zero (a per-crossing gauge change
never alters face sums), and edges created by an augmenting move receive
the labels forced by the corner classes of the face the strand is pushed
across (the pushed pieces stay inside one lift of that face, so their
classes are determined).  Both adjustments are supported inside a disk,
so every invariant computed from the diagram is unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import (
    Crossing,
    DiagramError,
    SurfaceDiagram,
    _id_key,
    vec_add,
    vec_neg,
    vec_sub,
)


class InapplicableMove(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    kind: str  # R1+ | R1- | R2+ | R2- | R3
    data: tuple

    def describe(self):
        return "%s %r" % (self.kind, (self.data,))


# ---------------------------------------------------------------------------
# helpers


def _fresh_ids(existing, count):
    ints = [i for i in existing if isinstance(i, int)]
    start = max(ints) + 1 if ints else 0
    out = []
    n = start
    while len(out) < count:
        if n not in existing:
            out.append(n)
        n += 1
    return out


def _gauge(diagram, t):
    """Add the coboundary of a crossing potential t to every edge label."""
    labels = {}
    n = 2 * diagram.genus
    zero = (0,) * n
    for e, lab in diagram.edges.items():
        tail = diagram.position[(e, 0)][0]
        head = diagram.position[(e, 1)][0]
        labels[e] = vec_add(lab, vec_sub(t.get(head, zero), t.get(tail, zero)))
    return labels


def _delete_crossings_and_splice(diagram, dead, label_override=None):
    """Remove crossings whose strands pass straight through, splicing each
    strand's edge chain into a single edge (labels add up)."""
    labels = dict(label_override if label_override is not None else diagram.edges)
    through = {}
    for cid in dead:
        c = diagram.crossings[cid]
        for s in range(4):
            e, end = c.cyclic[s]
            if end == 1:
                through[(e, cid)] = c.cyclic[(s + 2) % 4][0]
    survivors = [c for c in diagram.crossings.values() if c.id not in dead]
    if not survivors:
        raise InapplicableMove("move would delete every crossing")
    dart_map = {}
    new_labels = {}
    consumed = set()
    for e in diagram.edges:
        tail_c = diagram.position[(e, 0)][0]
        if tail_c in dead:
            continue  # absorbed into some chain, or dangling from one
        total = labels[e]
        cur = e
        while diagram.position[(cur, 1)][0] in dead:
            nxt = through[(cur, diagram.position[(cur, 1)][0])]
            consumed.add(nxt)
            cur = nxt
            total = vec_add(total, labels[cur])
        if cur != e:
            dart_map[(cur, 1)] = (e, 1)
        new_labels[e] = total
    for e in diagram.edges:
        if diagram.position[(e, 0)][0] in dead and e not in consumed:
            raise InapplicableMove("move would strand a crossingless component")
    crossings = []
    for c in survivors:
        cyclic = tuple(dart_map.get(d, d) for d in c.cyclic)
        crossings.append(Crossing(id=c.id, cyclic=cyclic, over=c.over))
    return crossings, new_labels


# ---------------------------------------------------------------------------
# site enumeration


def enumerate_sites(diagram, kinds=None):
    """All applicable move sites, deterministically ordered."""
    sites = _candidate_sites(diagram, kinds)
    # keep only sites whose application actually succeeds
    applicable = []
    for s in sites:
        if s.kind == "R1+":
            applicable.append(s)
            continue
        try:
            apply_move(diagram, s)
        except (InapplicableMove, DiagramError):
            continue
        applicable.append(s)
    return applicable


def _candidate_sites(diagram, kinds=None):
    """Cheaply enumerated sites; R2+ entries may still fail to apply."""
    order = ("R1+", "R1-", "R2+", "R2-", "R3")
    if kinds is None:
        kinds = order
    sites = []
    for kind in order:
        if kind not in kinds:
            continue
        if kind == "R1+":
            for e in diagram.edges:
                for end in (0, 1):
                    for side in (0, 1):
                        for chir in (0, 1):
                            sites.append(MoveSite("R1+", (e, end, side, chir)))
        elif kind == "R1-":
            for f in diagram.faces:
                if len(f.steps) != 1:
                    continue
                cid = f.steps[0].crossing
                sites.append(MoveSite("R1-", (cid,)))
        elif kind == "R2+":
            for f in diagram.faces:
                m = len(f.steps)
                for i in range(m):
                    for j in range(m):
                        if i == j or f.steps[i].edge == f.steps[j].edge:
                            continue
                        for over in (0, 1):
                            sites.append(MoveSite("R2+", (f.name, i, j, over)))
        elif kind == "R2-":
            for f in diagram.faces:
                if len(f.steps) != 2:
                    continue
                s0, s1 = f.steps
                if s0.crossing == s1.crossing or s0.edge == s1.edge:
                    continue
                if _bigon_coherent(diagram, f):
                    sites.append(MoveSite("R2-", (f.name,)))
        elif kind == "R3":
            for f in diagram.faces:
                if len(f.steps) != 3:
                    continue
                cids = [s.crossing for s in f.steps]
                eids = [s.edge for s in f.steps]
                if len(set(cids)) != 3 or len(set(eids)) != 3:
                    continue
                if _triangle_slider(diagram, f) is not None:
                    sites.append(MoveSite("R3", (f.name,)))
    return sites


def _strand_pair(crossing, slot):
    """The (incoming, outgoing) darts of the passage through this slot."""
    d1 = crossing.cyclic[slot]
    d2 = crossing.cyclic[(slot + 2) % 4]
    return (d1, d2) if d1[1] == 1 else (d2, d1)


def _bigon_coherent(diagram, face):
    """True when one bigon edge runs over at both crossings and the other
    under at both."""
    s0, s1 = face.steps
    for e in (s0.edge, s1.edge):
        overness = []
        for end in (0, 1):
            cid, slot = diagram.position[(e, end)]
            overness.append(slot in diagram.crossings[cid].over)
        if overness[0] != overness[1]:
            return False
    e0_over = diagram.position[(s0.edge, 0)][1] in \
        diagram.crossings[diagram.position[(s0.edge, 0)][0]].over
    e1_over = diagram.position[(s1.edge, 0)][1] in \
        diagram.crossings[diagram.position[(s1.edge, 0)][0]].over
    return e0_over != e1_over


def _triangle_slider(diagram, face):
    """The triangle edge lying on the strand that passes over both other
    strands, or None when no strand does."""
    slider = None
    for s in face.steps:
        e = s.edge
        over_both = all(
            diagram.position[(e, end)][1]
            in diagram.crossings[diagram.position[(e, end)][0]].over
            for end in (0, 1)
        )
        if over_both:
            if slider is not None:
                return None
            slider = e
    return slider


# ---------------------------------------------------------------------------
# move application


def apply_move(diagram, site):
    handlers = {
        "R1+": _apply_r1_plus,
        "R1-": _apply_r1_minus,
        "R2+": _apply_r2_plus,
        "R2-": _apply_r2_minus,
        "R3": _apply_r3,
    }
    if site.kind not in handlers:
        raise ValueError("unknown move kind %r" % site.kind)
    result = handlers[site.kind](diagram, *site.data)
    if result.genus != diagram.genus:
        raise InapplicableMove("move would change the genus")
    return result


def _apply_r1_plus(diagram, edge, end, side, chir):
    if edge not in diagram.edges or end not in (0, 1):
        raise InapplicableMove("no such dart")
    loop, piece = _fresh_ids(set(diagram.edges), 2)
    cid_new, = _fresh_ids(set(diagram.crossings), 1)
    n = 2 * diagram.genus
    zero = (0,) * n
    labels = dict(diagram.edges)
    labels[loop] = zero
    labels[piece] = zero
    # The kink sits next to the chosen end, so the short piece on that side
    # carries no label; the old id keeps the label and its other end's dart.
    crossings = []
    for c in diagram.crossings.values():
        cyclic = tuple(
            (piece, end) if d == (edge, end) else d for d in c.cyclic
        )
        crossings.append(Crossing(id=c.id, cyclic=cyclic, over=c.over))
    if end == 1:
        ends = ((edge, 1), (piece, 0))
    else:
        ends = ((piece, 1), (edge, 0))
    inc, out = ends
    if side == 0:
        cyclic = (inc, (loop, 1), (loop, 0), out)
    else:
        cyclic = (inc, out, (loop, 0), (loop, 1))
    over = (0, 2) if chir == 0 else (1, 3)
    crossings.append(Crossing(id=cid_new, cyclic=cyclic, over=over))
    return SurfaceDiagram(diagram.name, crossings, labels)


def _apply_r1_minus(diagram, cid):
    if cid not in diagram.crossings:
        raise InapplicableMove("no such crossing")
    if not any(
        len(f.steps) == 1 and f.steps[0].crossing == cid for f in diagram.faces
    ):
        raise InapplicableMove("crossing does not carry a monogon")
    crossings, labels = _delete_crossings_and_splice(diagram, {cid})
    return SurfaceDiagram(diagram.name, crossings, labels)


def _apply_r2_plus(diagram, face_name, i, j, over):
    face = diagram.face_by_name.get(face_name)
    if face is None or max(i, j) >= len(face.steps) or i == j:
        raise InapplicableMove("bad face step indices")
    step1, step2 = face.steps[i], face.steps[j]
    e1, d1 = step1.edge, step1.forward
    e2, d2 = step2.edge, step2.forward
    if e1 == e2:
        raise InapplicableMove("strands must be distinct edges")
    p1b, p1c, q2b, q2c = _fresh_ids(set(diagram.edges), 4)
    xw, xe = _fresh_ids(set(diagram.crossings), 2)
    n = 2 * diagram.genus
    zero = (0,) * n
    # The pushed pieces stay inside one lift of the face, so the class of
    # every new piece is forced: the middle pieces carry zero, and each
    # strand's end pieces carry minus the tail-corner class and plus the
    # head-corner class of that strand's boundary step.
    monos = diagram.corner_monomials()
    labels = dict(diagram.edges)

    def split_classes(step):
        lab = diagram.edges[step.edge]
        start = monos[step.corner]
        if step.forward:
            return vec_neg(start), vec_add(start, lab)
        return vec_sub(lab, start), start

    tail1, head1 = split_classes(step1)
    tail2, head2 = split_classes(step2)
    labels[e1] = tail1
    labels[p1b] = zero
    labels[p1c] = head1
    labels[e2] = tail2
    labels[q2b] = zero
    labels[q2c] = head2
    crossings = []
    for c in diagram.crossings.values():
        cyclic = list(c.cyclic)
        for k, d in enumerate(cyclic):
            if d == (e1, 1):
                cyclic[k] = (p1c, 1)
            elif d == (e2, 1):
                cyclic[k] = (q2c, 1)
        crossings.append(Crossing(id=c.id, cyclic=tuple(cyclic), over=c.over))
    # slots counterclockwise: [toward j-strand's earlier part, toward i's
    # face-side part, toward j's later part, the new middle of strand i]
    cyclic_w = (
        (q2b, 1) if d2 else (q2b, 0),
        (e1, 1) if d1 else (p1c, 0),
        (q2c, 0) if d2 else (e2, 1),
        (p1b, 0) if d1 else (p1b, 1),
    )
    cyclic_e = (
        (e2, 1) if d2 else (q2c, 0),
        (p1c, 0) if d1 else (e1, 1),
        (q2b, 0) if d2 else (q2b, 1),
        (p1b, 1) if d1 else (p1b, 0),
    )
    over_slots = (1, 3) if over == 0 else (0, 2)
    crossings.append(Crossing(id=xw, cyclic=cyclic_w, over=over_slots))
    crossings.append(Crossing(id=xe, cyclic=cyclic_e, over=over_slots))
    draft = SurfaceDiagram(diagram.name, crossings, labels, _check_labels=False)
    if draft.genus != diagram.genus:
        raise InapplicableMove("surgery changed the genus")
    return SurfaceDiagram(diagram.name, crossings, labels)


def _apply_r2_minus(diagram, face_name):
    face = diagram.face_by_name.get(face_name)
    if face is None or len(face.steps) != 2:
        raise InapplicableMove("not a bigon")
    if not _bigon_coherent(diagram, face):
        raise InapplicableMove("bigon strands are not coherently stacked")
    s0, s1 = face.steps
    x1, x2 = s0.crossing, s1.crossing
    if x1 == x2 or s0.edge == s1.edge:
        raise InapplicableMove("degenerate bigon")
    # gauge the bigon edges to zero
    e = s0.edge
    tail = diagram.position[(e, 0)][0]
    head = diagram.position[(e, 1)][0]
    n = 2 * diagram.genus
    t = {x1: (0,) * n}
    other = x2
    if tail == x1:
        t[other] = vec_neg(diagram.edges[e])
    else:
        t[other] = tuple(diagram.edges[e])
    labels = _gauge(diagram, t)
    if any(labels[s1.edge]):
        raise AssertionError("bigon edges are not cohomologous to zero")
    crossings, new_labels = _delete_crossings_and_splice(
        diagram, {x1, x2}, label_override=labels
    )
    return SurfaceDiagram(diagram.name, crossings, new_labels)


def _apply_r3(diagram, face_name):
    face = diagram.face_by_name.get(face_name)
    if face is None or len(face.steps) != 3:
        raise InapplicableMove("not a triangle")
    cids = [s.crossing for s in face.steps]
    eids = [s.edge for s in face.steps]
    if len(set(cids)) != 3 or len(set(eids)) != 3:
        raise InapplicableMove("degenerate triangle")
    if _triangle_slider(diagram, face) is None:
        raise InapplicableMove("no strand passes over both others")
    # gauge all three triangle edges to zero
    n = 2 * diagram.genus
    t = {}
    root = cids[0]
    t[root] = (0,) * n
    pending = [e for e in eids]
    while pending:
        progress = False
        for e in list(pending):
            tail = diagram.position[(e, 0)][0]
            head = diagram.position[(e, 1)][0]
            if tail in t and head in t:
                pending.remove(e)
                progress = True
            elif tail in t:
                t[head] = vec_sub(t[tail], diagram.edges[e])
                pending.remove(e)
                progress = True
            elif head in t:
                t[tail] = vec_add(t[head], diagram.edges[e])
                pending.remove(e)
                progress = True
        if not progress:
            raise AssertionError("triangle crossings are not connected")
    labels = _gauge(diagram, t)
    if any(any(labels[e]) for e in eids):
        raise AssertionError("triangle edges are not cohomologous to zero")
    # swap each strand's (in, out) dart pair between its two crossings
    replacements = {}  # (crossing, slot) -> dart
    for e in eids:
        c_first = diagram.position[(e, 0)][0]
        c_second = diagram.position[(e, 1)][0]
        pairs = {}
        for cid in (c_first, c_second):
            c = diagram.crossings[cid]
            slot = c.slot_of((e, 0)) if cid == c_first else c.slot_of((e, 1))
            din, dout = _strand_pair(c, slot)
            slot_in = c.cyclic.index(din)
            slot_out = c.cyclic.index(dout)
            pairs[cid] = (slot_in, slot_out, din, dout)
        for me, you in ((c_first, c_second), (c_second, c_first)):
            slot_in, slot_out, _, _ = pairs[me]
            _, _, din, dout = pairs[you]
            replacements[(me, slot_in)] = din
            replacements[(me, slot_out)] = dout
    crossings = []
    for c in diagram.crossings.values():
        cyclic = tuple(
            replacements.get((c.id, s), c.cyclic[s]) for s in range(4)
        )
        crossings.append(Crossing(id=c.id, cyclic=cyclic, over=c.over))
    return SurfaceDiagram(diagram.name, crossings, labels)


# ---------------------------------------------------------------------------
# randomized sequences


def random_move_sequence(diagram, rng=None, seed=0, max_len=5, kinds=None):
    """Apply a random sequence of applicable moves; returns the final
    diagram and the list of (kind, data) applied."""
    if rng is None:
        rng = random.Random(seed)
    length = rng.randint(1, max_len)
    applied = []
    for _ in range(length):
        sites = _candidate_sites(diagram, kinds)
        rng.shuffle(sites)
        for site in sites:
            try:
                diagram = apply_move(diagram, site)
            except (InapplicableMove, DiagramError):
                continue
            applied.append((site.kind, site.data))
            break
        else:
            break
    return diagram, applied
