"""Words, finite presentations, and the presentations attached to a diagram.

Two presentations are computed from a diagram: one generated by the arcs
(overpasses) with a conjugation relation per crossing, and one generated by
the complementary regions with a relation per crossing pairing the two
region quotients across the over strand.  A letterwise derivative map sends
arc generators to two-letter region words; integrating it along closed dual
walks yields the surface relators whose normal closure connects the two
presentations.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .diagram import _id_key
from .snf import SmithNormalForm, smith_normal_form


class Word:
    """A word in a free group: a tuple of (generator name, +-1) letters.

    Words may carry per-letter source annotations (diagram edge ids) used
    by the derivative map to resolve a generator at a specific crossing.
    Annotations never affect equality or hashing.
    """

    __slots__ = ("letters", "sources")

    def __init__(self, letters=(), sources=None):
        self.letters = tuple((g, int(e)) for g, e in letters)
        if sources is not None:
            sources = tuple(sources)
            if len(sources) != len(self.letters):
                raise ValueError("sources length mismatch")
        self.sources = sources

    @classmethod
    def generator(cls, name, exp=1, source=None):
        return cls(((name, exp),), None if source is None else (source,))

    @classmethod
    def identity(cls):
        return cls()

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        if self.sources is not None and other.sources is not None:
            sources = self.sources + other.sources
        else:
            sources = None
        return Word(self.letters + other.letters, sources)

    def inverse(self):
        letters = tuple((g, -e) for g, e in reversed(self.letters))
        sources = None
        if self.sources is not None:
            sources = tuple(reversed(self.sources))
        return Word(letters, sources)

    def free_reduce(self):
        """Cancel adjacent inverse pairs until none remain."""
        out = []
        src = []
        annotated = self.sources is not None
        for i, (g, e) in enumerate(self.letters):
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
                if annotated:
                    src.pop()
            else:
                out.append((g, e))
                if annotated:
                    src.append(self.sources[i])
        return Word(out, src if annotated else None)

    def cyclic_reduce(self):
        w = self.free_reduce()
        letters = list(w.letters)
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
                and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return Word(letters)

    def is_identity(self):
        return not self.free_reduce().letters

    def exponent_sums(self, generators):
        sums = {g: 0 for g in generators}
        for g, e in self.letters:
            sums[g] += e
        return [sums[g] for g in generators]

    def generators_used(self):
        return {g for g, _ in self.letters}

    def substitute(self, images):
        """Replace each generator by a word; extend multiplicatively."""
        out = Word.identity()
        for g, e in self.letters:
            w = images[g]
            out = out * (w if e == 1 else w.inverse())
        return out.free_reduce()

    def __str__(self):
        if not self.letters:
            return "1"
        pieces = []
        for g, e in self.letters:
            pieces.append(g if e == 1 else "%s^%d" % (g, e))
        return " ".join(pieces)

    def __repr__(self):
        return "Word(%s)" % self


_LETTER_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def parse_word(text):
    text = text.strip()
    if text in ("1", ""):
        return Word.identity()
    letters = []
    pos = 0
    for m in _LETTER_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError("cannot parse word %r" % text)
        g, e = m.group(1), int(m.group(2) or 1)
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            letters.append((g, step))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError("cannot parse word %r" % text)
    return Word(letters)


@dataclass(frozen=True)
class Presentation:
    """Generators plus relations given as (lhs, rhs) word pairs."""

    generators: tuple
    relations: tuple  # of (Word, Word)

    def relators(self):
        return [
            (lhs * rhs.inverse()).free_reduce() for lhs, rhs in self.relations
        ]

    def abelianization(self) -> SmithNormalForm:
        rows = [
            [l - r for l, r in zip(lhs.exponent_sums(self.generators),
                                   rhs.exponent_sums(self.generators))]
            for lhs, rhs in self.relations
        ]
        if not rows:
            rows = [[0] * len(self.generators)]
        if not self.generators:
            return SmithNormalForm((), len(rows), 0)
        return smith_normal_form(rows)

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = []
        for lhs, rhs in self.relations:
            if rhs.is_identity():
                rels.append(str(lhs))
            else:
                rels.append("%s = %s" % (lhs, rhs))
        if not rels:
            return "<%s | >" % gens
        return "<%s | %s>" % (gens, ", ".join(rels))

    def tietze_simplify(self):
        """Eliminate generators appearing exactly once in some relator.

        Deterministic: scans relators in order, always removing the first
        eligible generator.  Returns a new presentation whose relations are
        plain relators (rhs = 1).
        """
        gens = list(self.generators)
        relators = [r.cyclic_reduce() for r in self.relators()]
        changed = True
        while changed:
            changed = False
            relators = [r for r in (w.cyclic_reduce() for w in relators)
                        if r.letters]
            for ri, r in enumerate(relators):
                counts = {}
                for g, _ in r.letters:
                    counts[g] = counts.get(g, 0) + 1
                target = next(
                    (g for g, _ in r.letters if counts[g] == 1), None
                )
                if target is None:
                    continue
                idx = next(i for i, (g, _) in enumerate(r.letters) if g == target)
                rot = Word(r.letters[idx:] + r.letters[:idx])
                head_exp = rot.letters[0][1]
                rest = Word(rot.letters[1:])
                # rot = target^head_exp * rest = 1
                image = rest.inverse() if head_exp == 1 else rest
                images = {g: Word.generator(g) for g in gens}
                images[target] = image
                relators = [
                    w.substitute(images).cyclic_reduce()
                    for i, w in enumerate(relators)
                    if i != ri
                ]
                gens.remove(target)
                changed = True
                break
        relators = [r for r in relators if r.letters]
        return Presentation(
            tuple(gens), tuple((r, Word.identity()) for r in relators)
        )

    def matches_up_to_renaming(self, other):
        """True if some generator bijection identifies the relator multisets
        (relators compared as unoriented cyclic words)."""
        if len(self.generators) != len(other.generators):
            return False
        if len(self.relations) != len(other.relations):
            return False

        def canon(rel, mapping=None):
            w = rel.cyclic_reduce()
            letters = [
                ((mapping[g] if mapping else g), e) for g, e in w.letters
            ]
            best = None
            for cand in (letters, [(g, -e) for g, e in reversed(letters)]):
                for k in range(max(1, len(cand))):
                    rot = tuple(cand[k:] + cand[:k])
                    if best is None or rot < best:
                        best = rot
            return best

        target = sorted(canon(r) for r in other.relators())
        mine = self.relators()
        for perm in itertools.permutations(other.generators):
            mapping = dict(zip(self.generators, perm))
            if sorted(canon(r, mapping) for r in mine) == target:
                return True
        return False


def parse_presentation(text):
    """Parse ``<a, b | a b = b a, a^2>`` style presentation text."""
    text = text.strip()
    if not (text.startswith("<") and text.endswith(">")):
        raise ValueError("presentation must be enclosed in <...>")
    body = text[1:-1]
    if "|" not in body:
        raise ValueError("presentation needs a | separator")
    gen_part, _, rel_part = body.partition("|")
    generators = tuple(g.strip() for g in gen_part.split(",") if g.strip())
    relations = []
    for chunk in rel_part.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" in chunk:
            lhs, _, rhs = chunk.partition("=")
            relations.append((parse_word(lhs), parse_word(rhs)))
        else:
            relations.append((parse_word(chunk), Word.identity()))
    return Presentation(generators, tuple(relations))


# ---------------------------------------------------------------------------
# presentations from diagrams


def arc_partition(diagram):
    """Partition edges into arcs (maximal overpasses).

    Returns (names in order a, b, c, ..., map edge id -> arc name); arcs
    are ordered and named by their smallest edge id.
    """
    parent = {e: e for e in diagram.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if _id_key(rb) < _id_key(ra):
                ra, rb = rb, ra
            parent[rb] = ra

    for cid in diagram.crossings:
        c = diagram.crossings[cid]
        oi = diagram.over_in_slot(cid)
        oo = (oi + 2) % 4
        union(c.cyclic[oi][0], c.cyclic[oo][0])

    roots = sorted({find(e) for e in diagram.edges}, key=_id_key)
    names = {}
    for i, r in enumerate(roots):
        names[r] = _arc_name(i)
    arc_of_edge = {e: names[find(e)] for e in diagram.edges}
    return [names[r] for r in roots], arc_of_edge


def _arc_name(i):
    if i < 26:
        return chr(ord("a") + i)
    return "g%d" % i


def _crossing_sides(diagram, cid):
    """Local data at a crossing: over in/out edges and under in/out edges."""
    c = diagram.crossings[cid]
    oi = diagram.over_in_slot(cid)
    over_in = c.cyclic[oi][0]
    over_out = c.cyclic[(oi + 2) % 4][0]
    s_next = (oi + 1) % 4
    if c.cyclic[s_next][1] == 0:
        under_out = c.cyclic[s_next][0]
        under_in = c.cyclic[(oi + 3) % 4][0]
        handed = +1  # under strand exits counterclockwise-adjacent to over-in
    else:
        under_in = c.cyclic[s_next][0]
        under_out = c.cyclic[(oi + 3) % 4][0]
        handed = -1
    return oi, over_in, over_out, under_in, under_out, handed


def wirtinger(diagram):
    """Arc presentation: one generator per overpass, one conjugation
    relation per crossing."""
    arc_names, arc_of = arc_partition(diagram)
    relations = []
    for cid in diagram.crossings:
        _, e_in, e_out, u_in, u_out, handed = _crossing_sides(diagram, cid)
        o_in = Word.generator(arc_of[e_in], source=e_in)
        o_out = Word.generator(arc_of[e_out], source=e_out)
        w_in = Word.generator(arc_of[u_in], source=u_in)
        w_out = Word.generator(arc_of[u_out], source=u_out)
        if handed == 1:
            relations.append((o_in * w_in, w_out * o_out))
        else:
            relations.append((w_in * o_in, o_out * w_out))
    return Presentation(tuple(arc_names), tuple(relations))


def dehn(diagram, with_base=False):
    """Region presentation: one generator per face, one relation per
    crossing pairing the region quotients across the over strand;
    optionally kill the base region."""
    gens = tuple(f.name for f in diagram.faces)
    relations = []
    for cid in diagram.crossings:
        a = diagram.over_in_slot(cid)
        corner = lambda s: diagram.face_of_corner[(cid, s % 4)].name
        lhs = Word.generator(corner(a), -1) * Word.generator(corner(a - 1))
        rhs = Word.generator(corner(a + 1), -1) * Word.generator(corner(a + 2))
        relations.append((lhs, rhs))
    if with_base:
        relations = list(relations)
        relations.append(
            (Word.generator(diagram.base_face().name), Word.identity())
        )
        relations = tuple(relations)
    return Presentation(gens, tuple(relations))


def derivative_map(diagram):
    """The letterwise map from arc words to region words.

    Each arc letter maps to (right region)^-1 (left region) of one of the
    arc's edges: the letter's source edge when annotated, otherwise the
    arc's smallest edge.  Consistency of the two choices at every
    overpass crossing is asserted.
    """
    arc_names, arc_of = arc_partition(diagram)
    rep_edge = {}
    for e in diagram.edges:
        name = arc_of[e]
        if name not in rep_edge or _id_key(e) < _id_key(rep_edge[name]):
            rep_edge[name] = e

    def flanks(edge):
        r = diagram.right_face(edge).name
        l = diagram.left_face(edge).name
        return r, l

    # well-definedness across each overpass: the flank pair may change from
    # edge to edge only by a defining region relation, which holds exactly
    # when the over strand locally separates left flank from left flank.
    for cid in diagram.crossings:
        _, e_in, e_out, _, _, _ = _crossing_sides(diagram, cid)
        assert arc_of[e_in] == arc_of[e_out]

    def apply(word):
        out = Word.identity()
        for i, (g, e) in enumerate(word.letters):
            if g not in rep_edge:
                raise KeyError("unknown arc generator %r" % g)
            edge = None
            if word.sources is not None:
                edge = word.sources[i]
            if edge is None:
                edge = rep_edge[g]
            r, l = flanks(edge)
            image = Word(((r, -1), (l, 1)))
            out = out * (image if e == 1 else image.inverse())
        return out

    return apply


def integrate_walk(diagram, walk):
    """Turn a dual walk into an arc word: each edge crossed from its right
    face to its left face contributes that edge's arc with exponent +1."""
    _, arc_of = arc_partition(diagram)
    letters = []
    sources = []
    for edge, direction in walk:
        letters.append((arc_of[edge], 1 if direction == 1 else -1))
        sources.append(edge)
    return Word(letters, sources)


def surface_relators(diagram):
    """Arc words integrating the homology-basis dual walks."""
    return [
        integrate_walk(diagram, walk) for walk in diagram.basis_dual_walks()
    ]


def quotient_presentation(diagram):
    """The arc presentation with the surface relators adjoined."""
    base = wirtinger(diagram)
    extra = tuple((r, Word.identity()) for r in surface_relators(diagram))
    return Presentation(base.generators, base.relations + extra)
