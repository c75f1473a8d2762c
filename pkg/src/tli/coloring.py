"""Region coloring systems over the integers and over the Laurent ring.

At each crossing the four corners split into two pairs across the over
strand; colors of the regions must satisfy (sum of one side) = (sum of the
other).  Over the Laurent ring each corner is weighted by its corner
monomial.  The cokernel of the integer system is the coloring group; the
order of the Laurent system is the coloring module's order polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import _id_key
from .laurent import LaurentMatrix, LaurentPolynomial
from .snf import smith_normal_form


class NotShadable(ValueError):
    pass


@dataclass(frozen=True)
class ColoringSystem:
    faces: tuple  # generator order (face names)
    crossing_ids: tuple  # row order
    rows_int: tuple  # of tuples of ints
    rows_laurent: LaurentMatrix
    shading: frozenset
    nvars: int


def _corner_sign(slot, over_in):
    """+1 on the over-in side of the over strand, -1 on the other."""
    return 1 if (slot - over_in) % 4 in (0, 1) else -1


def coloring_system(diagram, shading=None):
    """Build the crossing relation system for a shaded diagram.

    Row signs are normalized so the shaded corner with the smallest slot
    at each crossing carries +.
    """
    if shading is None:
        shading = diagram.checkerboard_shade()
    if shading is None:
        raise NotShadable(diagram.name)
    faces = tuple(f.name for f in diagram.faces)
    col = {name: j for j, name in enumerate(faces)}
    monos = diagram.corner_monomials()
    nvars = 2 * diagram.genus
    rows_int = []
    rows_laurent = []
    cids = tuple(diagram.crossings)
    for cid in cids:
        a = diagram.over_in_slot(cid)
        shaded_slots = [
            s for s in range(4)
            if diagram.face_of_corner[(cid, s)].name in shading
        ]
        if len(shaded_slots) != 2:
            raise NotShadable(
                "crossing %r does not alternate under the given shading" % cid
            )
        flip = -1 if _corner_sign(min(shaded_slots), a) < 0 else 1
        row_i = [0] * len(faces)
        row_l = [LaurentPolynomial.zero(nvars) for _ in faces]
        for s in range(4):
            sign = flip * _corner_sign(s, a)
            j = col[diagram.face_of_corner[(cid, s)].name]
            row_i[j] += sign
            row_l[j] = row_l[j] + LaurentPolynomial.monomial(monos[(cid, s)], sign)
        rows_int.append(tuple(row_i))
        rows_laurent.append(row_l)
    return ColoringSystem(
        faces=faces,
        crossing_ids=cids,
        rows_int=tuple(rows_int),
        rows_laurent=LaurentMatrix(rows_laurent, nvars=nvars),
        shading=frozenset(shading),
        nvars=nvars,
    )


def coloring_group(cs):
    """Invariant factors of the integer relation system's cokernel."""
    return smith_normal_form([list(r) for r in cs.rows_int])


def module_order(cs):
    """Order of the Laurent relation module: unit-normalized determinant
    when square, gcd of maximal minors otherwise (0 when rows < cols)."""
    m = cs.rows_laurent
    k = len(cs.faces)
    if m.rows == m.cols == k:
        return m.determinant().unit_normalize()
    if k > min(m.rows, m.cols):
        return LaurentPolynomial.zero(cs.nvars)
    return m.minors_gcd(k)


def brute_force_colorings(cs, p):
    """Exhaustively count region colorings over Z/p satisfying all integer
    relations.  Guarded against large search spaces."""
    n = len(cs.faces)
    if n > 12 and p ** n > 10 ** 7:
        raise ValueError("coloring search space too large")
    count = 0
    assignment = [0] * n
    rows = cs.rows_int

    def recurse(i):
        nonlocal count
        if i == n:
            count += 1
            return
        for v in range(p):
            assignment[i] = v
            # prune with rows fully determined by the first i+1 regions
            ok = True
            for row in rows:
                if any(row[j] and j > i for j in range(n)):
                    continue
                if sum(row[j] * assignment[j] for j in range(i + 1)) % p:
                    ok = False
                    break
            if ok:
                recurse(i + 1)
        assignment[i] = 0

    recurse(0)
    return count


def expected_colorings(cs, p):
    """The count predicted by the Smith normal form of the system."""
    snf = coloring_group(cs)
    exponent = snf.free_rank + sum(1 for d in snf.invariant_factors if d and d % p == 0)
    return p ** exponent
