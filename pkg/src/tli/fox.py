"""Free differential calculus on group rings of free groups.

The derivative of a word with respect to a generator lives in the integral
group ring of the free group.  Jacobians of presentations are taken on
relation pairs as d(lhs) - d(rhs), which keeps rows literally equal to the
hand computation rather than a unit multiple of it.  Specializing a group
ring element through a homomorphism whose generator images are Laurent
units gives exact Laurent matrices.
"""

from __future__ import annotations

from .groups import Word
from .laurent import LaurentMatrix, LaurentPolynomial


class GroupRingElement:
    """Finite integer combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                w = w.free_reduce()
                w = Word(w.letters)  # drop annotations for stable keys
                if c:
                    clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, word, coeff=1):
        return cls({word: coeff})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElement(terms)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = (w1 * w2).free_reduce()
                terms[w] = terms.get(w, 0) + c1 * c2
        return GroupRingElement(terms)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), str(t[0]))):
            body = str(w)
            if body == "1":
                body = str(abs(c))
            elif abs(c) != 1:
                body = "%d %s" % (abs(c), body)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "GroupRingElement(%s)" % self


def fox_derivative(word, gen):
    """d(word)/d(gen) under d(uv) = d(u) + u d(v), d(g)/d(g) = 1,
    d(g^-1)/d(g) = -g^-1."""
    result = GroupRingElement.zero()
    prefix = Word.identity()
    for g, e in word.letters:
        letter = Word.generator(g, e)
        if g == gen:
            if e == 1:
                result = result + GroupRingElement.of(prefix)
            else:
                result = result - GroupRingElement.of(
                    (prefix * letter).free_reduce()
                )
        prefix = (prefix * letter).free_reduce()
    return result


def jacobian(presentation):
    """Rows indexed by relations, columns by generators; entry (i, j) is
    d(lhs_i)/d(gen_j) - d(rhs_i)/d(gen_j)."""
    return [
        [
            fox_derivative(lhs, g) - fox_derivative(rhs, g)
            for g in presentation.generators
        ]
        for lhs, rhs in presentation.relations
    ]


def specialize_element(element, images, nvars):
    """Push a group ring element through generator -> Laurent unit images."""
    total = LaurentPolynomial.zero(nvars)
    for w, c in element.terms.items():
        value = LaurentPolynomial.constant(c, nvars)
        for g, e in w.letters:
            img = images[g]
            if not img.is_unit():
                raise ValueError("image of %r is not a unit" % g)
            value = value * (img if e == 1 else img ** -1)
        total = total + value
    return total


def specialize_jacobian(rows, images, nvars):
    return LaurentMatrix(
        [[specialize_element(e, images, nvars) for e in row] for row in rows],
        nvars=nvars,
    )


def all_to_t(generators):
    """Images for the total abelianization onto <t>."""
    t = LaurentPolynomial.variable(0, 1)
    return {g: t for g in generators}, 1


def all_to_minus_one(generators):
    """Images for the sign character; specializations become integers."""
    return {g: LaurentPolynomial.constant(-1, 0) for g in generators}, 0
