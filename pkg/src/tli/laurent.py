"""Exact arithmetic over the ring of integer Laurent polynomials.

Polynomials live in Z[x1^{+-1}, y1^{+-1}, ..., xg^{+-1}, yg^{+-1}] for a
surface of genus g (so the number of variables is always even, possibly
zero).  Everything here is exact: coefficients are Python ints, exponent
vectors are tuples of ints.  Values are immutable.
"""

from __future__ import annotations

import itertools
import math
import re


def var_names(nvars):
    """Canonical variable names: x, y for genus one, x1, y1, x2, y2, ... above."""
    if nvars == 0:
        return []
    if nvars == 1:
        return ["t"]
    if nvars == 2:
        return ["x", "y"]
    names = []
    for i in range(nvars // 2):
        names.append("x%d" % (i + 1))
        names.append("y%d" % (i + 1))
    return names


class LaurentPolynomial:
    """An integer Laurent polynomial in a fixed even number of variables.

    Stored as a mapping from exponent tuples to nonzero integer
    coefficients.  Instances are immutable and hashable; all arithmetic
    returns new values.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent vector has wrong length")
                if coeff:
                    exps = tuple(int(e) for e in exps)
                    clean[exps] = clean.get(exps, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, index, nvars, power=1):
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): 1})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def is_unit(self):
        """True for +-(monomial)."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def sorted_terms(self):
        """Terms in descending lexicographic exponent order."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mismatched number of variables")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(
                self.nvars, {e: c * other for e, c in self._terms.items()}
            )
        self._check(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (e, c), = self._terms.items()
            coeff = 1 if c == 1 or n % 2 == 0 else -1
            return LaurentPolynomial(
                self.nvars, {tuple(n * x for x in e): coeff}
            )
        result = LaurentPolynomial.one(self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, exps):
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPolynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
        )

    # -- ring maps ---------------------------------------------------------

    def bar(self):
        """The involution sending every variable v to v^-1."""
        return LaurentPolynomial(
            self.nvars, {tuple(-x for x in e): c for e, c in self._terms.items()}
        )

    def specialize_ones(self):
        """Set every variable to 1; returns an integer."""
        return sum(self._terms.values())

    def substitute_basis(self, m):
        """Rewrite under the exponent-linear substitution of a unimodular
        integer matrix m: variable i maps to the monomial whose exponent
        vector is column i of m."""
        n = self.nvars
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError("substitution matrix has wrong shape")
        if abs(_int_det(m)) != 1:
            raise ValueError("substitution matrix must be unimodular")
        terms = {}
        for e, c in self._terms.items():
            new = tuple(sum(m[i][j] * e[j] for j in range(n)) for i in range(n))
            terms[new] = terms.get(new, 0) + c
        return LaurentPolynomial(n, terms)

    # -- normal forms ------------------------------------------------------

    def unit_normalize(self):
        """Canonical representative of {+-monomial * p}.

        Shifts every variable so its minimum exponent is 0, then flips the
        sign so the lexicographically smallest surviving monomial has
        positive coefficient.  Idempotent; 0 maps to 0.
        """
        if not self._terms:
            return self
        mins = [min(e[i] for e in self._terms) for i in range(self.nvars)]
        shifted = self.shift(tuple(-m for m in mins))
        smallest = min(shifted._terms)
        if shifted._terms[smallest] < 0:
            shifted = -shifted
        return shifted

    # -- text --------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        names = var_names(self.nvars)
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [
                "%s^%d" % (names[i], e) if e != 1 else names[i]
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "LaurentPolynomial(%r)" % str(self)


_TERM_RE = re.compile(r"[+-]?[^+-]+")


def parse_poly(text, nvars):
    """Parse the canonical text format back into a polynomial.

    Accepts what ``str`` produces: terms like ``2*x*y^-1``, ``- 3``,
    ``y^2`` joined by ``+``/``-``.
    """
    names = var_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    text = text.strip()
    if text == "0":
        return LaurentPolynomial.zero(nvars)
    # normalize so every term carries its own sign with no spaces; hide
    # exponent minus signs from the term splitter
    compact = text.replace(" ", "").replace("^-", "^~")
    terms = {}
    for match in _TERM_RE.finditer(compact):
        token = match.group(0)
        sign = 1
        if token.startswith("-"):
            sign, token = -1, token[1:]
        elif token.startswith("+"):
            token = token[1:]
        coeff = sign
        exps = [0] * nvars
        for factor in token.split("*"):
            if not factor:
                raise ValueError("empty factor in %r" % text)
            if factor[0].isdigit():
                coeff *= int(factor)
                continue
            if "^" in factor:
                name, _, power = factor.partition("^")
                e = int(power.replace("~", "-"))
            else:
                name, e = factor, 1
            if name not in index:
                raise ValueError("unknown variable %r" % name)
            exps[index[name]] += e
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPolynomial(nvars, terms)


# ---------------------------------------------------------------------------
# matrices


class LaurentMatrix:
    """A rectangular matrix of Laurent polynomials sharing one variable set."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, entries, nvars=None):
        entries = [list(row) for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(row) != self.cols for row in entries):
            raise ValueError("ragged matrix")
        if nvars is None:
            if not entries or not entries[0]:
                raise ValueError("cannot infer variable count from empty matrix")
            nvars = entries[0][0].nvars
        self.nvars = nvars
        for row in entries:
            for p in row:
                if p.nvars != nvars:
                    raise ValueError("mixed variable counts in matrix")
        self.entries = entries

    @classmethod
    def from_int(cls, rows, nvars=0):
        return cls(
            [[LaurentPolynomial.constant(c, nvars) for c in row] for row in rows],
            nvars=nvars,
        )

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_int(self):
        """Specialize every variable to 1, giving a plain integer matrix."""
        return [[p.specialize_ones() for p in row] for row in self.entries]

    def bar_transpose_symmetric(self):
        """True when entry (i, j) equals bar of entry (j, i) throughout."""
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i].bar()
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def substitute_basis(self, m):
        return LaurentMatrix(
            [[p.substitute_basis(m) for p in row] for row in self.entries],
            nvars=self.nvars,
        )

    def determinant(self):
        """Exact determinant by fraction-free (Bareiss) elimination.

        Each row is first cleared to nonnegative exponents by a monomial
        factor which is divided back out of the final result.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return LaurentPolynomial.one(self.nvars)
        work = []
        clear = [0] * self.nvars  # total monomial factor multiplied in
        for row in self.entries:
            mins = _row_min_exponents(row, self.nvars)
            shift = tuple(-m for m in mins)
            work.append([p.shift(shift) for p in row])
            clear = [c + s for c, s in zip(clear, shift)]
        sign = 1
        prev = LaurentPolynomial.one(self.nvars)
        for k in range(n - 1):
            if work[k][k].is_zero():
                pivot_row = next(
                    (i for i in range(k + 1, n) if not work[i][k].is_zero()), None
                )
                if pivot_row is None:
                    return LaurentPolynomial.zero(self.nvars)
                work[k], work[pivot_row] = work[pivot_row], work[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                    work[i][j] = exact_div(num, prev)
                work[i][k] = LaurentPolynomial.zero(self.nvars)
            prev = work[k][k]
        det = work[n - 1][n - 1] * sign
        return det.shift(tuple(-c for c in clear))

    def minors_gcd(self, k):
        """Unit-normalized gcd of all k x k minors; 0 when all vanish."""
        if k < 0 or k > min(self.rows, self.cols):
            raise ValueError("minor size out of range")
        if k == 0:
            return LaurentPolynomial.one(self.nvars).unit_normalize()
        minors = []
        for rows in itertools.combinations(range(self.rows), k):
            for cols in itertools.combinations(range(self.cols), k):
                sub = LaurentMatrix(
                    [[self.entries[i][j] for j in cols] for i in rows],
                    nvars=self.nvars,
                )
                d = sub.determinant()
                if not d.is_zero():
                    minors.append(d)
        if not minors:
            return LaurentPolynomial.zero(self.nvars)
        g = minors[0]
        for m in minors[1:]:
            g = laurent_gcd(g, m)
            if g.unit_normalize() == LaurentPolynomial.one(self.nvars):
                break
        return g.unit_normalize()

    def __str__(self):
        cells = [[str(p) for p in row] for row in self.entries]
        widths = [
            max(len(cells[i][j]) for i in range(self.rows)) if self.rows else 0
            for j in range(self.cols)
        ]
        lines = []
        for row in cells:
            lines.append(
                "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            )
        return "\n".join(lines)


def _row_min_exponents(row, nvars):
    mins = [0] * nvars
    for p in row:
        for e in p._terms:
            for i in range(nvars):
                mins[i] = min(mins[i], e[i])
    return mins


def _int_det(m):
    n = len(m)
    if n == 0:
        return 1
    mat = LaurentMatrix.from_int(m)
    return mat.determinant().specialize_ones()


# ---------------------------------------------------------------------------
# exact division and gcd


def exact_div(p, q):
    """Divide p by q, requiring the division to be exact."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    nvars = p.nvars
    if p.is_zero():
        return p
    if len(q._terms) == 1:
        (qe, qc), = q._terms.items()
        terms = {}
        for e, c in p._terms.items():
            if c % qc:
                raise ValueError("inexact division")
            terms[tuple(a - b for a, b in zip(e, qe))] = c // qc
        return LaurentPolynomial(nvars, terms)
    rem = p
    qlead = max(q._terms)
    qc = q._terms[qlead]
    quot = {}
    while not rem.is_zero():
        rlead = max(rem._terms)
        rc = rem._terms[rlead]
        if rc % qc:
            raise ValueError("inexact division")
        e = tuple(a - b for a, b in zip(rlead, qlead))
        c = rc // qc
        quot[e] = quot.get(e, 0) + c
        rem = rem - q.shift(e) * c
    return LaurentPolynomial(nvars, quot)


def laurent_gcd(p, q):
    """A gcd of two Laurent polynomials, defined up to units.

    Computed by content / primitive-part recursion with a primitive
    pseudo-remainder sequence; the result is unit-normalized.
    """
    p = p.unit_normalize()
    q = q.unit_normalize()
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    return _poly_gcd(p, q, p.nvars).unit_normalize()


def _degree_in(p, i):
    if p.is_zero():
        return -1
    return max(e[i] for e in p._terms)


def _as_univariate(p, i):
    """View p as a dict {exponent of variable i: coefficient polynomial}."""
    coeffs = {}
    for e, c in p._terms.items():
        rest = e[:i] + (0,) + e[i + 1 :]
        d = e[i]
        coeffs.setdefault(d, {})
        coeffs[d][rest] = coeffs[d].get(rest, 0) + c
    return {
        d: LaurentPolynomial(p.nvars, terms) for d, terms in coeffs.items()
    }


def _from_univariate(coeffs, i, nvars):
    terms = {}
    for d, poly in coeffs.items():
        for e, c in poly._terms.items():
            key = e[:i] + (d,) + e[i + 1 :]
            terms[key] = terms.get(key, 0) + c
    return LaurentPolynomial(nvars, terms)


def _int_content(p):
    return math.gcd(*p._terms.values()) if p._terms else 0


def _poly_gcd(p, q, nvars):
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    main = next(
        (i for i in range(nvars) if _degree_in(p, i) > 0 or _degree_in(q, i) > 0),
        None,
    )
    if main is None:
        # both are (shifted) constants
        g = math.gcd(_int_content(p), _int_content(q))
        return LaurentPolynomial.constant(g, nvars)
    a, ca = _primitive(p, main, nvars)
    b, cb = _primitive(q, main, nvars)
    cont = _poly_gcd(ca, cb, nvars)
    if _degree_in(a, main) < _degree_in(b, main):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, main, nvars)
        a, b = b, _primitive(r, main, nvars)[0] if not r.is_zero() else r
    return (cont * _primitive(a, main, nvars)[0]).unit_normalize()


def _primitive(p, main, nvars):
    """Split p into (primitive part, content) with respect to variable main."""
    coeffs = _as_univariate(p, main)
    content = LaurentPolynomial.zero(nvars)
    for poly in coeffs.values():
        content = _poly_gcd(content, poly.unit_normalize(), nvars)
    content = content.unit_normalize()
    if content == LaurentPolynomial.one(nvars):
        return p, content
    prim = {d: exact_div(c, content) for d, c in coeffs.items()}
    return _from_univariate(prim, main, nvars), content


def _pseudo_rem(a, b, main, nvars):
    da, db = _degree_in(a, main), _degree_in(b, main)
    if da < db:
        return a
    lead_b = _as_univariate(b, main)[db]
    r = a
    while not r.is_zero() and _degree_in(r, main) >= db:
        dr = _degree_in(r, main)
        lead_r = _as_univariate(r, main)[dr]
        xshift = [0] * nvars
        xshift[main] = dr - db
        r = r * lead_b - b.shift(tuple(xshift)) * lead_r
    return r
