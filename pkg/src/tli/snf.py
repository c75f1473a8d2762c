"""Smith normal form of integer matrices, with exact arithmetic.

Provides the invariant-factor description of the cokernel of an integer
matrix and, via the recorded unimodular transforms, an exact solver for
integer linear systems.  Pivoting always selects the smallest nonzero
absolute value with (row, column) index tiebreak, so outputs are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SmithNormalForm:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    ``invariant_factors`` lists every diagonal entry including trailing
    zeros (length = min(rows, cols) truncated to cols for the cokernel
    reading); ``free_rank`` is cols - (number of nonzero factors).
    """

    invariant_factors: tuple
    rows: int
    cols: int

    @property
    def rank(self):
        return sum(1 for d in self.invariant_factors if d)

    @property
    def free_rank(self):
        return self.cols - self.rank

    @property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d > 1)

    def cokernel_description(self):
        """Human-readable description of Z^cols / (row space)."""
        parts = ["Z/%d" % d for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        return " + ".join(parts) if parts else "0"

    def same_cokernel(self, other):
        return (
            self.torsion == other.torsion and self.free_rank == other.free_rank
        )


@dataclass
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and D in Smith form."""

    d: list
    u: list
    v: list
    snf: SmithNormalForm = field(init=False)

    def __post_init__(self):
        diag = [
            self.d[i][i]
            for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))
        ]
        rows = len(self.d)
        cols = len(self.d[0]) if self.d else 0
        self.snf = SmithNormalForm(tuple(diag), rows, cols)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_decomposition(matrix):
    """Full Smith decomposition of an integer matrix (list of lists)."""
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def row_op(i, j, q):  # row i -= q * row j
        for k in range(cols):
            m[i][k] -= q * m[j][k]
        for k in range(rows):
            u[i][k] -= q * u[j][k]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(rows):
            m[r][i] -= q * m[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < rows and t < cols:
        # smallest absolute nonzero pivot, (row, col) tiebreak
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        # clear row and column t; pivot choice keeps this terminating
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, q)
                    if m[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, q)
                    if m[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # divisibility: fold any non-multiple into the pivot
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t]:
                    for k in range(cols):
                        m[t][k] += m[i][k]
                    for k in range(rows):
                        u[t][k] += u[i][k]
                    dirty = True
                    break
            if dirty:
                break
        if dirty:
            continue  # redo elimination at the same t
        if m[t][t] < 0:
            for k in range(cols):
                m[t][k] = -m[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1
    return SmithDecomposition(m, u, v)


def smith_normal_form(matrix):
    """Invariant factors of an integer matrix as a SmithNormalForm."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0 or cols == 0:
        return SmithNormalForm((), rows, cols)
    return smith_decomposition(matrix).snf


def matmul(a, b):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def solve_integer(matrix, rhs):
    """One integer solution x of matrix @ x == rhs, or None if none exists.

    Deterministic: uses the Smith decomposition and sets all free
    coordinates to zero.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    dec = smith_decomposition(matrix)
    c = [sum(dec.u[i][k] * rhs[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    r = min(rows, cols)
    for i in range(rows):
        d = dec.d[i][i] if i < r else 0
        if i < r and d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return [sum(dec.v[i][k] * y[k] for k in range(cols)) for i in range(cols)]
