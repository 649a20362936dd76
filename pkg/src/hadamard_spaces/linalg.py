"""Exact linear algebra over the rationals and the integers.

Everything here is immutable and pure: matrices are tuples of tuples of
`fractions.Fraction`, operations return new values, and there is no float
anywhere.  "Equals zero" is therefore decidable, which the rest of the
package relies on.
"""

from fractions import Fraction
from math import gcd, lcm


class PreconditionError(ValueError):
    """A mathematical hypothesis of an operation is violated."""


class BudgetExhausted(RuntimeError):
    """A retry/sampling budget ran out before the operation could finish."""


def rat(x) -> Fraction:
    """Coerce ints, strings like '-3/7', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations: %r" % (x,))
    return Fraction(x)


def rat_str(q: Fraction) -> str:
    """Canonical 'num/den' string; the '/1' is omitted for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def clear_denominators(vec):
    """Scale a rational vector to coprime integers, first nonzero positive.

    Returns a tuple of ints; the zero vector maps to itself.
    """
    vec = [Fraction(x) for x in vec]
    mult = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * mult) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
    return tuple(ints)


class QMatrix:
    """Immutable matrix over Fraction entries.

    Row-reduction uses deterministic first-nonzero pivoting so that equal
    inputs always produce byte-identical reduced forms.
    """

    __slots__ = ("rows", "_rref")

    def __init__(self, rows):
        self.rows = tuple(tuple(rat(x) for x in row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            for row in self.rows:
                if len(row) != width:
                    raise ValueError("ragged rows")
        self._rref = None

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(x) for x in row) for row in self.rows)
        return "QMatrix[%s]" % body

    def transpose(self):
        return QMatrix(tuple(zip(*self.rows))) if self.rows else QMatrix(())

    def stack(self, other):
        if other.nrows and self.nrows and other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return QMatrix(self.rows + other.rows)

    def scale_columns(self, scalars):
        if len(scalars) != self.ncols:
            raise ValueError("column count mismatch")
        scalars = [rat(s) for s in scalars]
        return QMatrix(tuple(tuple(x * s for x, s in zip(row, scalars)) for row in self.rows))

    def mat_vec(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((x * rat(v) for x, v in zip(row, vec)), Fraction(0)) for row in self.rows)

    def submatrix_columns(self, cols):
        return QMatrix(tuple(tuple(row[c] for c in cols) for row in self.rows))

    def rref(self):
        """Reduced row echelon form and rank (row space preserved)."""
        if self._rref is not None:
            return self._rref
        rows = [list(row) for row in self.rows]
        nr, nc = len(rows), self.ncols
        piv_r = 0
        pivots = []
        for col in range(nc):
            pivot = None
            for r in range(piv_r, nr):
                if rows[r][col]:
                    pivot = r
                    break
            if pivot is None:
                continue
            rows[piv_r], rows[pivot] = rows[pivot], rows[piv_r]
            pv = rows[piv_r][col]
            if pv != 1:
                rows[piv_r] = [x / pv for x in rows[piv_r]]
            for r in range(nr):
                if r != piv_r and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_r])]
            pivots.append(col)
            piv_r += 1
            if piv_r == nr:
                break
        reduced = QMatrix(rows[:piv_r] + rows[piv_r:])
        reduced._rref = (reduced, piv_r, tuple(pivots))
        self._rref = (reduced, piv_r, tuple(pivots))
        return self._rref

    def rank(self):
        return self.rref()[1]

    def row_space_matrix(self):
        """RREF with zero rows dropped: a canonical basis of the row space."""
        reduced, rank, _ = self.rref()
        return QMatrix(reduced.rows[:rank])

    def nullspace(self):
        """Basis of the right kernel, one vector per free column.

        The basis vector for free column f has a 1 in position f and zeros
        in every other free position.
        """
        reduced, rank, pivots = self.rref()
        nc = self.ncols
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * nc
            vec[f] = Fraction(1)
            for r, c in enumerate(pivots):
                vec[c] = -reduced.rows[r][f]
            basis.append(tuple(vec))
        return basis

    def det(self):
        """Determinant by fraction-free elimination on a scaled copy."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        # Clear denominators row by row; divide the scale factors back out.
        scale = Fraction(1)
        rows = []
        for row in self.rows:
            mult = lcm(*(x.denominator for x in row))
            scale *= mult
            rows.append([int(x * mult) for x in row])
        # Bareiss.
        sign = 1
        prev = 1
        for k in range(n - 1):
            if rows[k][k] == 0:
                swap = None
                for r in range(k + 1, n):
                    if rows[r][k]:
                        swap = r
                        break
                if swap is None:
                    return Fraction(0)
                rows[k], rows[swap] = rows[swap], rows[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
                rows[i][k] = 0
            prev = rows[k][k]
        return Fraction(sign * rows[n - 1][n - 1], scale)


def identity_matrix(n):
    return QMatrix(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))


def _bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon rows, pivot columns).  The Bareiss division by the
    previous pivot is exact, keeping intermediate entries at minor size.
    """
    rows = [list(map(int, r)) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    prev = 1
    pr = 0
    for c in range(nc):
        pivot = None
        for r in range(pr, nr):
            if rows[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        pv = rows[pr][c]
        for r in range(pr + 1, nr):
            f = rows[r][c]
            row = rows[r]
            top = rows[pr]
            for j in range(c, nc):
                row[j] = (pv * row[j] - f * top[j]) // prev
        prev = pv
        pivots.append(c)
        pr += 1
        if pr == nr:
            break
    return rows[:pr], pivots


def integer_kernel_basis(rows):
    """Kernel basis of an integer matrix, one vector per free column.

    Same contract as QMatrix.nullspace but with fraction-free elimination,
    which is considerably faster on the large evaluation matrices built by
    the interpolation oracle.  Vectors come out with Fraction entries.
    """
    if not rows:
        return []
    echelon, pivots = _bareiss_echelon(rows)
    nc = len(rows[0])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nc
        vec[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((echelon[r][j] * vec[j] for j in range(c + 1, nc) if vec[j]), Fraction(0))
            vec[c] = -s / echelon[r][c]
        basis.append(tuple(vec))
    return basis


def smith_normal_form(rows):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(nrows, ncols) nonnegative integers d_1 | d_2 | ... with
    trailing zeros for rank deficiency.  The product of the nonzero d_i is
    the index of the row lattice inside its saturation.
    """
    a = [[int(x) for x in row] for row in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    m = min(nr, nc)
    diag = []
    t = 0
    while t < m:
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # Euclidean clearing of column t; swapping keeps shrinking the pivot.
            for i in range(t + 1, nr):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
            for j in range(t + 1, nc):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
            if all(a[i][t] == 0 for i in range(t + 1, nr)):
                break
        # Divisibility chain: fold in an offending row and redo this step.
        offending = False
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t]:
                    a[t] = [x + y for x, y in zip(a[t], a[i])]
                    offending = True
                    break
            if offending:
                break
        if offending:
            continue
        diag.append(abs(a[t][t]))
        t += 1
    while len(diag) < m:
        diag.append(0)
    return diag
