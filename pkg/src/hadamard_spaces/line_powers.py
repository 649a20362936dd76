"""Hadamard powers of a line: power generator matrices, the pairwise-bracket
product formula for their Pluecker coordinates, linear equations cutting the
powers out, and a sampling fallback for degenerate lines.

The closed forms require the line to meet no coordinate codimension-2
stratum, which for a line is exactly the nonvanishing of all its Pluecker
brackets.  Degenerate lines still have linear powers, but possibly of lower
dimension; those are computed only by sampling, never by the matrix formula.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import PreconditionError, BudgetExhausted, QMatrix
from .poly import SparsePoly
from .projective import LinSpace, sample_point

#: Extra rank-stable samples required before a sampled span is trusted.
SPAN_STABLE_STREAK = 3


def line_power_matrix(line, r):
    """The (r+1) x (n+1) matrix with rows a0^(r-i) * a1^i, entrywise.

    Its row space is the r-th Hadamard power of the line whenever the line
    has no vanishing bracket.  Row i is the entrywise product of r-i copies
    of the first generator row and i copies of the second.
    """
    if line.dim != 1:
        raise PreconditionError("expected a line (2 generator rows), got dim %d" % line.dim)
    if r < 1:
        raise PreconditionError("power must be >= 1")
    a0, a1 = line.generators.rows
    rows = []
    for i in range(r + 1):
        rows.append(tuple(x ** (r - i) * y ** i for x, y in zip(a0, a1)))
    return QMatrix(rows)


def line_power_pluecker(pl, r, indices):
    """Bracket of the r-th power of a line: the product of pairwise brackets.

    For sorted indices i_0 < ... < i_r this equals the corresponding maximal
    minor of line_power_matrix, exactly.
    """
    if pl.dim != 1:
        raise PreconditionError("expected the Pluecker vector of a line")
    indices = tuple(indices)
    if len(indices) != r + 1:
        raise ValueError("need r+1 indices")
    for i in indices:
        if not 0 <= i <= pl.ambient_dim:
            raise IndexError("index %d out of range for ambient dimension %d" % (i, pl.ambient_dim))
    prod = Fraction(1)
    for j, k in combinations(indices, 2):
        prod *= pl.bracket((j, k))
    return prod


def power_hyperplane(pl):
    """The linear form cutting out the (n-1)-st power of a line in P^n.

    The coefficient of x_i is (-1)^(n+i) times the product of all brackets
    avoiding i.
    """
    n = pl.ambient_dim
    if pl.dim != 1:
        raise PreconditionError("expected the Pluecker vector of a line")
    if n < 2:
        raise PreconditionError("ambient dimension must be at least 2")
    coeffs = []
    for i in range(n + 1):
        prod = Fraction(1)
        for j, k in combinations([t for t in range(n + 1) if t != i], 2):
            prod *= pl.bracket((j, k))
        coeffs.append((-1) ** (n + i) * prod)
    return SparsePoly.linear_form(coeffs)


def power_linear_equations(line, r):
    """Linear equations for the r-th power of a line, r < n.

    These are the binom(n+1, r+2) maximal minors of the power matrix
    augmented with a row of coordinate variables, expanded along that row.
    Coefficients come out integer-cleared and content-free.  For r = n-1
    the single equation agrees with power_hyperplane up to sign.
    """
    n = line.ambient_dim
    if r >= n:
        raise PreconditionError("r must be smaller than the ambient dimension")
    mat = line_power_matrix(line, r)
    equations = []
    for cols in combinations(range(n + 1), r + 2):
        form = SparsePoly.zero(n + 1)
        for t, i in enumerate(cols):
            minor_cols = cols[:t] + cols[t + 1:]
            minor = mat.submatrix_columns(minor_cols).det()
            if minor:
                sign = (-1) ** (r + 1 + t)
                form = form + SparsePoly.variable(n + 1, i, sign * minor)
        equations.append(form.primitive())
    return equations


def sampled_power_span(line_or_space, r, rng, budget=200):
    """Span of sampled r-fold Hadamard products of points of a space.

    Keeps adding products of r independently sampled points until the rank
    of the accumulated rows is unchanged for SPAN_STABLE_STREAK consecutive
    extra samples (or the span is the whole ambient space).  This is the
    computation of choice for degenerate lines, whose powers are linear but
    fall outside the hypotheses of the closed-form matrix.
    """
    space = line_or_space
    if r < 1:
        raise PreconditionError("power must be >= 1")
    n = space.ambient_dim
    basis = []          # working RREF rows, as lists
    pivots = []
    streak = 0
    draws = 0
    while draws < budget:
        draws += 1
        prod = None
        for _ in range(r):
            pt = sample_point(space, rng)
            prod = pt if prod is None else prod.hadamard(pt)
            if prod is None:
                break
        if prod is None:
            continue
        vec = list(prod.coords)
        for row, piv in zip(basis, pivots):
            if vec[piv]:
                f = vec[piv]
                vec = [x - f * y for x, y in zip(vec, row)]
        lead = next((j for j, x in enumerate(vec) if x), None)
        if lead is None:
            streak += 1
            if streak >= SPAN_STABLE_STREAK and basis:
                return LinSpace.span_of(QMatrix(basis))
            continue
        streak = 0
        vec = [x / vec[lead] for x in vec]
        for row, piv in zip(basis, pivots):
            if row[lead]:
                f = row[lead]
                row[:] = [x - f * y for x, y in zip(row, vec)]
        basis.append(vec)
        pivots.append(lead)
        if len(basis) == n + 1:
            return LinSpace.span_of(QMatrix(basis))
    raise BudgetExhausted("sampled span did not stabilize within %d draws" % budget)
