"""Projective points, linear spaces, Pluecker coordinates, and the
coordinatewise (Hadamard) product of points and point-by-space products.

Points and spaces are exact rational objects.  A point is defined up to a
global nonzero scale; equality is tested through cross products, never by
normalizing coordinates.  A linear space keeps the generator matrix it was
built from (full row rank enforced), and space equality is a mutual
row-space rank test, so no canonical form is ever assumed.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import PreconditionError, BudgetExhausted, QMatrix, rat, rat_str, clear_denominators

#: Coefficient range for random rational combinations; large enough that
#: genericity failures are negligible across a whole test run, small enough
#: to keep bit growth in downstream exact arithmetic bounded.
SAMPLE_COEFF_BOUND = 10 ** 6


class PPoint:
    """A point of projective n-space with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(rat(x) for x in coords)
        if not any(self.coords):
            raise ValueError("projective point cannot have all coordinates zero")

    @property
    def ambient_dim(self):
        return len(self.coords) - 1

    def __eq__(self, other):
        if not isinstance(other, PPoint) or len(self.coords) != len(other.coords):
            return False
        p, q = self.coords, other.coords
        i0 = next(i for i in range(len(p)) if p[i] or q[i])
        if not (p[i0] and q[i0]):
            return False
        return all(p[i0] * q[j] == q[i0] * p[j] for j in range(len(p)))

    def __hash__(self):
        return hash(self.canonical())

    def canonical(self):
        """Scale-invariant integer tuple: coprime, first nonzero positive."""
        return clear_denominators(self.coords)

    def __repr__(self):
        return "[" + " : ".join(rat_str(x) for x in self.coords) + "]"

    def nonzero_count(self):
        return sum(1 for x in self.coords if x)

    def delta_index(self):
        """Smallest i such that the point lies in Delta_i.

        Delta_i is the locus of points with at most i+1 nonzero coordinates,
        so this is simply (number of nonzero coordinates) - 1.
        """
        return self.nonzero_count() - 1

    def hadamard(self, other):
        """Coordinatewise product, or None when every product vanishes.

        The undefined outcome is a legitimate result, not an error: it occurs
        exactly when the two supports are disjoint.
        """
        if not isinstance(other, PPoint):
            raise TypeError("expected a PPoint")
        if len(self.coords) != len(other.coords):
            raise ValueError("ambient dimensions differ")
        prod = tuple(a * b for a, b in zip(self.coords, other.coords))
        if not any(prod):
            return None
        return PPoint(prod)

    def __mul__(self, other):
        return self.hadamard(other)

    def to_json(self):
        return [rat_str(x) for x in self.coords]

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(str(x)) for x in data])


def hadamard_point(p, q):
    """Module-level alias of PPoint.hadamard."""
    return p.hadamard(q)


def delta_index(p):
    return p.delta_index()


def all_ones_point(n):
    """The identity for the Hadamard product (the 0-th power of anything)."""
    return PPoint([Fraction(1)] * (n + 1))


class LinSpace:
    """A projective linear space presented by a full-row-rank generator matrix."""

    __slots__ = ("generators",)

    def __init__(self, generators):
        mat = generators if isinstance(generators, QMatrix) else QMatrix(generators)
        if mat.nrows == 0:
            raise ValueError("a linear space needs at least one generator row")
        if mat.rank() != mat.nrows:
            raise ValueError("generator matrix does not have full row rank")
        self.generators = mat

    @classmethod
    def span_of(cls, rows):
        """Row space of arbitrary rows; None if they all vanish."""
        mat = rows if isinstance(rows, QMatrix) else QMatrix(rows)
        basis = mat.row_space_matrix()
        if basis.nrows == 0:
            return None
        return cls(basis)

    @property
    def dim(self):
        return self.generators.nrows - 1

    @property
    def ambient_dim(self):
        return self.generators.ncols - 1

    def contains(self, point):
        if len(point.coords) != self.generators.ncols:
            raise ValueError("ambient dimensions differ")
        stacked = self.generators.stack(QMatrix([point.coords]))
        return stacked.rank() == self.generators.nrows

    def contains_space(self, other):
        stacked = self.generators.stack(other.generators)
        return stacked.rank() == self.generators.nrows

    def __eq__(self, other):
        if not isinstance(other, LinSpace):
            return False
        if self.generators.ncols != other.generators.ncols or self.dim != other.dim:
            return False
        return self.contains_space(other)

    def __hash__(self):
        return hash(self.generators.row_space_matrix())

    def __repr__(self):
        return "LinSpace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def equation_matrix(self):
        """Rows of linear-form coefficients cutting out this space."""
        return QMatrix(self.generators.nullspace())

    def to_json(self):
        return [[rat_str(x) for x in row] for row in self.generators.rows]

    @classmethod
    def from_json(cls, data):
        return cls([[Fraction(str(x)) for x in row] for row in data])


def intersect_spaces(spaces):
    """Intersection of linear spaces as a LinSpace, or None when empty.

    Computed as the kernel of the stacked dual equations: exact and
    dimension-revealing in a single rank computation.
    """
    if not spaces:
        raise ValueError("need at least one space")
    rows = []
    for sp in spaces:
        rows.extend(sp.equation_matrix().rows)
    if not rows:
        return spaces[0]
    kernel = QMatrix(rows).nullspace()
    if not kernel:
        return None
    return LinSpace(QMatrix(kernel))


def point_times_space(p, space):
    """Hadamard product of a point with a linear space.

    Scales column j of the generator matrix by p_j.  The result is the row
    space of the scaled matrix: a linear space of dimension at most dim(L),
    with equality when p avoids Delta_{n-1}; it is None (empty) when every
    scaled generator vanishes.  When no rank drop occurs the scaled matrix is
    returned as-is, so its maximal minors are exactly the minors of L scaled
    by the products of the corresponding coordinates of p.
    """
    if len(p.coords) != space.generators.ncols:
        raise ValueError("ambient dimensions differ")
    scaled = space.generators.scale_columns(p.coords)
    if scaled.rank() == scaled.nrows:
        return LinSpace(scaled)
    return LinSpace.span_of(scaled)


class PlueckerVector:
    """Maximal minors of a generator matrix, keyed by sorted index tuples."""

    __slots__ = ("ambient_dim", "dim", "entries")

    def __init__(self, ambient_dim, dim, entries):
        self.ambient_dim = int(ambient_dim)
        self.dim = int(dim)
        self.entries = {tuple(k): rat(v) for k, v in entries.items()}
        if not any(self.entries.values()):
            raise ValueError("Pluecker vector cannot be identically zero")

    def bracket(self, indices):
        """Entry at a (possibly unsorted) index tuple, with antisymmetry sign."""
        indices = tuple(indices)
        if len(set(indices)) != len(indices):
            return Fraction(0)
        order = sorted(range(len(indices)), key=lambda i: indices[i])
        sign = _permutation_sign(order)
        return sign * self.entries[tuple(sorted(indices))]

    def nonvanishing(self):
        return all(self.entries.values())

    def __eq__(self, other):
        """Projective equality via pairwise cross products."""
        if not isinstance(other, PlueckerVector):
            return False
        if (self.ambient_dim, self.dim) != (other.ambient_dim, other.dim):
            return False
        keys = sorted(self.entries)
        k0 = next(k for k in keys if self.entries[k] or other.entries[k])
        if not (self.entries[k0] and other.entries[k0]):
            return False
        return all(self.entries[k0] * other.entries[k] == other.entries[k0] * self.entries[k]
                   for k in keys)

    def __repr__(self):
        body = ", ".join("[%s]=%s" % ("".join(map(str, k)), rat_str(v))
                         for k, v in sorted(self.entries.items()))
        return "Pluecker(%s)" % body

    def to_json(self):
        return {",".join(map(str, k)): rat_str(v) for k, v in sorted(self.entries.items())}


def _permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def pluecker(space):
    """Pluecker coordinates of a linear space: all maximal generator minors."""
    gens = space.generators
    k = gens.nrows
    entries = {}
    for cols in combinations(range(gens.ncols), k):
        entries[cols] = gens.submatrix_columns(cols).det()
    return PlueckerVector(space.ambient_dim, space.dim, entries)


def line_through(p, q):
    """The line spanned by two distinct points, keeping them as generators."""
    if p == q:
        raise PreconditionError("the two points coincide projectively")
    return LinSpace([p.coords, q.coords])


def toric_concat(a_rows, b_rows):
    """Stack the exponent matrices of two monomially parametrized varieties.

    Each input must have constant column sums (so that the monomial map is
    well defined on projective space); the stack defines the Hadamard
    product of the two varieties.
    """
    a_rows = [list(map(int, r)) for r in a_rows]
    b_rows = [list(map(int, r)) for r in b_rows]
    if a_rows and b_rows and len(a_rows[0]) != len(b_rows[0]):
        raise ValueError("column count mismatch")
    for name, rows in (("first", a_rows), ("second", b_rows)):
        sums = {sum(col) for col in zip(*rows)}
        if len(sums) > 1:
            raise PreconditionError("%s matrix does not have constant column sums" % name)
    return a_rows + b_rows


def sample_point(space, rng, avoid_delta=None, budget=200):
    """Random rational point of a linear space, deterministic per rng state.

    Draws integer coefficients uniformly from [-SAMPLE_COEFF_BOUND, bound]
    for the generator rows.  With avoid_delta = i, retries until the point
    avoids Delta_i (i.e. has at least i+2 nonzero coordinates); exhausting
    the budget signals that the space is (very likely) contained in Delta_i.
    """
    gens = space.generators
    for _ in range(budget):
        coeffs = [rng.randint(-SAMPLE_COEFF_BOUND, SAMPLE_COEFF_BOUND) for _ in range(gens.nrows)]
        coords = [sum(c * row[j] for c, row in zip(coeffs, gens.rows)) for j in range(gens.ncols)]
        if not any(coords):
            continue
        point = PPoint(coords)
        if avoid_delta is None or point.delta_index() > avoid_delta:
            return point
    raise BudgetExhausted(
        "no sample avoiding Delta_%s in %d draws; the space appears to be contained in it"
        % (avoid_delta, budget))
