"""Square-free Hadamard powers of finite point sets and star configurations.

A star configuration is the set of binom(m, r) points obtained as all
r-fold intersections of m hyperplanes of an r-dimensional linear space M,
the hyperplanes being in linear general position.  Products of r distinct
collinear points realize exactly such a configuration, with M the r-th
power of the line and the i-th hyperplane p_i * L^(r-1); build_star
constructs that witness and verify_star checks it from first principles.
"""

from itertools import combinations
from math import comb

from .linalg import PreconditionError
from .line_powers import line_power_matrix
from .projective import LinSpace, PPoint, all_ones_point, intersect_spaces, pluecker, point_times_space


class PointSet:
    """A finite set of pairwise distinct projective points."""

    __slots__ = ("points", "ambient_dim")

    def __init__(self, points):
        points = list(points)
        if not points:
            raise ValueError("empty point set")
        self.ambient_dim = points[0].ambient_dim
        seen = {}
        for p in points:
            if p.ambient_dim != self.ambient_dim:
                raise ValueError("ambient dimensions differ")
            key = p.canonical()
            if key in seen:
                raise ValueError("duplicate point %r" % (p,))
            seen[key] = p
        self.points = tuple(points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def canonical_keys(self):
        return frozenset(p.canonical() for p in self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.canonical_keys() == other.canonical_keys()

    def __repr__(self):
        return "PointSet(%d points in P^%d)" % (len(self.points), self.ambient_dim)


class StarWitness:
    """Ambient space M, hyperplanes of M, points, and their generating subsets."""

    __slots__ = ("ambient_space", "hyperplanes", "points", "origin_subsets")

    def __init__(self, ambient_space, hyperplanes, points, origin_subsets=None):
        self.ambient_space = ambient_space
        self.hyperplanes = list(hyperplanes)
        self.points = points
        self.origin_subsets = origin_subsets
        r = ambient_space.dim
        for h in self.hyperplanes:
            if h.dim != r - 1:
                raise PreconditionError("hyperplane of dim %d in a dim-%d space" % (h.dim, r))
            if not ambient_space.contains_space(h):
                raise PreconditionError("hyperplane not contained in the ambient space")
        if len(points) != comb(len(self.hyperplanes), r):
            raise PreconditionError(
                "expected binom(%d, %d) = %d points, got %d"
                % (len(self.hyperplanes), r, comb(len(self.hyperplanes), r), len(points)))


def squarefree_power(zset, r):
    """Products over all r-subsets of distinct points, deduplicated.

    Undefined products are dropped.  Under the collinearity hypotheses of
    the star-configuration theorem the result has exactly binom(m, r)
    points; in general it can be smaller.
    """
    points, _ = squarefree_power_with_subsets(zset, r)
    return points


def squarefree_power_with_subsets(zset, r):
    """squarefree_power plus, for each point, the index subset producing it."""
    if r > len(zset):
        raise PreconditionError("r = %d exceeds the number of points %d" % (r, len(zset)))
    if r < 1:
        raise PreconditionError("r must be >= 1")
    found = {}
    subsets = {}
    for subset in combinations(range(len(zset.points)), r):
        prod = None
        for i in subset:
            p = zset.points[i]
            prod = p if prod is None else prod.hadamard(p)
            if prod is None:
                break
        if prod is None:
            continue
        key = prod.canonical()
        if key not in found:
            found[key] = prod
            subsets[key] = subset
    points = PointSet(found.values())
    return points, [subsets[p.canonical()] for p in points]


def build_star(zset, line, r):
    """Star-configuration witness for the square-free power of collinear points.

    Hypotheses, checked eagerly and reported individually:
      * line is a line containing every point of zset;
      * r <= min(|zset|, n);
      * no Pluecker bracket of the line vanishes (the line avoids the
        codimension-2 coordinate strata);
      * every point of zset has all coordinates nonzero.
    """
    n = line.ambient_dim
    if line.dim != 1:
        raise PreconditionError("second argument must be a line")
    if zset.ambient_dim != n:
        raise PreconditionError("ambient dimensions differ")
    if r > min(len(zset), n):
        raise PreconditionError("r = %d exceeds min(|Z|, n) = %d" % (r, min(len(zset), n)))
    if r < 1:
        raise PreconditionError("r must be >= 1")
    pl = pluecker(line)
    for key in sorted(pl.entries):
        if not pl.entries[key]:
            raise PreconditionError("bracket [%d,%d] of the line vanishes" % key)
    for idx, p in enumerate(zset.points):
        if not line.contains(p):
            raise PreconditionError("point #%d = %r does not lie on the line" % (idx, p))
        if p.nonzero_count() != n + 1:
            raise PreconditionError("point #%d = %r has a zero coordinate" % (idx, p))

    ambient = LinSpace(line_power_matrix(line, r))
    if r == 1:
        factor = LinSpace([all_ones_point(n).coords])
    else:
        factor = LinSpace(line_power_matrix(line, r - 1))
    hyperplanes = [point_times_space(p, factor) for p in zset.points]
    points, origin_subsets = squarefree_power_with_subsets(zset, r)
    return StarWitness(ambient, hyperplanes, points, origin_subsets)


def verify_general_position(hyperplanes, ambient):
    """Check linear general position of codimension-1 subspaces of M.

    True iff every j-fold intersection (j <= r = dim M) has dimension r - j
    and every (r+1)-fold intersection is empty.  On failure the certificate
    is the first violating index tuple.
    """
    r = ambient.dim
    for h in hyperplanes:
        if h.dim != r - 1:
            raise PreconditionError("hyperplane has dim %d, expected %d" % (h.dim, r - 1))
        if not ambient.contains_space(h):
            raise PreconditionError("hyperplane not contained in the ambient space")
    m = len(hyperplanes)
    for j in range(2, min(m, r + 1) + 1):
        want = r - j
        for subset in combinations(range(m), j):
            meet = intersect_spaces([hyperplanes[i] for i in subset])
            got = -1 if meet is None else meet.dim
            if j <= r:
                if got != want:
                    return False, subset
            else:
                if meet is not None:
                    return False, subset
    return True, None


def verify_star(witness):
    """Full check of the star-configuration property of a witness.

    General position must hold and the witness point set must equal the
    union of all r-fold intersections of the hyperplanes, each intersection
    being a single point.
    """
    ok, _ = verify_general_position(witness.hyperplanes, witness.ambient_space)
    if not ok:
        return False
    r = witness.ambient_space.dim
    keys = set()
    for subset in combinations(range(len(witness.hyperplanes)), r):
        meet = intersect_spaces([witness.hyperplanes[i] for i in subset])
        if meet is None or meet.dim != 0:
            return False
        keys.add(PPoint(meet.generators.rows[0]).canonical())
    return keys == set(witness.points.canonical_keys())
