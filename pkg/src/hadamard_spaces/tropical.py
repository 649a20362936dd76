"""Weighted balanced fans supported on signed coordinate cones, Minkowski
sums with lattice-index multiplicities, stable intersection multiplicity at
the origin, and the closed-form degree formulas they cross-check.

The tropicalization of a generic m-dimensional linear space is the standard
tropical linear space: the union of positive spans of all m-subsets of the
images of the standard basis vectors in R^(n+1)/R*1, all multiplicities 1.
Reciprocal linear spaces tropicalize to the negated fans.  Restricting to
this cone class keeps every intersection test combinatorial plus a small
exact linear program.
"""

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product as iproduct
from math import comb, factorial, prod

from .linalg import PreconditionError, QMatrix, smith_normal_form

# ---------------------------------------------------------------------------
# cones and fans


@dataclass(frozen=True)
class SignedCone:
    """pos(e_i : i in plus) + neg(e_j : j in minus), with a multiplicity.

    The e_i are images of standard basis vectors in R^(n+1)/R*1; with
    |plus| + |minus| <= n those images are linearly independent, so the
    cone dimension is |plus| + |minus|.
    """

    plus: frozenset
    minus: frozenset
    mult: int = 1

    def __post_init__(self):
        if self.plus & self.minus:
            raise ValueError("plus and minus sets overlap")
        if self.mult <= 0:
            raise ValueError("multiplicity must be positive")

    @property
    def dim(self):
        return len(self.plus) + len(self.minus)

    @property
    def support(self):
        return self.plus | self.minus

    def signed_indices(self):
        return tuple((i, 1) for i in sorted(self.plus)) + tuple((j, -1) for j in sorted(self.minus))

    def sort_key(self):
        return (tuple(sorted(self.plus)), tuple(sorted(self.minus)))


def _quotient_rep(index, sign, n):
    """Image of sign * e_index in Z^(n+1)/Z*1, written in the basis that
    drops coordinate 0 (e_0 maps to minus the sum of the others)."""
    if index == 0:
        return tuple(-sign for _ in range(n))
    vec = [0] * n
    vec[index - 1] = sign
    return tuple(vec)


@dataclass
class SignedConeFan:
    """A pure-dimensional weighted fan of signed coordinate cones.

    Integer cone multiplicities are scaled by one global rational weight,
    which is where the 1/delta of a generically finite parametrization
    lives.
    """

    ambient_dim: int
    dim: int
    cones: list
    global_weight: Fraction = field(default_factory=lambda: Fraction(1))

    def __post_init__(self):
        self.global_weight = Fraction(self.global_weight)
        seen = set()
        for cone in self.cones:
            if cone.dim != self.dim:
                raise ValueError("cone of dim %d in a fan of dim %d" % (cone.dim, self.dim))
            for i in cone.support:
                if not 0 <= i <= self.ambient_dim:
                    raise ValueError("index %d outside ambient range" % i)
            key = cone.sort_key()
            if key in seen:
                raise ValueError("duplicate cone %r" % (cone,))
            seen.add(key)
        self.cones = sorted(self.cones, key=SignedCone.sort_key)

    def is_balanced(self):
        """Exact ridge-balancing test.

        For every ridge, the multiplicity-weighted sum of the primitive
        directions of the facets containing it must lie in the ridge's span.
        """
        n = self.ambient_dim
        if self.dim == 0:
            return True
        ridges = {}
        for cone in self.cones:
            for idx, sign in cone.signed_indices():
                plus = cone.plus - {idx} if sign > 0 else cone.plus
                minus = cone.minus - {idx} if sign < 0 else cone.minus
                key = (tuple(sorted(plus)), tuple(sorted(minus)))
                ridges.setdefault(key, []).append((cone.mult, idx, sign))
        for (plus, minus), facets in ridges.items():
            total = [Fraction(0)] * n
            for mult, idx, sign in facets:
                rep = _quotient_rep(idx, sign, n)
                total = [t + mult * x for t, x in zip(total, rep)]
            span_rows = [_quotient_rep(i, 1, n) for i in plus]
            span_rows += [_quotient_rep(j, -1, n) for j in minus]
            base = QMatrix(span_rows) if span_rows else None
            if base is None:
                if any(total):
                    return False
            else:
                if base.stack(QMatrix([total])).rank() != base.rank():
                    return False
        return True


def standard_tls(m, n):
    """The standard tropical linear space of dimension m in P^n's torus.

    All binom(n+1, m) positive spans of m-subsets of basis images, each
    with multiplicity 1; m = 0 gives the single zero cone.
    """
    if not 0 <= m <= n:
        raise PreconditionError("need 0 <= m <= n, got m=%d, n=%d" % (m, n))
    cones = [SignedCone(frozenset(s), frozenset(), 1) for s in combinations(range(n + 1), m)]
    return SignedConeFan(n, m, cones)


def negate_fan(fan):
    """Pointwise negation: swaps the plus and minus set of every cone."""
    cones = [SignedCone(c.minus, c.plus, c.mult) for c in fan.cones]
    return SignedConeFan(fan.ambient_dim, fan.dim, cones, fan.global_weight)


def lattice_index(cones, ambient_dim):
    """Index of the sum of the cones' lattices inside its saturation.

    The cones' spans must sum transversally (dimension equal to the sum of
    cone dimensions); the index is the product of the nonzero Smith normal
    form entries of the stacked generator matrix.
    """
    n = ambient_dim
    rows = []
    total_dim = 0
    for cone in cones:
        total_dim += cone.dim
        for idx, sign in cone.signed_indices():
            rows.append(_quotient_rep(idx, sign, n))
    if not rows:
        return 1
    if QMatrix(rows).rank() != total_dim:
        raise PreconditionError("non-transversal sum of cones")
    index = 1
    for d in smith_normal_form(rows):
        if d:
            index *= d
    return index


def minkowski_sum(fans, delta=1):
    """Minkowski sum of signed-cone fans with lattice-index multiplicities.

    The multiplicity of each result facet is the sum over ordered
    factorizations into one facet per input fan of the product of their
    multiplicities times the lattice index of the decomposition.
    Factorizations that would reuse a coordinate index (in particular a
    plus/minus clash) are transversality failures and are skipped.  The
    global weight is the product of the input weights divided by delta.
    """
    if not fans:
        raise ValueError("need at least one fan")
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    n = fans[0].ambient_dim
    total_dim = sum(f.dim for f in fans)
    for f in fans:
        if f.ambient_dim != n:
            raise ValueError("ambient dimensions differ")
    if total_dim > n:
        raise PreconditionError("sum of fan dimensions %d exceeds ambient %d" % (total_dim, n))
    mults = {}
    index_cache = {}
    for combo in iproduct(*(f.cones for f in fans)):
        plus = frozenset().union(*(c.plus for c in combo))
        minus = frozenset().union(*(c.minus for c in combo))
        if len(plus) + len(minus) != total_dim or (plus & minus):
            continue
        key = (plus, minus)
        # The stacked generators are determined by the signed support, so
        # the lattice index can be memoized per result cone.
        idx = index_cache.get(key)
        if idx is None:
            idx = lattice_index(combo, n)
            index_cache[key] = idx
        mults[key] = mults.get(key, 0) + prod(c.mult for c in combo) * idx
    cones = [SignedCone(p, m, c) for (p, m), c in mults.items()]
    weight = reduce(lambda acc, f: acc * f.global_weight, fans, Fraction(1, delta))
    return SignedConeFan(n, total_dim, cones, weight)


# ---------------------------------------------------------------------------
# exact linear feasibility by Fourier-Motzkin elimination


def _fm_feasible(equalities, inequalities, nvars):
    """Decide feasibility of  eq: a.x = b,  ineq: a.x <= b (or < b) over Q.

    equalities: list of (coeff tuple, rhs); inequalities: list of
    (coeff tuple, rhs, strict).  Equalities are eliminated by substitution,
    the rest by Fourier-Motzkin; exact rational arithmetic throughout.
    """
    eqs = [([Fraction(c) for c in a], Fraction(b)) for a, b in equalities]
    ineqs = [([Fraction(c) for c in a], Fraction(b), s) for a, b, s in inequalities]
    alive = list(range(nvars))

    while eqs:
        coeffs, rhs = eqs.pop()
        pivot = next((v for v in alive if coeffs[v]), None)
        if pivot is None:
            if rhs != 0:
                return False
            continue
        pv = coeffs[pivot]
        sol = ([-c / pv for c in coeffs], rhs / pv)  # x_pivot = sol0.x + sol1
        sol[0][pivot] = Fraction(0)

        def substitute(a, b):
            f = a[pivot]
            if not f:
                return a, b
            new = [c + f * s for c, s in zip(a, sol[0])]
            new[pivot] = Fraction(0)
            return new, b - f * sol[1]

        eqs = [substitute(a, b) for a, b in eqs]
        ineqs = [(*substitute(a, b), s) for a, b, s in ineqs]
        alive.remove(pivot)

    for var in list(alive):
        uppers, lowers, rest = [], [], []
        for a, b, s in ineqs:
            if a[var] > 0:
                uppers.append(([c / a[var] for c in a], b / a[var], s))
            elif a[var] < 0:
                lowers.append(([c / -a[var] for c in a], b / -a[var], s))
            else:
                rest.append((a, b, s))
        new = rest
        for ua, ub, us in uppers:
            for la, lb, ls in lowers:
                # -la.x' + x >= -lb  and  ua.x' + x <= ub  combine to:
                a = [u + l for u, l in zip(ua, la)]
                a[var] = Fraction(0)
                new.append((a, ub + lb, us or ls))
        seen = set()
        ineqs = []
        for a, b, s in new:
            key = (tuple(a), b, s)
            if key not in seen:
                seen.add(key)
                ineqs.append((a, b, s))
        alive.remove(var)
        for a, b, s in ineqs:
            if not any(a):
                if b < 0 or (s and b == 0):
                    return False
        ineqs = [(a, b, s) for a, b, s in ineqs if any(a)]

    # Constraints can become constant already during equality substitution;
    # by now every variable has been eliminated one way or the other.
    for a, b, s in ineqs:
        if not any(a) and (b < 0 or (s and b == 0)):
            return False
    return True


class NonGenericVector(PreconditionError):
    """The displacement vector failed a genericity validation."""


def _cone_shift_system(cone1, cone2, v, n, strict):
    """Linear system for sigma1 meet (sigma2 + v), modulo the all-ones line.

    Variables: one nonnegative coefficient per generator of each cone, plus
    one free variable for the quotient by R*1.
    """
    gens1 = cone1.signed_indices()
    gens2 = cone2.signed_indices()
    k = len(gens1) + len(gens2) + 1
    equalities = []
    for c in range(n + 1):
        row = [Fraction(0)] * k
        for t, (idx, sign) in enumerate(gens1):
            if idx == c:
                row[t] = Fraction(sign)
        for t, (idx, sign) in enumerate(gens2):
            if idx == c:
                row[len(gens1) + t] = Fraction(-sign)
        row[-1] = Fraction(-1)
        equalities.append((row, Fraction(v[c])))
    inequalities = []
    for t in range(len(gens1) + len(gens2)):
        row = [Fraction(0)] * k
        row[t] = Fraction(-1)
        inequalities.append((row, Fraction(0), strict))
    return equalities, inequalities, k


def cone_pair_meets(cone1, cone2, v, n, strict=False):
    """Exact feasibility of sigma1 meet (sigma2 + v) via Fourier-Motzkin."""
    equalities, inequalities, k = _cone_shift_system(cone1, cone2, v, n, strict)
    return _fm_feasible(equalities, inequalities, k)


def draw_generic_vector(n, rng):
    """Displacement vector with pairwise distinct prime-ratio coordinates.

    Ratios of distinct primes are automatically pairwise distinct; the
    validation in stable_mult_origin re-checks and callers re-draw on
    rejection anyway.
    """
    primes = _first_primes_from(1009, 2 * (n + 1))
    rng.shuffle(primes)
    return tuple(Fraction(primes[2 * i], primes[2 * i + 1]) for i in range(n + 1))


def _first_primes_from(start, count):
    out = []
    x = start
    while len(out) < count:
        if all(x % p for p in range(2, int(x ** 0.5) + 1)):
            out.append(x)
        x += 1
    return out


def stable_mult_origin(fan_f, fan_g, v, record=None):
    """Multiplicity of the origin in the stable intersection of two fans.

    Sums mult(sigma1) * mult(sigma2) * lattice index over facet pairs of
    complementary span whose shifted cones meet, times both global weights.
    The displacement v is validated, not trusted: coordinates must be
    pairwise distinct, and every candidate pair must meet transversally in
    relative interiors (strict and non-strict feasibility must agree);
    otherwise NonGenericVector is raised and the caller should redraw.
    A list passed as `record` collects the contributing pairs.
    """
    n = fan_f.ambient_dim
    if fan_g.ambient_dim != n:
        raise PreconditionError("ambient dimensions differ")
    if fan_f.dim + fan_g.dim != n:
        raise PreconditionError(
            "fan dimensions %d + %d are not complementary in %d"
            % (fan_f.dim, fan_g.dim, n))
    if len(v) != n + 1:
        raise ValueError("displacement vector has wrong length")
    if len({Fraction(x) for x in v}) != n + 1:
        raise NonGenericVector("displacement coordinates are not pairwise distinct")
    total = 0
    for cone1 in fan_f.cones:
        for cone2 in fan_g.cones:
            if cone1.support & cone2.support:
                # Non-complementary spans: meets only non-generic shifts
                # (it would force two equal coordinates in v).
                continue
            meets = cone_pair_meets(cone1, cone2, v, n, strict=False)
            if not meets:
                continue
            if not cone_pair_meets(cone1, cone2, v, n, strict=True):
                raise NonGenericVector(
                    "shifted cones meet only along a boundary for %r, %r" % (cone1, cone2))
            index = lattice_index([cone1, cone2], n)
            total += cone1.mult * cone2.mult * index
            if record is not None:
                record.append((cone1, cone2, index))
    return total * fan_f.global_weight * fan_g.global_weight


def stable_mult_origin_auto(fan_f, fan_g, rng, attempts=16, record=None):
    """stable_mult_origin with the displacement drawn and re-drawn on rejection.

    When a dict is passed as `record`, the accepted displacement is stored
    under "displacement" and the contributing pairs under "pairs".
    """
    for _ in range(attempts):
        v = draw_generic_vector(fan_f.ambient_dim, rng)
        try:
            pairs = None if record is None else []
            result = stable_mult_origin(fan_f, fan_g, v, record=pairs)
            if record is not None:
                record["displacement"] = v
                record["pairs"] = pairs
            return result
        except NonGenericVector:
            continue
    raise NonGenericVector("no generic displacement found in %d attempts" % attempts)


# ---------------------------------------------------------------------------
# closed-form degrees and the fan pipeline they are checked against


def _multinomial(parts):
    total = sum(parts)
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def genericity_bound(plain, reciprocal=()):
    """Smallest ambient dimension for which the degree formulas are proven."""
    bound = prod(comb(m + r, r) for m, r in plain) if plain else 1
    bound *= prod(comb(m + s, s) for m, s in reciprocal) if reciprocal else 1
    return bound - 1


def degree_linear_products(dims_and_mults, n):
    """Dimension and degree of a Hadamard product of generic linear spaces.

    For a multiset of spaces of dimensions m_k with multiplicities r_k the
    product has dimension sum(m_k r_k) and degree multinomial / prod(r_k!).
    Below the genericity bound a warning is issued (the formula is still
    returned; nothing is asserted there).
    """
    entries = [(int(m), int(r)) for m, r in dims_and_mults]
    for m, r in entries:
        if m < 0 or r < 1:
            raise ValueError("need dimensions >= 0 and multiplicities >= 1")
    m_total = sum(m * r for m, r in entries)
    parts = []
    for m, r in entries:
        parts.extend([m] * r)
    d = _multinomial(parts)
    degree = Fraction(d)
    for _, r in entries:
        degree /= factorial(r)
    bound = genericity_bound(entries)
    if n < bound:
        warnings.warn("ambient dimension %d is below the genericity bound %d "
                      "of the degree formula" % (n, bound))
    return m_total, degree


def degree_with_reciprocals(plain, reciprocal, n):
    """Degree formula extended to reciprocal linear spaces.

    Plain factors of total dimension m and reciprocal factors of total
    dimension mt give a product of dimension m + mt and degree
    binom(n - m, mt) * d/prod(r_k!) * dt/prod(s_l!).
    """
    plain = [(int(m), int(r)) for m, r in plain]
    reciprocal = [(int(m), int(s)) for m, s in reciprocal]
    m = sum(mk * r for mk, r in plain)
    mt = sum(mk * s for mk, s in reciprocal)
    if m + mt > n:
        raise PreconditionError("total dimension %d exceeds ambient %d" % (m + mt, n))
    d = _multinomial([mk for mk, r in plain for _ in range(r)])
    dt = _multinomial([mk for mk, s in reciprocal for _ in range(s)])
    degree = Fraction(comb(n - m, mt) * d * dt)
    for _, r in plain:
        degree /= factorial(r)
    for _, s in reciprocal:
        degree /= factorial(s)
    bound = genericity_bound(plain, reciprocal)
    if n < bound:
        warnings.warn("ambient dimension %d is below the genericity bound %d "
                      "of the degree formula" % (n, bound))
    return m + mt, degree


def fan_degree_pipeline(plain, reciprocal, n, rng, transcript=False):
    """Degree via tropical fans: Minkowski sum + stable intersection.

    Builds one standard tropical linear space per factor (negated for the
    reciprocal ones), forms their Minkowski sum scaled by 1/delta with
    delta = prod(r_k!) * prod(s_l!), and measures the multiplicity of the
    origin against the complementary standard fan.  Entirely independent of
    the closed-form route, which it is used to cross-check.
    """
    plain = [(int(m), int(r)) for m, r in plain]
    reciprocal = [(int(m), int(s)) for m, s in reciprocal]
    m = sum(mk * r for mk, r in plain)
    mt = sum(mk * s for mk, s in reciprocal)
    if m + mt > n:
        raise PreconditionError("total dimension %d exceeds ambient %d" % (m + mt, n))
    fans = []
    delta = 1
    for mk, r in plain:
        fans.extend(standard_tls(mk, n) for _ in range(r))
        delta *= factorial(r)
    for mk, s in reciprocal:
        fans.extend(negate_fan(standard_tls(mk, n)) for _ in range(s))
        delta *= factorial(s)
    summed = minkowski_sum(fans, delta)
    complement = standard_tls(n - m - mt, n)
    record = {} if transcript else None
    degree = stable_mult_origin_auto(summed, complement, rng, record=record)
    result = {"dim": m + mt, "degree": degree}
    if transcript:
        result["fan"] = summed
        result["complement"] = complement
        result["delta"] = delta
        result.update(record)
    return result
