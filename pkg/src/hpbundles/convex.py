"""Exact convex geometry of weight systems.

The unstable strata of a linearized group action are indexed by the
nonzero points beta that are closest to the origin in the convex hull of
some subset of the torus weights.  At the scale that occurs here (a
handful of rational weight vectors in dimension at most 4) exact
computation is cheap: the minimizer is found by projecting the origin
onto affine hulls of small subsets and checking the global optimality
inequality x.p >= |x|^2 exactly over the rationals.

Whether every adjoint orbit meets the index set of the blown-up
representation in at most one point is a hypothesis on the supplied
system, not something checked here; callers own that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, InternalCheckError


def _vec(values):
    return tuple(Fraction(x) for x in values)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def norm_sq(a):
    return sum(x * x for x in a)


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def _zero(r):
    return tuple(Fraction(0) for _ in range(r))


def solve_linear(matrix, rhs):
    """Solve a square rational system by Gaussian elimination.

    Returns None when the matrix is singular.
    """
    n = len(rhs)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if aug[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1, 1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                factor = aug[row][col]
                aug[row] = [x - factor * y for x, y in zip(aug[row], aug[col])]
    return [aug[i][n] for i in range(n)]


def affine_projection(points):
    """Project the origin onto the affine hull of the given points.

    Returns (x, barycentric coordinates), or None when the points are
    affinely dependent (a smaller subset spans the same hull).
    """
    base = points[0]
    dirs = [vsub(p, base) for p in points[1:]]
    if not dirs:
        return base, (Fraction(1),)
    gram = [[dot(di, dj) for dj in dirs] for di in dirs]
    rhs = [-dot(base, di) for di in dirs]
    ts = solve_linear(gram, rhs)
    if ts is None:
        return None
    x = base
    for t, direction in zip(ts, dirs):
        x = vadd(x, vscale(t, direction))
    coords = (Fraction(1) - sum(ts),) + tuple(ts)
    return x, coords


def min_norm_point(points):
    """The unique point of the convex hull of ``points`` closest to 0.

    Exact over the rationals.  The minimizer lies in the relative
    interior of a face, so it is the projection of the origin onto the
    affine hull of at most dim+1 affinely independent input points; a
    candidate is accepted once the supporting inequality x.p >= |x|^2
    holds for every input point, which characterizes the projection.
    """
    pts = [_vec(p) for p in points]
    if not pts:
        raise DomainError("need at least one point")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise DomainError("points must share a dimension")
    unique = sorted(set(pts))
    for size in range(1, min(len(unique), dim + 1) + 1):
        for subset in combinations(unique, size):
            proj = affine_projection(list(subset))
            if proj is None:
                continue
            x, coords = proj
            if any(c < 0 for c in coords):
                continue
            xx = norm_sq(x)
            if all(dot(x, p) >= xx for p in unique):
                return x
    raise InternalCheckError("projection onto the hull not found; search is incomplete")


@dataclass(frozen=True)
class WeightSystem:
    """Weights (with multiplicities), roots, and a positive-chamber cone.

    dim is the dimension of the ambient rational vector space; chamber
    holds the linear functionals s with the closed chamber given by
    x.s >= 0 for all of them.  Roots must be closed under negation.
    """

    dim: int
    weights: tuple
    roots: tuple
    chamber: tuple

    def __post_init__(self):
        weights = tuple((_vec(v), int(m)) for v, m in self.weights)
        roots = tuple(_vec(r) for r in self.roots)
        chamber = tuple(_vec(s) for s in self.chamber)
        for v, m in weights:
            if len(v) != self.dim:
                raise DomainError("weight dimension mismatch")
            if m < 1:
                raise DomainError("multiplicities must be positive")
        for r in roots:
            if len(r) != self.dim:
                raise DomainError("root dimension mismatch")
            if all(x == 0 for x in r):
                raise DomainError("roots must be nonzero")
        for s in chamber:
            if len(s) != self.dim:
                raise DomainError("chamber functional dimension mismatch")
        if set(roots) != {vscale(Fraction(-1), r) for r in roots}:
            raise DomainError("root system not negation-closed")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "chamber", chamber)

    def distinct_weight_vectors(self):
        seen = []
        for v, _ in self.weights:
            if v not in seen:
                seen.append(v)
        return seen

    def weight_multiplicity(self, v):
        return sum(m for w, m in self.weights if w == v)

    def in_chamber(self, x):
        return all(dot(x, s) >= 0 for s in self.chamber)


@dataclass(frozen=True)
class BetaIndex:
    """A nonzero index point with the weights supporting it."""

    beta: tuple
    support: tuple


def index_set(ws):
    """All nonzero positive-chamber indices of the weight system.

    beta qualifies iff it is the minimum-norm point of the hull of its
    own support {alpha : alpha.beta = |beta|^2}.  Candidate generation
    only needs subsets of at most dim+1 weights: the minimizer over any
    hull lies in a face and already minimizes over the hull of at most
    dim+1 affinely independent vertices of that face.

    Sorted by |beta|^2 then lexicographically.
    """
    vectors = ws.distinct_weight_vectors()
    candidates = set()
    for size in range(1, min(len(vectors), ws.dim + 1) + 1):
        for subset in combinations(vectors, size):
            proj = affine_projection(list(subset))
            if proj is None:
                continue
            x, coords = proj
            if any(c < 0 for c in coords):
                continue
            candidates.add(x)

    out = []
    zero = _zero(ws.dim)
    for beta in candidates:
        if beta == zero:
            continue
        if not ws.in_chamber(beta):
            continue
        bb = norm_sq(beta)
        support = tuple(v for v in vectors if dot(v, beta) == bb)
        if not support:
            continue
        if min_norm_point(support) != beta:
            continue
        out.append(BetaIndex(beta=beta, support=support))
    out.sort(key=lambda b: (norm_sq(b.beta), b.beta))
    return out


def stratum_codim(ws, beta_index):
    """Codimension of the unstable stratum attached to beta.

    Counts the weights strictly below the supporting hyperplane of beta,
    minus the number of roots negative against beta (the dimension of
    G/P for the parabolic attached to beta).
    """
    beta = beta_index.beta
    bb = norm_sq(beta)
    below = sum(m for v, m in ws.weights if dot(v, beta) < bb)
    flipped = sum(1 for r in ws.roots if dot(r, beta) < 0)
    return below - flipped


def _is_positive(vec, chamber):
    """Deterministic positivity: first nonzero pairing against the chamber
    functionals, falling back to the lexicographic sign of vec."""
    for s in chamber:
        t = dot(vec, s)
        if t > 0:
            return True
        if t < 0:
            return False
    for x in vec:
        if x > 0:
            return True
        if x < 0:
            return False
    return False


def shifted_system(ws, beta):
    """The weight system seen by the stabilizer of beta on the support
    locus: supporting weights translated by -beta, roots orthogonal to
    beta, chamber cut out by the surviving positive roots."""
    bb = norm_sq(beta)
    weights = tuple(
        (vsub(v, beta), m) for v, m in ws.weights if dot(v, beta) == bb
    )
    roots = tuple(r for r in ws.roots if dot(r, beta) == 0)
    chamber = tuple(r for r in roots if _is_positive(r, ws.chamber))
    return WeightSystem(dim=ws.dim, weights=weights, roots=roots, chamber=chamber)


def beta_sequences(ws, max_len):
    """All sequences (beta_1, ..., beta_q), q <= max_len, where each step
    is an index of the system successively shifted into stabilizers.

    Returned as tuples of vectors, depth-first in index order.
    """
    if max_len < 1:
        return []
    out = []
    for bi in index_set(ws):
        out.append((bi.beta,))
        if max_len > 1:
            sub = shifted_system(ws, bi.beta)
            for tail in beta_sequences(sub, max_len - 1):
                out.append((bi.beta,) + tail)
    return out


def d_beta_sequence(ws, seq):
    """Accumulated codimension of a sequence: at each step count the
    weights dropping strictly below the new supporting hyperplane among
    those supporting all earlier steps, minus half the roots newly moved
    off the common stabilizer."""
    if not seq:
        raise DomainError("empty sequence")
    seq = tuple(_vec(b) for b in seq)
    total = 0
    weights = list(ws.weights)
    roots = list(ws.roots)
    shift = _zero(ws.dim)
    for beta in seq:
        bb = norm_sq(beta)
        e_j = sum(m for v, m in weights if dot(vsub(v, shift), beta) < bb)
        killed = [r for r in roots if dot(r, beta) != 0]
        if len(killed) % 2:
            raise DomainError("root system not negation-closed")
        total += e_j - len(killed) // 2
        weights = [(v, m) for v, m in weights if dot(vsub(v, shift), beta) == bb]
        roots = [r for r in roots if dot(r, beta) == 0]
        shift = vadd(shift, beta)
    return total
