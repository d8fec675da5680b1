"""Noncommutative determinant theory: symmetric determinant, preadjoint,
right/left adjoint sequences and determinants, characteristic polynomials,
Cayley-Hamilton residuals, and integrality certificates.

All permutation sums follow the position order t = 1..n; the double sum is
evaluated through a deterministic chunked map-reduce.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations

from .matrices import Matrix, MatrixError
from .parallel import map_reduce_sum
from .rings import PolynomialRing, RingError, fixed_ring_member
from .supermatrix import SuperAlgebraSpec, embed, p_matrix

HARD_MAX_N = 6
DEFAULT_MAX_N = 5


class CostCapError(RingError):
    pass


def enumeration_cap():
    try:
        cap = int(os.environ.get("LIENIL_MAX_N", str(DEFAULT_MAX_N)))
    except ValueError:
        cap = DEFAULT_MAX_N
    return min(max(cap, 1), HARD_MAX_N)


def _require_square(A, what):
    if not A.is_square:
        raise MatrixError(f"{what} needs a square matrix")
    if A.nrows > enumeration_cap():
        raise CostCapError(
            f"{what}: n={A.nrows} exceeds the enumeration cap {enumeration_cap()}")


def _sign(perm):
    """Sign of a permutation given as a value tuple."""
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def sdet(A, workers=None):
    """sum over alpha, beta in S_n of sgn(alpha) sgn(beta)
    a_{alpha(1),beta(1)} ... a_{alpha(n),beta(n)}."""
    _require_square(A, "sdet")
    n = A.nrows
    ring = A.ring
    idx = tuple(range(n))
    perms = [(p, _sign(p)) for p in permutations(idx)]
    pairs = [(pa, sa, pb, sb) for pa, sa in perms for pb, sb in perms]

    def term(item):
        pa, sa, pb, sb = item
        prod = ring.one
        for t in range(n):
            prod = prod * A.rows[pa[t]][pb[t]]
        return prod if sa * sb > 0 else -prod

    return map_reduce_sum(pairs, term, ring.zero, workers=workers)


def sdet_first_form(A):
    """The tau/pi form: sum of sgn(pi) a_{tau(1),pi(tau(1))} ... ; equal to
    sdet by a reindexing argument, kept as an independent cross-check."""
    _require_square(A, "sdet")
    n = A.nrows
    ring = A.ring
    acc = ring.zero
    for tau in permutations(range(n)):
        for pi in permutations(range(n)):
            prod = ring.one
            for t in range(n):
                prod = prod * A.rows[tau[t]][pi[tau[t]]]
            acc = acc + (prod if _sign(pi) > 0 else -prod)
    return acc


def preadjoint(A, workers=None):
    """A*: entry (r, s) is the constrained double permutation sum with
    alpha(s) = s and beta(s) = r, enumerated over S_{n-1} on the free
    positions and spliced back into full permutations."""
    _require_square(A, "preadjoint")
    n = A.nrows
    ring = A.ring
    rows = []
    for r in range(n):
        row = []
        for s in range(n):
            row.append(_preadjoint_entry(A, r, s, workers))
        rows.append(row)
    # transpose of the (r, s) table: a*_{r,s} sits at row r, column s already
    return Matrix(ring, rows)


def _preadjoint_entry(A, r, s, workers=None):
    n = A.nrows
    ring = A.ring
    free = [t for t in range(n) if t != s]      # positions and alpha-targets
    beta_targets = [t for t in range(n) if t != r]
    items = []
    for pa in permutations(free):
        alpha = list(range(n))
        for pos, val in zip(free, pa):
            alpha[pos] = val
        sa = _sign(tuple(alpha))
        for pb in permutations(beta_targets):
            beta = list(range(n))
            beta[s] = r
            for pos, val in zip(free, pb):
                beta[pos] = val
            items.append((tuple(alpha), sa, tuple(beta), _sign(tuple(beta))))

    def term(item):
        alpha, sa, beta, sb = item
        prod = ring.one
        for t in free:
            prod = prod * A.rows[alpha[t]][beta[t]]
        return prod if sa * sb > 0 else -prod

    return map_reduce_sum(items, term, ring.zero, workers=workers)


def preadjoint_via_minors(A):
    """Independent route: (r, s) entry as (-1)^(r+s) sdet of the minor
    obtained by deleting row s and column r."""
    _require_square(A, "preadjoint")
    n = A.nrows
    ring = A.ring
    if n == 1:
        return Matrix(ring, [[ring.one]])
    rows = []
    for r in range(1, n + 1):
        row = []
        for s in range(1, n + 1):
            v = sdet(A.minor(s, r))
            row.append(v if (r + s) % 2 == 0 else -v)
        rows.append(row)
    return Matrix(ring, rows)


@dataclass
class AdjointSequence:
    side: str                 # "right" | "left"
    adjoints: list            # P_1..P_k (or Q_1..Q_k)
    products: list            # A P_1...P_j (resp. Q_j...Q_1 A) for j = 1..k


def right_adjoint_sequence(A, k, workers=None):
    """P_1 = A*, P_{j+1} = (A P_1...P_j)*."""
    if k < 1:
        raise RingError("k must be >= 1")
    adjoints = [preadjoint(A, workers)]
    products = [A * adjoints[0]]
    for _ in range(1, k):
        adjoints.append(preadjoint(products[-1], workers))
        products.append(products[-1] * adjoints[-1])
    return AdjointSequence("right", adjoints, products)


def left_adjoint_sequence(A, k, workers=None):
    """Q_1 = A*, Q_{j+1} = (Q_j...Q_1 A)*."""
    if k < 1:
        raise RingError("k must be >= 1")
    adjoints = [preadjoint(A, workers)]
    products = [adjoints[0] * A]
    for _ in range(1, k):
        adjoints.append(preadjoint(products[-1], workers))
        products.append(adjoints[-1] * products[-1])
    return AdjointSequence("left", adjoints, products)


def rdet(A, k, workers=None):
    """tr(A P_1 ... P_k)."""
    return right_adjoint_sequence(A, k, workers).products[-1].trace()


def ldet(A, k, workers=None):
    """tr(Q_k ... Q_1 A)."""
    return left_adjoint_sequence(A, k, workers).products[-1].trace()


def leading_coefficient_value(n, k):
    """n * ((n-1)!)^(1 + n + ... + n^(k-1)) as an integer."""
    fact = 1
    for i in range(2, n):
        fact *= i
    return n * fact ** sum(n ** i for i in range(k))


@dataclass
class CharPoly:
    """Characteristic polynomial with coefficients in the entry ring."""

    ring: object              # the entry ring R
    coeffs: list              # lambda_0 .. lambda_{n^k}, elements of R
    side: str
    k: int
    n: int

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def subst_right(self, x):
        acc = x.ring.zero
        power = x.ring.one
        for i, c in enumerate(self.coeffs):
            if i:
                power = power * x
            acc = acc + power * c
        return acc

    def subst_left(self, x):
        acc = x.ring.zero
        power = x.ring.one
        for i, c in enumerate(self.coeffs):
            if i:
                power = power * x
            acc = acc + c * power
        return acc

    def subst_right_matrix(self, A):
        """I lambda_0 + A lambda_1 + ... with matrix powers on the left."""
        acc = Matrix.zeros(A.ring, A.nrows)
        power = Matrix.identity(A.ring, A.nrows)
        for i, c in enumerate(self.coeffs):
            if i:
                power = power * A
            acc = acc + power * c
        return acc

    def subst_left_matrix(self, A):
        acc = Matrix.zeros(A.ring, A.nrows)
        power = Matrix.identity(A.ring, A.nrows)
        for i, c in enumerate(self.coeffs):
            if i:
                power = power * A
            acc = acc + c * power
        return acc


def charpoly(A, k, side="right", workers=None):
    """p_{A,k}(z) = rdet_(k)(z I - A) (resp. ldet for the left side),
    computed by lifting A to R[z] and reusing the generic determinant code."""
    _require_square(A, "charpoly")
    if side not in ("right", "left"):
        raise RingError("side must be 'right' or 'left'")
    ring = A.ring
    rz = PolynomialRing(ring)
    n = A.nrows
    lifted = A.map_entries(rz.constant, ring=rz)
    zI = Matrix.identity(rz, n) * rz.z
    B = zI - lifted
    value = rdet(B, k, workers) if side == "right" else ldet(B, k, workers)
    deg = n ** k
    coeffs = [value.coeff(i) for i in range(deg + 1)]
    lead = ring.from_scalar(leading_coefficient_value(n, k))
    if value.degree != deg or coeffs[-1] != lead:
        raise RingError("characteristic polynomial leading term mismatch")
    return CharPoly(ring=ring, coeffs=coeffs, side=side, k=k, n=n)


def cayley_hamilton_check(A, k, side="right", workers=None):
    """Residual of the degree-n^k Cayley-Hamilton identity; zero when the
    entry ring is Lie nilpotent of index k (right side)."""
    p = charpoly(A, k, side=side, workers=workers)
    if side == "right":
        return p.subst_right_matrix(A)
    return p.subst_left_matrix(A)


@dataclass
class IntegralityCertificate:
    """Monic degree-n^k relations for r over the fixed ring: the right one
    is c'_0 + r c'_1 + ... + r^(N-1) c'_{N-1} + r^N = 0, the left one has
    the coefficients on the left."""

    degree: int
    right_coeffs: list        # c'_0 .. c'_{N-1}
    left_coeffs: list         # c''_0 .. c''_{N-1}
    right_residual: object
    left_residual: object
    coefficients_fixed: bool

    @property
    def right_holds(self):
        return not self.right_residual

    @property
    def left_holds(self):
        return not self.left_residual


def integrality_certificate(r, delta, n, k, workers=None):
    """Thm-style certificate: embed r via the root-of-unity transitive
    matrix, take the k-th characteristic polynomials of the image, and
    normalize by the invertible integer leading coefficient."""
    ring = r.ring
    e = ring.field.primitive_root(n)
    T = p_matrix(ring, e, n=n)
    spec = SuperAlgebraSpec(ring, delta, T)
    A = embed(spec, r)
    lead = leading_coefficient_value(n, k)
    N = n ** k

    p = charpoly(A, k, side="right", workers=workers)
    q = charpoly(A, k, side="left", workers=workers)
    from fractions import Fraction
    inv_lead = ring.from_scalar(Fraction(1, lead))
    right = [c * inv_lead for c in p.coeffs[:N]]
    left = [c * inv_lead for c in q.coeffs[:N]]

    fixed = all(fixed_ring_member(delta, c) for c in right + left)

    r_res = ring.zero
    power = ring.one
    for i in range(N + 1):
        if i:
            power = power * r
        if i < N:
            r_res = r_res + power * right[i]
        else:
            r_res = r_res + power
    l_res = ring.zero
    power = ring.one
    for i in range(N + 1):
        if i:
            power = power * r
        if i < N:
            l_res = l_res + left[i] * power
        else:
            l_res = l_res + power

    return IntegralityCertificate(
        degree=N, right_coeffs=right, left_coeffs=left,
        right_residual=r_res, left_residual=l_res,
        coefficients_fixed=fixed)
