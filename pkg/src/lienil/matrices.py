"""Generic n x n matrices over a ring, transitive matrices, and the
Hadamard automorphisms Theta_T and the entrywise extension delta_n."""

from __future__ import annotations

from fractions import Fraction

from .rings import ContextMismatchError, Ring, RingError, check_same_ring
from .scalars import Cyc


class MatrixError(RingError):
    pass


class Matrix:
    """Row-major dense matrix; entries share one ring."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise MatrixError("empty matrix")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise MatrixError("ragged rows")
            for e in r:
                if e.ring != ring:
                    raise ContextMismatchError("entry from a different ring")
        self.ring = ring
        self.rows = rows

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)]
                          for i in range(n)])

    @classmethod
    def zeros(cls, ring, n, m=None):
        m = n if m is None else m
        return cls(ring, [[ring.zero] * m for _ in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        """1-based access, matching the written index conventions."""
        return self.rows[i - 1][j - 1]

    def _check_shape(self, other, same=True):
        check_same_ring(self, other)
        if same and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise MatrixError("dimension mismatch")

    def __add__(self, other):
        self._check_shape(other)
        return Matrix(self.ring, [[a + b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix(self.ring, [[a - b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check_shape(other, same=False)
            if self.ncols != other.nrows:
                raise MatrixError("dimension mismatch in product")
            cols = list(zip(*other.rows))
            return Matrix(self.ring, [
                [_dot(row, col, self.ring) for col in cols] for row in self.rows])
        return self.map_entries(lambda e: e * other)

    def __rmul__(self, other):
        return self.map_entries(lambda e: other * e)

    def __pow__(self, k):
        if not self.is_square:
            raise MatrixError("powers need a square matrix")
        out = Matrix.identity(self.ring, self.nrows)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring, self.rows))

    def scalar_mul(self, c):
        if isinstance(c, (int, Fraction, Cyc)):
            c = self.ring.from_scalar(c)
        return self.map_entries(lambda e: c * e)

    def map_entries(self, f, ring=None):
        return Matrix(ring or self.ring, [[f(e) for e in r] for r in self.rows])

    def trace(self):
        if not self.is_square:
            raise MatrixError("trace needs a square matrix")
        acc = self.ring.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def minor(self, i, j):
        """Delete row i and column j (1-based)."""
        return Matrix(self.ring,
                      [[e for cj, e in enumerate(r, start=1) if cj != j]
                       for ri, r in enumerate(self.rows, start=1) if ri != i])

    def __repr__(self):
        body = "; ".join("[" + ", ".join(repr(e) for e in r) + "]" for r in self.rows)
        return f"Matrix({body})"


def _dot(row, col, ring):
    acc = ring.zero
    for a, b in zip(row, col):
        acc = acc + a * b
    return acc


def hadamard(A, B):
    """Entrywise product [a_ij * b_ij]."""
    A._check_shape(B)
    return Matrix(A.ring, [[a * b for a, b in zip(ra, rb)]
                           for ra, rb in zip(A.rows, B.rows)])


def is_transitive(M):
    """Exhaustive check: t_ii = 1 and t_ij t_jk = t_ik over all triples."""
    if not M.is_square:
        return False
    n = M.nrows
    one = M.ring.one
    for i in range(1, n + 1):
        if M.entry(i, i) != one:
            return False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if M.entry(i, j) * M.entry(j, k) != M.entry(i, k):
                    return False
    return True


class TransitiveMatrix:
    """A square matrix certified transitive; the certificate, when present,
    is a unit sequence g_1..g_n with t_ij = g_i * g_j^{-1}."""

    def __init__(self, matrix, units=None):
        if not matrix.is_square:
            raise MatrixError("transitive matrices are square")
        if not is_transitive(matrix):
            raise MatrixError("matrix fails the transitivity triple check")
        self.matrix = matrix
        self.units = tuple(units) if units is not None else None

    @property
    def ring(self):
        return self.matrix.ring

    @property
    def n(self):
        return self.matrix.nrows

    def entry(self, i, j):
        return self.matrix.entry(i, j)

    def __eq__(self, other):
        if not isinstance(other, TransitiveMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"TransitiveMatrix({self.matrix!r})"


def transitive_from_units(ring, units):
    """T = [g_i * g_j^{-1}] for a sequence of invertible elements."""
    units = list(units)
    inverses = []
    for g in units:
        inv = ring.try_invert(g)
        if inv is None:
            raise MatrixError("unit sequence contains a non-invertible element")
        inverses.append(inv)
    rows = [[g * inv for inv in inverses] for g in units]
    return TransitiveMatrix(Matrix(ring, rows), units=units)


def factor_transitive(T):
    """Unit sequence g_i = t_{i,1}; reconstruction is checked by the
    TransitiveMatrix round-trip."""
    units = []
    for i in range(1, T.n + 1):
        g = T.entry(i, 1)
        if T.ring.try_invert(g) is None:
            raise MatrixError(f"first-column entry t_{i},1 is not invertible")
        units.append(g)
    return units


def factorization_constant(T, other_units):
    """For a second factorization h_i of T, the constant c with h_i = g_i c;
    returns None if no single constant works."""
    g = factor_transitive(T)
    ring = T.ring
    g1_inv = ring.try_invert(g[0])
    c = g1_inv * other_units[0]
    if all(gi * c == hi for gi, hi in zip(g, other_units)):
        return c
    return None


def blow_up(T, cuts):
    """Replace each entry t_ij by a constant block per the cut sequence
    0 = d_0 < d_1 < ... < d_n = m."""
    cuts = list(cuts)
    if len(cuts) != T.n:
        raise MatrixError("cut sequence must have one entry per row of T")
    full = [0] + cuts
    if any(a >= b for a, b in zip(full, full[1:])):
        raise MatrixError("cut sequence must be strictly increasing from 0")
    m = cuts[-1]

    def block_index(p):
        for i in range(1, len(full)):
            if full[i - 1] < p <= full[i]:
                return i
        raise MatrixError("cut lookup out of range")

    rows = [[T.entry(block_index(p), block_index(q)) for q in range(1, m + 1)]
            for p in range(1, m + 1)]
    return TransitiveMatrix(Matrix(T.ring, rows))


def transitive_square(T):
    """T*T, asserting the identity T^2 = nT."""
    sq = T.matrix * T.matrix
    if sq != T.matrix.scalar_mul(T.n):
        raise MatrixError("certificate broken: T^2 != nT")
    return sq


def _check_central(T):
    for row in T.matrix.rows:
        for e in row:
            if not T.ring.is_central(e):
                raise MatrixError("Theta_T needs central entries in T")


def theta(T, A):
    """Theta_T(A) = T * A (Hadamard); an automorphism for transitive central T."""
    _check_central(T)
    return hadamard(T.matrix, A)


def theta_inverse(T, A):
    """Hadamard multiplication by S = [t_ij^{-1}]."""
    _check_central(T)
    ring = T.ring
    s_rows = []
    for row in T.matrix.rows:
        s_row = []
        for e in row:
            inv = ring.try_invert(e)
            if inv is None:
                raise MatrixError("transitive entry without an inverse")
            s_row.append(inv)
        s_rows.append(s_row)
    return hadamard(Matrix(ring, s_rows), A)


def delta_n(delta, A):
    """Entrywise application of a ring endomorphism."""
    if A.ring != delta.ring:
        raise ContextMismatchError("matrix over a different ring than delta")
    return A.map_entries(delta)


def matrix_units_counterexample(T):
    """For a non-transitive square T over a commutative-enough ring, a pair
    of standard matrix units witnessing that Theta_T is not multiplicative.
    Returns (E_ij, E_jk) or None if T is transitive."""
    ring = T.ring
    n = T.nrows
    one, zero = ring.one, ring.zero

    def unit(i, j):
        return Matrix(ring, [[one if (r, c) == (i, j) else zero
                              for c in range(1, n + 1)] for r in range(1, n + 1)])

    for i in range(1, n + 1):
        if T.entry(i, i) != one:
            return unit(i, i), unit(i, i)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if T.entry(i, j) * T.entry(j, k) != T.entry(i, k):
                    return unit(i, j), unit(j, k)
    return None


class MatrixRing(Ring):
    """M_n(R) as a ring whose elements are Matrix objects."""

    def __init__(self, base, n):
        self.base = base
        self.n = n
        self.field = base.field

    def __eq__(self, other):
        return (isinstance(other, MatrixRing)
                and other.base == self.base and other.n == self.n)

    def __hash__(self):
        return hash(("MatrixRing", self.base, self.n))

    def __repr__(self):
        return f"MatrixRing({self.base!r}, n={self.n})"

    @property
    def zero(self):
        return Matrix.zeros(self.base, self.n)

    @property
    def one(self):
        return Matrix.identity(self.base, self.n)

    def from_scalar(self, c):
        return self.one.scalar_mul(self.base.from_scalar(c))

    def is_central(self, M):
        # central matrices over a ring with central-scalar entries: c*I
        d = M.rows[0][0]
        if not self.base.is_central(d):
            return False
        return M == Matrix.identity(self.base, self.n).map_entries(lambda e: e * d)

    def try_invert(self, M):
        return None  # not needed at desk scale

    def generating_set(self):
        gens = []
        for g in self.base.generating_set():
            rows = [[g if (i, j) == (0, 0) else self.base.zero
                     for j in range(self.n)] for i in range(self.n)]
            gens.append(Matrix(self.base, rows))
        return gens

    def random_element(self, rng):
        return Matrix(self.base, [[self.base.random_element(rng)
                                   for _ in range(self.n)] for _ in range(self.n)])
