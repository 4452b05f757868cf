"""Exact linear algebra over Q and Z: subspaces, lattices, Pluecker coordinates.

Everything is computed with ``fractions.Fraction`` / ``int`` arithmetic; there
are no floats anywhere.  The two central canonical forms are

* :class:`RationalSubspace` — a linear subspace of Q^n stored as the reduced
  row echelon form (RREF) of any spanning set, so two subspaces are equal as
  sets if and only if their stored bases are identical, and

* :class:`IntegerLattice` — a subgroup of Z^n stored in row-style Hermite
  normal form (lower triangular shape: each row's last nonzero entry is its
  pivot, pivot columns strictly increase, pivots are positive, and the entries
  below a pivot in its column are reduced into ``[0, pivot)``).

On top of these the module provides the lattice-coset membership test
``lambda in V + Z^n`` (the decidable core of every "does this character lie on
that algebraic subtorus" question downstream), Pluecker coordinates of
subspaces, and the linear equations cutting out the locus of r-planes meeting
a fixed subspace nontrivially.

>>> V = RationalSubspace.from_rows([(1, 1)], 2)
>>> lattice_coset_membership((Fraction(1, 2), Fraction(1, 2)), V)
True
>>> lattice_coset_membership((Fraction(1, 2), 0), V)
False
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def vec_dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat_mul_vec(rows: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(sum((Fraction(r[j]) * Fraction(v[j]) for j in range(len(v))),
                     Fraction(0)) for r in rows)


def clear_denominators(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational row by the lcm of denominators (primitive direction)."""
    den = 1
    for x in row:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def rref(rows: Iterable[Iterable]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    work = [list(vec(r)) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in work[:rank]), tuple(pivots)


# ---------------------------------------------------------------------------
# rational subspaces
# ---------------------------------------------------------------------------

class RationalSubspace:
    """A linear subspace of Q^n in canonical (RREF) form.

    Equality and hashing are representation equality, which by canonicity
    coincides with equality of the underlying point sets.

    >>> A = RationalSubspace.from_rows([(2, 4), (1, 2)], 2)
    >>> A.basis
    ((Fraction(1, 1), Fraction(2, 1)),)
    >>> A == RationalSubspace.from_rows([(-3, -6)], 2)
    True
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...],
                 _checked: bool = False):
        if not _checked:
            basis, pivots = rref(basis if basis else ())
        self.ambient_dim = int(ambient_dim)
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ambient_dim: Optional[int] = None
                  ) -> "RationalSubspace":
        rows = [vec(r) for r in rows]
        if ambient_dim is None:
            if not rows:
                raise ValueError("ambient dimension required for an empty row set")
            ambient_dim = len(rows[0])
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("rows of unequal length")
        basis, pivots = rref(rows)
        return cls(ambient_dim, basis, pivots, _checked=True)

    @classmethod
    def zero(cls, n: int) -> "RationalSubspace":
        return cls(n, (), (), _checked=True)

    @classmethod
    def full(cls, n: int) -> "RationalSubspace":
        rows = tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                     for i in range(n))
        return cls(n, rows, tuple(range(n)), _checked=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalSubspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"RationalSubspace({self.ambient_dim}, [{rows}])"

    def contains_vector(self, v: Sequence) -> bool:
        v = list(vec(v))
        for row, p in zip(self.basis, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def reduce_vector(self, v: Sequence) -> Vector:
        """v minus the unique element of the subspace matching v on pivots."""
        v = list(vec(v))
        for row, p in zip(self.basis, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, other: "RationalSubspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "RationalSubspace") -> "RationalSubspace":
        self._check_ambient(other)
        return RationalSubspace.from_rows(
            list(self.basis) + list(other.basis), self.ambient_dim)

    def intersect(self, other: "RationalSubspace") -> "RationalSubspace":
        """Intersection via the kernel of the stacked coefficient matrix.

        A vector of the intersection is c . basisA where the stacked system
        [basisA^T | -basisB^T] has a kernel element (c, d).
        """
        self._check_ambient(other)
        a, b = self.basis, other.basis
        if not a or not b:
            return RationalSubspace.zero(self.ambient_dim)
        rows = []
        for i in range(self.ambient_dim):
            rows.append([x[i] for x in a] + [-y[i] for y in b])
        kernel = nullspace(rows, len(a) + len(b))
        combos = []
        for k in kernel:
            coeffs = k[: len(a)]
            combos.append(tuple(
                sum((c * row[i] for c, row in zip(coeffs, a)), Fraction(0))
                for i in range(self.ambient_dim)))
        return RationalSubspace.from_rows(combos, self.ambient_dim)

    def perp(self) -> "RationalSubspace":
        """Orthogonal complement {w : w . x = 0 for all x in the subspace}."""
        if not self.basis:
            return RationalSubspace.full(self.ambient_dim)
        return RationalSubspace.from_rows(
            nullspace(self.basis, self.ambient_dim), self.ambient_dim)

    def _check_ambient(self, other: "RationalSubspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")


def nullspace(rows: Iterable[Iterable], n: int) -> list[Vector]:
    """Basis of {x in Q^n : rows @ x = 0}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(tuple(v))
    return basis


def canonicalize(rows: Iterable[Iterable], ambient_dim: Optional[int] = None
                 ) -> RationalSubspace:
    """Spanning rows -> canonical subspace."""
    return RationalSubspace.from_rows(rows, ambient_dim)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms
# ---------------------------------------------------------------------------

def hnf(rows: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...],
                                                tuple[tuple[int, ...], ...]]:
    """Row-style Hermite normal form with unimodular witness: H = U @ M.

    Shape convention: pivots are each row's *last* nonzero entry, pivot
    columns strictly increase down the matrix (lower-triangular in the square
    nonsingular case), pivots are positive, entries below a pivot are reduced
    into ``[0, pivot)``.  Zero rows, if any, are moved to the bottom.

    >>> H, U = hnf([[1, 2], [0, 3]])
    >>> H
    ((3, 0), (2, 1))
    """
    work = [list(map(int, row)) for row in rows]
    m = len(work)
    n = len(work[0]) if work else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    active = list(range(m))           # indices into work, still pivot-less
    pivot_rows: list[int] = []        # collected right-to-left

    for col in range(n - 1, -1, -1):
        carriers = [i for i in active if work[i][col] != 0]
        if not carriers:
            continue
        # combine all carriers into one row with the gcd at this column
        base = carriers[0]
        for other in carriers[1:]:
            a, b = work[base][col], work[other][col]
            g, x, y = _xgcd(a, b)
            # rows: base' = x*base + y*other ; other' = -(b/g)*base + (a/g)*other
            rb, ro = work[base], work[other]
            ub, uo = u[base], u[other]
            nb = [x * p + y * q for p, q in zip(rb, ro)]
            no = [-(b // g) * p + (a // g) * q for p, q in zip(rb, ro)]
            nub = [x * p + y * q for p, q in zip(ub, uo)]
            nuo = [-(b // g) * p + (a // g) * q for p, q in zip(ub, uo)]
            work[base], work[other] = nb, no
            u[base], u[other] = nub, nuo
        if work[base][col] < 0:
            work[base] = [-x for x in work[base]]
            u[base] = [-x for x in u[base]]
        active.remove(base)
        pivot_rows.insert(0, base)

    order = pivot_rows + active       # zero rows last
    work = [work[i] for i in order]
    u = [u[i] for i in order]

    # Reduce entries below each pivot into [0, pivot).  Rightmost pivot
    # first: reducing with row i only touches columns <= pivcol(i), so
    # earlier (further right) reductions are never disturbed.
    pivcols = []
    for row in work[: len(pivot_rows)]:
        c = max(j for j in range(n) if row[j] != 0)
        pivcols.append(c)
    for i in range(len(pivcols) - 1, -1, -1):
        c = pivcols[i]
        p = work[i][c]
        for k in range(i + 1, m):
            f = work[k][c] // p       # floor division: remainder in [0, p)
            if f:
                work[k] = [a - f * b for a, b in zip(work[k], work[i])]
                u[k] = [a - f * b for a, b in zip(u[k], u[i])]
    return tuple(tuple(r) for r in work), tuple(tuple(r) for r in u)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with g = gcd(a,b) = a x + b y, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def snf(rows: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...],
                                                tuple[tuple[int, ...], ...],
                                                tuple[tuple[int, ...], ...]]:
    """Smith normal form with witnesses: S = U @ M @ V.

    S is diagonal with nonnegative entries in a divisibility chain
    d1 | d2 | ... ; U and V are unimodular.  A zero input yields S = 0 with
    U, V identity matrices (so the free projection read off V is the
    identity for commutator-only relator matrices).

    >>> S, U, V = snf([[2, 4], [6, 8]])
    >>> (S[0][0], S[1][1])
    (2, 4)
    """
    a = [list(map(int, row)) for row in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):              # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):              # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while True:
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    piv, best = (i, j), abs(a[i][j])
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:       # remainder became the smaller pivot
                        swap_rows(t, i)
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
            if (all(a[i][t] == 0 for i in range(t + 1, m))
                    and all(a[t][j] == 0 for j in range(t + 1, n))):
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    # Enforce the divisibility chain d_i | d_{i+1}.  At this point the matrix
    # is diagonal, so each repair only touches the 2x2 block (i, i+1):
    # add column i+1 to column i, row-mix to put gcd/lcm on the diagonal,
    # then clear the single off-diagonal residue.
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if x == 0 or y % x == 0:
                continue
            changed = True
            col_op(i, i + 1, -1)      # col_i += col_{i+1}:  block [[x,0],[y,y]]
            g, p, q = _xgcd(x, y)
            a[i], a[i + 1] = ([p * r1 + q * r2 for r1, r2 in zip(a[i], a[i + 1])],
                              [-(y // g) * r1 + (x // g) * r2
                               for r1, r2 in zip(a[i], a[i + 1])])
            u[i], u[i + 1] = ([p * r1 + q * r2 for r1, r2 in zip(u[i], u[i + 1])],
                              [-(y // g) * r1 + (x // g) * r2
                               for r1, r2 in zip(u[i], u[i + 1])])
            # block is now [[g, q*y], [0, lcm]]; g divides q*y
            col_op(i + 1, i, a[i][i + 1] // a[i][i])
            if a[i][i] < 0:
                a[i] = [-e for e in a[i]]
                u[i] = [-e for e in u[i]]
            if a[i + 1][i + 1] < 0:
                a[i + 1] = [-e for e in a[i + 1]]
                u[i + 1] = [-e for e in u[i + 1]]
    return (tuple(tuple(r) for r in a), tuple(tuple(r) for r in u),
            tuple(tuple(r) for r in v))


# ---------------------------------------------------------------------------
# integer lattices
# ---------------------------------------------------------------------------

class IntegerLattice:
    """A subgroup of Z^n with canonical HNF basis (no zero rows).

    >>> L = IntegerLattice.from_rows([[1, 2], [0, 3]], 2)
    >>> L.basis
    ((3, 0), (2, 1))
    >>> L.contains((5, 1))
    True
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis):
        self.ambient_dim = int(ambient_dim)
        self.basis = tuple(tuple(int(x) for x in row) for row in basis)

    @classmethod
    def from_rows(cls, rows, ambient_dim: Optional[int] = None) -> "IntegerLattice":
        rows = [tuple(int(x) for x in r) for r in rows]
        if ambient_dim is None:
            if not rows:
                raise ValueError("ambient dimension required for an empty row set")
            ambient_dim = len(rows[0])
        h, _ = hnf(rows) if rows else ((), ())
        nonzero = [r for r in h if any(r)]
        return cls(ambient_dim, nonzero)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, IntegerLattice)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"IntegerLattice({self.ambient_dim}, {list(self.basis)})"

    def contains(self, v: Sequence[int]) -> bool:
        v = [int(x) for x in v]
        # lower-triangular HNF: back-substitute from the rightmost pivot,
        # since earlier rows also have entries in later rows' pivot columns
        for row in reversed(self.basis):
            c = max(j for j in range(self.ambient_dim) if row[j] != 0)
            if v[c] % row[c] != 0:
                return False
            f = v[c] // row[c]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> IntegerLattice:
    """{x in Z^n : x is orthogonal to every row}; automatically saturated.

    Computed from the unimodular witness of the HNF of the transpose: the
    rows of U facing zero rows of H form a basis of the kernel lattice.
    """
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return IntegerLattice.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    h, u = hnf(transpose)
    kernel_rows = [u[i] for i in range(n) if not any(h[i])]
    return IntegerLattice.from_rows(kernel_rows, n)


def saturated_dual_lattice(space: RationalSubspace) -> IntegerLattice:
    """perp(V) intersected with Z^n (saturated by construction)."""
    int_rows = [clear_denominators(r) for r in space.basis]
    return integer_kernel(int_rows, space.ambient_dim)


def saturated_integer_points(space: RationalSubspace) -> IntegerLattice:
    """V intersected with Z^n — a saturated lattice spanning V."""
    perp_rows = [clear_denominators(r) for r in space.perp().basis]
    return integer_kernel(perp_rows, space.ambient_dim)


# ---------------------------------------------------------------------------
# lattice-coset membership: lambda in V + Z^n ?
# ---------------------------------------------------------------------------

def lattice_coset_solve(lam: Sequence, space: RationalSubspace
                        ) -> Optional[tuple[int, ...]]:
    """An integer vector m with lam - m in V, or None if none exists.

    Criterion: with W a basis of the saturated dual lattice (perp(V) in Z^n),
    lam - m in V  iff  W (lam - m) = 0, so membership asks whether W lam lies
    in the image lattice W Z^n; the witness m is recovered by solving the
    triangular system given by the HNF of W's columns.
    """
    lam = vec(lam)
    n = space.ambient_dim
    if len(lam) != n:
        raise ValueError("character length does not match ambient dimension")
    w = saturated_dual_lattice(space).basis
    if not w:
        return tuple(0 for _ in range(n))
    target = mat_mul_vec(w, lam)
    if any(t.denominator != 1 for t in target):
        # W is saturated, so W lam must be integral for any solution
        return None
    target = [int(t) for t in target]
    # solve W m = target over Z: transform columns of W via HNF of W^T
    wt = [[w[i][j] for i in range(len(w))] for j in range(n)]   # n x r
    h, u = hnf(wt)                    # h = u @ wt, rows of h in HNF shape
    # W m = target  with  m = u^T z  becomes  (h^T) z = target.
    # h^T has one "staircase" column per nonzero row of h; forward-solve.
    z = [0] * n
    residue = list(target)
    for i in range(n):
        row = h[i]
        if not any(row):
            continue
        c = max(j for j in range(len(row)) if row[j] != 0)
        # column i of h^T has its lowest nonzero entry at position c and
        # zeros below; entries above c were produced by earlier pivots.
        if residue[c] % row[c] != 0:
            return None
        z[i] = residue[c] // row[c]
        if z[i]:
            residue = [a - z[i] * b for a, b in zip(residue, row)]
    if any(residue):
        return None
    m = tuple(sum(u[i][k] * z[i] for i in range(n)) for k in range(n))
    # sanity: lam - m must actually lie in V
    assert space.contains_vector(vec_sub(lam, vec(m)))
    return m


def lattice_coset_membership(lam: Sequence, space: RationalSubspace) -> bool:
    """Is lam an element of V + Z^n?"""
    return lattice_coset_solve(lam, space) is not None


# ---------------------------------------------------------------------------
# Pluecker coordinates and Schubert incidence equations
# ---------------------------------------------------------------------------

class PluckerVector:
    """Pluecker coordinates of an r-plane in Q^n.

    Coordinates are indexed by the r-element subsets of ``range(n)`` in
    lexicographic order and normalized so the first nonzero coordinate is 1.

    >>> P = RationalSubspace.from_rows([(1, 0, 1, 0), (0, 1, 0, 1)], 4)
    >>> plucker(P).coords
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1))
    """

    __slots__ = ("r", "n", "coords")

    def __init__(self, r: int, n: int, coords: Sequence[Fraction]):
        if len(coords) != math.comb(n, r):
            raise ValueError("wrong number of Pluecker coordinates")
        self.r = int(r)
        self.n = int(n)
        self.coords = tuple(Fraction(x) for x in coords)

    def __eq__(self, other):
        return (isinstance(other, PluckerVector) and self.r == other.r
                and self.n == other.n and self.coords == other.coords)

    def __hash__(self):
        return hash((self.r, self.n, self.coords))

    def __repr__(self):
        return f"PluckerVector(r={self.r}, n={self.n}, {list(self.coords)})"

    @staticmethod
    def subset_order(n: int, r: int) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(n), r))


def _minor(rows: Matrix, col_subset: Sequence[int]) -> Fraction:
    sub = [[row[c] for c in col_subset] for row in rows]
    # LU-free exact determinant by elimination (small matrices)
    k = len(sub)
    det = Fraction(1)
    for col in range(k):
        piv = None
        for i in range(col, k):
            if sub[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            sub[col], sub[piv] = sub[piv], sub[col]
            det = -det
        det *= sub[col][col]
        inv = 1 / sub[col][col]
        for i in range(col + 1, k):
            if sub[i][col] != 0:
                f = sub[i][col] * inv
                sub[i] = [a - f * b for a, b in zip(sub[i], sub[col])]
    return det


def plucker(space: RationalSubspace) -> PluckerVector:
    """Pluecker coordinates of a nonzero subspace (from its RREF basis)."""
    if space.is_zero():
        raise ValueError("the zero subspace has no Pluecker coordinates")
    r, n = space.dim, space.ambient_dim
    coords = [_minor(space.basis, s) for s in itertools.combinations(range(n), r)]
    lead = next((c for c in coords if c != 0), None)
    assert lead is not None
    return PluckerVector(r, n, [c / lead for c in coords])


def schubert_equations(space: RationalSubspace, r: int) -> list[tuple[Fraction, ...]]:
    """Linear forms in Pluecker coordinates vanishing iff an r-plane meets L.

    Each returned form is the Laplace expansion, along the plane's rows, of
    one maximal minor of the stacked matrix (L's basis on top of a basis of
    the plane); the forms vanish simultaneously on plucker(P) exactly when
    rank(stack) < r + dim L, i.e. when P and L intersect nontrivially.
    Coefficient tuples are aligned with ``PluckerVector.subset_order(n, r)``.
    When r + dim L > n the list is empty (every plane meets L).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if space.is_zero():
        raise ValueError("incidence with the zero subspace is vacuous")
    n, s = space.ambient_dim, space.dim
    if r + s > n:
        return []
    subsets = PluckerVector.subset_order(n, r)
    index = {sub: i for i, sub in enumerate(subsets)}
    global_sign = -1 if (sum(range(s + 1, s + r + 1)) % 2) else 1
    forms = []
    for cset in itertools.combinations(range(n), r + s):
        coeffs = [Fraction(0)] * len(subsets)
        pos = {c: i + 1 for i, c in enumerate(cset)}   # 1-based position in cset
        nonzero = False
        for j_subset in itertools.combinations(cset, r):
            comp = tuple(c for c in cset if c not in j_subset)
            minor = _minor(space.basis, comp)
            if minor == 0:
                continue
            sign = -1 if (sum(pos[j] for j in j_subset) % 2) else 1
            coeffs[index[j_subset]] = global_sign * sign * minor
            nonzero = True
        if nonzero:
            forms.append(tuple(coeffs))
    return forms


def evaluate_form(form: Sequence[Fraction], pv: PluckerVector) -> Fraction:
    return sum((c * x for c, x in zip(form, pv.coords)), Fraction(0))


def sigma_membership(plane: RationalSubspace, space: RationalSubspace) -> bool:
    """Does the plane meet the subspace in a nonzero vector?"""
    if plane.ambient_dim != space.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return not plane.intersect(space).is_zero()


# ---------------------------------------------------------------------------
# rational string forms ("p/q") shared by the JSON layer
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
